#ifndef STARCI_STCI_PARALLEL_HPP
#define STARCI_STCI_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "starci/errors.hpp"

namespace starci::detail {

/// Evaluates check(i) for i in [0, count) on a small worker pool. Slots stay
/// empty for checks that were not reached because the budget ran out, in
/// which case budget_exceeded is set. Other exceptions are rethrown.
template <class Check>
std::vector<std::optional<bool>> run_checks(std::size_t count, Check check, bool& budget_exceeded) {
  std::vector<std::optional<bool>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = check(i);
      } catch (const BudgetExceeded&) {
        stop = true;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };

  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  budget_exceeded = budget_exceeded ||
                    std::any_of(results.begin(), results.end(), [](const auto& r) { return !r; });
  return results;
}

}  // namespace starci::detail

#endif  // STARCI_STCI_PARALLEL_HPP
