#ifndef STARCI_BUDGET_HPP
#define STARCI_BUDGET_HPP

#include <chrono>
#include <optional>

namespace starci {

/// Wall-clock deadline shared by long-running computations. A default
/// Budget never expires.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  explicit Budget(std::chrono::duration<double> limit)
      : deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(limit)) {}

  static Budget unlimited() { return Budget{}; }

  bool expired() const { return deadline_ && Clock::now() >= *deadline_; }

  /// Throws BudgetExceeded once the deadline has passed.
  void check() const;

 private:
  std::optional<Clock::time_point> deadline_;
};

}  // namespace starci

#endif  // STARCI_BUDGET_HPP
