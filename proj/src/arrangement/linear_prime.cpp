#include <algorithm>
#include <map>

#include "starci/arrangement.hpp"

namespace starci {

LinearPrime::LinearPrime(const Arrangement& arrangement, std::span<const std::size_t> spanning_forms)
    : field_(arrangement.field()), num_vars_(arrangement.num_vars()) {
  std::vector<Row> rows;
  for (std::size_t i : spanning_forms) rows.push_back(arrangement.form(i).coefficients());
  rows_ = row_reduce(std::move(rows));
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    if (contains(arrangement.form(i))) support_.push_back(i);
  }
}

bool LinearPrime::contains(const LinearForm& form) const {
  return in_row_space(rows_, form.coefficients());
}

bool LinearPrime::contains(const Polynomial& f) const {
  // Reduced echelon rows are a reduced Groebner basis under grevlex: each
  // pivot is its row's leading variable and occurs in no other row.
  std::vector<Polynomial> basis;
  for (const Row& r : rows_) basis.push_back(Polynomial::linear(r));
  return reduce(f.with_order(MonomialOrder::grevlex()), basis).is_zero();
}

Ideal LinearPrime::ideal() const {
  std::vector<Polynomial> gens;
  for (const Row& r : rows_) gens.push_back(Polynomial::linear(r));
  return Ideal(field_, num_vars_, std::move(gens));
}

std::string LinearPrime::to_string(std::span<const std::string> names) const {
  std::string out = "<";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ", ";
    out += Polynomial::linear(rows_[i]).to_string(names);
  }
  return out + ">";
}

std::vector<LinearPrime> minimal_linear_primes(const Arrangement& arrangement, std::size_t j) {
  const std::size_t n = arrangement.size();
  if (j >= n) {
    throw UsageError("j=" + std::to_string(j) + " outside 0.." + std::to_string(n - 1));
  }
  // A linear prime contains I(A, n-j) iff every (n-j)-subset of forms meets
  // it, i.e. iff it contains at least j+1 forms. Candidates are spans of
  // independent subsets, keyed by their support.
  const std::size_t max_rank = rank(arrangement);
  std::map<std::vector<std::size_t>, LinearPrime> candidates;
  for (std::size_t r = 1; r <= max_rank; ++r) {
    for (const auto& subset : combinations(n, r)) {
      if (subset_rank(arrangement, subset) != r) continue;
      LinearPrime prime(arrangement, subset);
      if (prime.support().size() < j + 1) continue;
      candidates.try_emplace(prime.support(), std::move(prime));
    }
  }
  // Spans of forms are ordered by inclusion exactly as their supports are.
  std::vector<LinearPrime> minimal;
  for (const auto& [support, prime] : candidates) {
    bool is_minimal = std::none_of(candidates.begin(), candidates.end(), [&](const auto& other) {
      const auto& s = other.first;
      return s.size() < support.size() &&
             std::includes(support.begin(), support.end(), s.begin(), s.end());
    });
    if (is_minimal) minimal.push_back(prime);
  }
  std::sort(minimal.begin(), minimal.end(), [](const LinearPrime& a, const LinearPrime& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.support() < b.support();
  });
  return minimal;
}

Ideal combinatorial_radical(const Arrangement& arrangement, std::size_t j, const Budget* budget) {
  const auto primes = minimal_linear_primes(arrangement, j);
  Ideal result = primes.front().ideal();
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (budget) budget->check();
    result = intersect(result, primes[i].ideal(), budget);
  }
  // Replace the elimination output by its reduced basis for stable printing.
  return Ideal(arrangement.field(), arrangement.num_vars(), result.groebner_basis(MonomialOrder::grevlex(), budget));
}

std::size_t height_afold(const Arrangement& arrangement, std::size_t j) {
  return minimal_linear_primes(arrangement, j).front().height();
}

}  // namespace starci
