#ifndef STARCI_TESTS_RANDOM_POLY_HPP
#define STARCI_TESTS_RANDOM_POLY_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "starci/polynomial.hpp"

namespace starci::testing {

/// Small random polynomials for property tests. Coefficients are drawn from
/// [-coeff_range, coeff_range] and reduced into the field.
class PolyGen {
 public:
  PolyGen(FieldSpec field, std::size_t num_vars, std::uint64_t seed, int coeff_range = 5)
      : field_(field), num_vars_(num_vars), rng_(seed), coeff_range_(coeff_range) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Scalar scalar() { return Scalar::from_int(field_, uniform(-coeff_range_, coeff_range_)); }

  Scalar nonzero_scalar() {
    for (;;) {
      Scalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }

  Monomial monomial(int max_degree) {
    std::vector<int> e(num_vars_, 0);
    int budget = uniform(0, max_degree);
    for (int d = 0; d < budget; ++d) ++e[uniform(0, static_cast<int>(num_vars_) - 1)];
    return Monomial(std::span<const int>(e));
  }

  Polynomial poly(int max_degree, int max_terms,
                  MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<Term> terms;
    int count = uniform(1, max_terms);
    for (int i = 0; i < count; ++i) terms.push_back({monomial(max_degree), scalar()});
    return Polynomial::from_terms(field_, num_vars_, order, std::move(terms));
  }

  Polynomial nonzero_poly(int max_degree, int max_terms) {
    for (;;) {
      Polynomial p = poly(max_degree, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  FieldSpec field_;
  std::size_t num_vars_;
  std::mt19937_64 rng_;
  int coeff_range_;
};

inline Polynomial var(FieldSpec field, std::size_t k, std::size_t i) {
  return Polynomial::variable(field, k, i);
}

inline Polynomial cst(FieldSpec field, std::size_t k, std::int64_t c) {
  return Polynomial::constant(field, k, Scalar::from_int(field, c));
}

}  // namespace starci::testing

#endif  // STARCI_TESTS_RANDOM_POLY_HPP
