#ifndef STARCI_GROEBNER_HPP
#define STARCI_GROEBNER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "starci/budget.hpp"
#include "starci/monomial.hpp"
#include "starci/polynomial.hpp"

namespace starci {

/// Normal form of f modulo basis (full reduction, leading and tail terms).
/// Basis polynomials are converted to f's order when they differ. Zero
/// basis entries are ignored.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis);

struct BuchbergerOptions {
  /// Breaks ties between critical pairs of equal lcm degree. Seed 0 keeps
  /// creation order; other seeds shuffle. The reduced basis does not depend on it.
  std::uint64_t pair_seed = 0;
  const Budget* budget = nullptr;
};

/// Reduced Groebner basis of the ideal generated by gens under order.
/// Elements are monic and sorted by descending leading monomial. Uses the
/// normal selection strategy with the Gebauer-Moeller criteria, and returns
/// {1} as soon as a nonzero constant appears.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                                   const BuchbergerOptions& options = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis);

/// Reduced basis: monic, and no term of an element is divisible by another
/// element's leading monomial.
bool is_reduced_basis(std::span<const Polynomial> basis);

}  // namespace starci

#endif  // STARCI_GROEBNER_HPP
