#ifndef STARCI_SCHMITT_VOGEL_HPP
#define STARCI_SCHMITT_VOGEL_HPP

#include <cstddef>
#include <vector>

#include "starci/arrangement.hpp"
#include "starci/report.hpp"

namespace starci {

/// Finite set P of products with subsets P_0..P_r (as indices into ground)
/// and exponents e(p) >= 1, one per ground element.
struct SVPartition {
  std::vector<ProductOfForms> ground;
  std::vector<std::vector<std::size_t>> parts;
  std::vector<unsigned> exponents;
};

/// Checks the three lemma conditions: the parts cover P, P_0 is a
/// singleton, and every pair of distinct p, p'' in P_l (l > 0) has a divisor
/// of p*p'' in an earlier part. Each condition is reported separately; the
/// divisor found for each pair is recorded.
VerificationReport sv_check_partition(const SVPartition& partition);

/// q_l = sum over p in P_l of p^e(p), expanded. Throws PreconditionError if
/// the partition fails sv_check_partition; an empty part list gives no sums.
std::vector<Polynomial> sv_sums(const SVPartition& partition);

/// P_0 = {l_{j+1}...l_n} and, for u = 1..j,
/// P_u = {l_{j-u+1} * l_I : I in {j-u+2..n}, |I| = n-j-1}, all e(p) = 1.
/// Valid for any arrangement and 0 <= j <= n-1.
SVPartition sv_ara_partition(const Arrangement& arrangement, std::size_t j);

}  // namespace starci

#endif  // STARCI_SCHMITT_VOGEL_HPP
