#ifndef STARCI_CERTIFICATE_HPP
#define STARCI_CERTIFICATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "starci/arrangement.hpp"
#include "starci/budget.hpp"
#include "starci/report.hpp"

namespace starci {

/// Sum of pure products of forms, kept symbolically.
struct ProductSum {
  std::vector<ProductOfForms> summands;

  /// Zero polynomial of the ring when there are no summands.
  Polynomial expand(FieldSpec field, std::size_t num_vars) const;
  std::string name() const;

  friend bool operator==(const ProductSum&, const ProductSum&) = default;
};

/// Candidate generators F_1..F_j and tail l_{j+1}...l_n for rad(I(A, n-j)),
/// in symbolic and expanded form.
struct StciCertificate {
  Arrangement arrangement;
  std::size_t j = 0;
  std::vector<ProductSum> f_terms;
  ProductOfForms tail;
  std::vector<Polynomial> f_gens;
  Polynomial tail_poly;
  std::optional<VerificationReport> transcript;

  /// F_1..F_j followed by the tail.
  std::vector<Polynomial> generators() const;
  /// "F_1", ..., "F_j", "tail".
  std::vector<std::string> generator_names() const;
  Ideal ideal() const;
  /// a = n - j.
  std::size_t fold() const { return arrangement.size() - j; }
};

/// Expands symbolic generators into a certificate. Throws UsageError when
/// j >= n or the products do not live in the arrangement's ring.
StciCertificate make_certificate(Arrangement arrangement, std::size_t j,
                                 std::vector<ProductSum> f_terms, ProductOfForms tail);

/// F_u = l_u * sum of l_I over I in {u+1..n} with |I| = n-j-1, u = 1..j, and
/// tail l_{j+1}...l_n. Requires A to be s-generic (default s = k) and
/// 0 <= j <= s-2; throws PreconditionError naming a dependent subset, or
/// UsageError for j out of range.
StciCertificate theorem_generators(const Arrangement& arrangement, std::size_t j);
StciCertificate theorem_generators(const Arrangement& arrangement, std::size_t j,
                                   std::size_t genericity);

/// Induction step for deleting form v (0-based, v >= j): generators
/// G_1..G_{j-1} and l_j...^l_v...l_n, where G_u drops every summand of F_u
/// that contains l_v. Returned on the deletion A \ {l_v} with j - 1.
StciCertificate deletion_generators(const Arrangement& arrangement, std::size_t j, std::size_t v);

/// G_u in the original ring (F_u without the summands involving l_v).
Polynomial deletion_summand(const Arrangement& arrangement, std::size_t j, std::size_t u,
                            std::size_t v);

enum class VerifyMode { GroebnerOnly, CombinatorialOnly, Both };

/// Checks rad(I(A, n-j)) = rad(F_1, ..., F_j, tail).
///
/// Always checks exact containment of every generator in I(A, n-j).
/// Groebner mode decides radical equality by mutual radical membership.
/// Combinatorial mode checks every generator against every minimal linear
/// prime, and that each product over a minimal hitting set of the prime
/// supports lies in rad(cert). Both runs the two and reports a disagreement
/// as an internal-consistency failure. Exceeding the budget yields an
/// Inconclusive report with the witnesses gathered so far.
VerificationReport verify_certificate(const StciCertificate& cert, VerifyMode mode = VerifyMode::Both,
                                      const Budget* budget = nullptr);

/// Minimal hitting sets of the supports of the minimal primes over I(A, n-j).
std::vector<std::vector<std::size_t>> minimal_hitting_sets(const Arrangement& arrangement,
                                                           std::size_t j);

}  // namespace starci

#endif  // STARCI_CERTIFICATE_HPP
