#ifndef STARCI_ARRANGEMENT_HPP
#define STARCI_ARRANGEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starci/errors.hpp"
#include "starci/field.hpp"
#include "starci/ideal.hpp"
#include "starci/linear_algebra.hpp"
#include "starci/linear_form.hpp"

namespace starci {

/// Two input forms define the same hyperplane. Indices are 0-based positions.
class DuplicateFormError : public DegenerateInputError {
 public:
  DuplicateFormError(std::size_t first, std::size_t second)
      : DegenerateInputError("forms " + std::to_string(first + 1) + " and " +
                             std::to_string(second + 1) + " define the same hyperplane"),
        first_(first),
        second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// n pairwise distinct hyperplanes V(l_1), ..., V(l_n) in k variables.
/// Forms are normalized and labelled 1..n in input order. The rank may be
/// smaller than k.
///
/// Operations on arrangements take 0-based form indices; labels in printed
/// output are 1-based.
class Arrangement {
 public:
  /// Throws UsageError (k < 2, n = 0, arity or field mismatch) or
  /// DuplicateFormError.
  Arrangement(FieldSpec field, std::size_t num_vars, std::vector<LinearForm> forms);

  /// Normalizes each row. Throws DegenerateInputError on a zero row.
  static Arrangement from_coefficients(FieldSpec field, std::size_t num_vars,
                                       const std::vector<Row>& rows);
  static Arrangement from_integers(FieldSpec field, std::size_t num_vars,
                                   const std::vector<std::vector<std::int64_t>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& form(std::size_t index) const { return forms_.at(index); }

  Polynomial form_polynomial(std::size_t index) const { return form(index).to_polynomial(); }

  /// The deletion A \ {l_index}, relabelled 1..n-1.
  Arrangement without(std::size_t index) const;
  /// Forms reordered so position i holds old form order[i].
  Arrangement permuted(std::span<const std::size_t> order) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  FieldSpec field_;
  std::size_t num_vars_;
  std::vector<LinearForm> forms_;
};

std::size_t rank(const Arrangement& arrangement);
std::size_t subset_rank(const Arrangement& arrangement, std::span<const std::size_t> subset);

/// Every s of the forms are linearly independent. Requires 2 <= s <= k.
bool is_s_generic(const Arrangement& arrangement, std::size_t s);

/// First s-subset (lexicographic) that is linearly dependent, if any.
std::optional<std::vector<std::size_t>> genericity_witness(const Arrangement& arrangement,
                                                           std::size_t s);

/// Product of the chosen forms in factored form. Throws UsageError on an
/// empty or out-of-range subset.
ProductOfForms subset_product(const Arrangement& arrangement, std::span<const std::size_t> subset);

/// I(A, a): generated by all a-fold products of distinct forms, one
/// generator per a-subset in lexicographic order.
Ideal afold_ideal(const Arrangement& arrangement, std::size_t a);

/// Ideal generated by linear forms, stored as a row-reduced basis together
/// with the set of arrangement forms it contains.
class LinearPrime {
 public:
  /// Spans the given arrangement forms.
  LinearPrime(const Arrangement& arrangement, std::span<const std::size_t> spanning_forms);

  const std::vector<Row>& rows() const { return rows_; }
  /// Sorted 0-based indices i with l_i in the prime.
  const std::vector<std::size_t>& support() const { return support_; }
  std::size_t height() const { return rows_.size(); }

  bool contains(const LinearForm& form) const;
  /// Exact membership of an arbitrary polynomial.
  bool contains(const Polynomial& f) const;

  /// The prime as an ideal, generated by its basis rows.
  Ideal ideal() const;

  /// e.g. "<x, y>" from the basis rows.
  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const LinearPrime& a, const LinearPrime& b) { return a.rows_ == b.rows_; }

 private:
  FieldSpec field_;
  std::size_t num_vars_;
  std::vector<Row> rows_;
  std::vector<std::size_t> support_;
};

/// Minimal primes over I(A, n-j): the inclusion-minimal spans of forms that
/// contain at least j+1 of the forms. Sorted by (height, support).
/// Requires 0 <= j <= n-1.
std::vector<LinearPrime> minimal_linear_primes(const Arrangement& arrangement, std::size_t j);

/// Intersection of the minimal primes over I(A, n-j), i.e. rad(I(A, n-j)).
Ideal combinatorial_radical(const Arrangement& arrangement, std::size_t j,
                            const Budget* budget = nullptr);

/// ht(I(A, n-j)): the smallest height among the minimal primes.
std::size_t height_afold(const Arrangement& arrangement, std::size_t j);

/// Minimum distance of the linear code whose generator matrix has the
/// forms' coefficient vectors as columns, by exhaustive subset search.
std::size_t min_distance(const Arrangement& arrangement);

/// Seeded rejection sampling of a k-generic arrangement of n forms in k
/// variables. Prime fields draw residues uniformly; the rationals draw
/// integers in [-9, 9]. Throws GenerationError when the retry budget runs out.
Arrangement random_generic_arrangement(std::size_t k, std::size_t n, FieldSpec field,
                                       std::uint64_t seed);

}  // namespace starci

#endif  // STARCI_ARRANGEMENT_HPP
