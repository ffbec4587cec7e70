#ifndef STARCI_LINEAR_FORM_HPP
#define STARCI_LINEAR_FORM_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "starci/field.hpp"
#include "starci/polynomial.hpp"
#include "starci/scalar.hpp"

namespace starci {

/// Projectively normalized linear form: the first nonzero coefficient is 1,
/// so two forms define the same hyperplane iff their coefficients agree.
/// The label is display metadata (1-based arrangement index) and takes no
/// part in comparisons.
class LinearForm {
 public:
  LinearForm() = default;

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  std::size_t num_vars() const { return coeffs_.size(); }
  FieldSpec field() const { return coeffs_.front().field(); }
  std::size_t label() const { return label_; }

  LinearForm with_label(std::size_t label) const;

  Polynomial to_polynomial(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  /// "l3" when labelled, otherwise the expanded form.
  std::string name() const;
  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ == b.coeffs_;
  }
  /// Canonical order on coefficient vectors.
  friend bool canonical_less(const LinearForm& a, const LinearForm& b);

 private:
  friend LinearForm normalize_linear_form(std::span<const Scalar> coeffs, std::size_t label);

  std::vector<Scalar> coeffs_;
  std::size_t label_ = 0;
};

/// Scales coeffs so the first nonzero entry is 1. Throws DegenerateInputError
/// on the zero vector and UsageError on mixed fields or an empty vector.
LinearForm normalize_linear_form(std::span<const Scalar> coeffs, std::size_t label = 0);

/// Scalar times a multiset of normalized linear forms, kept in factored form.
/// Factors are stored in canonical order, so equality is multiset equality.
class ProductOfForms {
 public:
  ProductOfForms() = default;
  ProductOfForms(Scalar scalar, std::vector<LinearForm> factors);
  explicit ProductOfForms(std::vector<LinearForm> factors);

  const Scalar& scalar() const { return scalar_; }
  std::span<const LinearForm> factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }

  ProductOfForms operator*(const ProductOfForms& other) const;
  ProductOfForms pow(unsigned exponent) const;

  /// Requires at least one factor (the ring is taken from it).
  Polynomial expand(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  /// e.g. "l1*l3*l4" using labels.
  std::string name() const;

  friend bool operator==(const ProductOfForms&, const ProductOfForms&) = default;

 private:
  Scalar scalar_;
  std::vector<LinearForm> factors_;
};

/// True iff the factor multiset of a is contained in that of b. Scalars are
/// units and ignored. Throws UsageError on field or arity mismatch.
bool product_divides(const ProductOfForms& a, const ProductOfForms& b);

}  // namespace starci

#endif  // STARCI_LINEAR_FORM_HPP
