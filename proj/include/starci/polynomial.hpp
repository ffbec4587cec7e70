#ifndef STARCI_POLYNOMIAL_HPP
#define STARCI_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "starci/field.hpp"
#include "starci/monomial.hpp"
#include "starci/scalar.hpp"

namespace starci {

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial. Terms are sorted strictly descending
/// under the polynomial's active order and carry no zero coefficients; the
/// zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  /// The zero polynomial of the given ring.
  Polynomial(FieldSpec field, std::size_t num_vars,
             MonomialOrder order = MonomialOrder::grevlex());

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(FieldSpec field, std::size_t num_vars, MonomialOrder order,
                               std::vector<Term> terms);
  static Polynomial constant(FieldSpec field, std::size_t num_vars, const Scalar& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(FieldSpec field, std::size_t num_vars, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex());
  /// Linear form sum_i coeffs[i] * x_i.
  static Polynomial linear(std::span<const Scalar> coeffs,
                           MonomialOrder order = MonomialOrder::grevlex());

  const FieldSpec& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }

  /// Preconditions below: nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const;
  bool uses_variable(std::size_t index) const;

  /// Same polynomial re-sorted under another order.
  Polynomial with_order(const MonomialOrder& order) const;
  /// Embeds into a ring with more variables, or drops trailing variables that
  /// do not occur (UsageError otherwise).
  Polynomial resized(std::size_t num_vars) const;

  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned exponent) const;

  /// Removes and returns the leading term. Precondition: nonzero.
  Term take_leading_term();

  /// this -= c * m * g, in place. Same ring and order (unchecked).
  void sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// Human-readable form, e.g. "x^2*y - 3*z + 1". Names default to x1..xk.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_compatible(const Polynomial& g) const;
  void add_scaled(const Polynomial& g, bool negate);

  FieldSpec field_;
  std::size_t num_vars_ = 0;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Checked ring arithmetic; throws UsageError on field, arity or order mismatch.
Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g);

/// Default variable names x1..xk.
std::vector<std::string> default_variable_names(std::size_t num_vars);

}  // namespace starci

#endif  // STARCI_POLYNOMIAL_HPP
