#ifndef STARCI_SCALAR_HPP
#define STARCI_SCALAR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "starci/field.hpp"

namespace starci {

/// Exact field element. Rationals are kept fully reduced with a positive
/// denominator and residues lie in [0, p), so equality is representational.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const FieldSpec& field) { return from_int(field, 0); }
  static Scalar one(const FieldSpec& field) { return from_int(field, 1); }
  static Scalar from_int(const FieldSpec& field, std::int64_t value);
  /// Throws DegenerateInputError if den is zero (or zero mod p).
  static Scalar from_fraction(const FieldSpec& field, std::int64_t num, std::int64_t den);
  static Scalar from_rational(const mpq_class& value);

  FieldSpec field() const;

  bool is_zero() const;
  bool is_one() const;

  /// Throws DegenerateInputError on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used only for canonical sorting (value order within a field).
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  /// Residue in [0, p). Precondition: prime field.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Precondition: rational field.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  std::uint32_t modulus_ = 0;
  std::variant<std::uint32_t, mpq_class> value_{mpq_class(0)};
};

}  // namespace starci

#endif  // STARCI_SCALAR_HPP
