#ifndef STARCI_FIELD_HPP
#define STARCI_FIELD_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace starci {

/// Modulus used for bulk verification runs.
inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Coefficient field: the rationals or a prime field GF(p) with p < 2^31.
class FieldSpec {
 public:
  /// Defaults to the rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }

  /// Throws UsageError unless p is a prime below 2^31 (trial division).
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }

  /// Characteristic; 0 for the rationals.
  std::uint32_t modulus() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint32_t p) : modulus_(p) {}

  std::uint32_t modulus_ = 0;
};

/// Trial-division primality test.
bool is_prime_number(std::uint64_t n);

}  // namespace starci

#endif  // STARCI_FIELD_HPP
