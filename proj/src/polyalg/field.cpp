#include "starci/field.hpp"

#include <limits>

#include "starci/errors.hpp"

namespace starci {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw UsageError("prime modulus " + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime_number(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "QQ";
  return "GF(" + std::to_string(modulus_) + ")";
}

}  // namespace starci
