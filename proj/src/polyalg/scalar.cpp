#include "starci/scalar.hpp"

#include "starci/errors.hpp"

namespace starci {

namespace {

std::uint32_t reduce_mod(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Extended Euclid; p prime and 0 < a < p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t value) {
  Scalar s;
  s.modulus_ = field.modulus();
  if (field.is_prime()) {
    s.value_ = reduce_mod(value, field.modulus());
  } else {
    s.value_ = mpq_class(static_cast<long>(value));
  }
  return s;
}

Scalar Scalar::from_fraction(const FieldSpec& field, std::int64_t num, std::int64_t den) {
  Scalar d = from_int(field, den);
  if (d.is_zero()) throw DegenerateInputError("zero denominator in " + field.to_string());
  return from_int(field, num) / d;
}

Scalar Scalar::from_rational(const mpq_class& value) {
  Scalar s;
  s.value_ = value;
  std::get<mpq_class>(s.value_).canonicalize();
  return s;
}

FieldSpec Scalar::field() const {
  return FieldSpec(modulus_);
}

bool Scalar::is_zero() const {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (modulus_ != other.modulus_) {
    throw UsageError("scalar field mismatch: " + field().to_string() + " vs " +
                     other.field().to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DegenerateInputError("inverse of zero");
  Scalar s = *this;
  if (modulus_ != 0) {
    s.value_ = inverse_mod(std::get<std::uint32_t>(value_), modulus_);
  } else {
    mpq_class inv = 1 / std::get<mpq_class>(value_);
    inv.canonicalize();
    s.value_ = std::move(inv);
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ != 0) {
    std::uint32_t v = std::get<std::uint32_t>(value_);
    s.value_ = v == 0 ? 0u : modulus_ - v;
  } else {
    s.value_ = mpq_class(-std::get<mpq_class>(value_));
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ != 0) {
    std::uint64_t v = std::uint64_t{std::get<std::uint32_t>(value_)} +
                      std::get<std::uint32_t>(other.value_);
    if (v >= modulus_) v -= modulus_;
    value_ = static_cast<std::uint32_t>(v);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ != 0) {
    std::uint32_t a = std::get<std::uint32_t>(value_);
    std::uint32_t b = std::get<std::uint32_t>(other.value_);
    value_ = a >= b ? a - b : a + (modulus_ - b);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ != 0) {
    std::uint64_t v = std::uint64_t{std::get<std::uint32_t>(value_)} *
                      std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(v % modulus_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  if (a.modulus_ != 0) return std::get<std::uint32_t>(a.value_) == std::get<std::uint32_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return a.modulus_ < b.modulus_;
  if (a.modulus_ != 0) return std::get<std::uint32_t>(a.value_) < std::get<std::uint32_t>(b.value_);
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace starci
