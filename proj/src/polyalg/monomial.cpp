#include "starci/monomial.hpp"

#include <algorithm>
#include <limits>

#include "starci/errors.hpp"

namespace starci {

namespace {

void check_num_vars(std::size_t num_vars) {
  if (num_vars > kMaxVars) {
    throw UsageError("at most " + std::to_string(kMaxVars) + " variables are supported, got " +
                     std::to_string(num_vars));
  }
}

Monomial::Exponent checked_exponent(long value) {
  if (value < 0 || value > std::numeric_limits<Monomial::Exponent>::max()) {
    throw UsageError("monomial exponent out of range: " + std::to_string(value));
  }
  return static_cast<Monomial::Exponent>(value);
}

// GrevLex on the variables selected by mask.
std::strong_ordering grevlex_masked(const Monomial& a, const Monomial& b, std::uint32_t mask) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask & (1u << i)) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!(mask & (1u << i)) || a[i] == b[i]) continue;
    return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) {
  check_num_vars(num_vars);
  num_vars_ = static_cast<std::uint8_t>(num_vars);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = checked_exponent(exponents[i]);
    degree_ += exps_[i];
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw UsageError("variable index out of range");
  Monomial m(num_vars);
  m.exps_[index] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::quotient_into(const Monomial& other) const {
  Monomial q(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    q.exps_[i] = static_cast<Exponent>(other.exps_[i] - exps_[i]);
  }
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.num_vars_);
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.num_vars_);
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    m.exps_[i] = checked_exponent(long{a.exps_[i]} + long{b.exps_[i]});
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial Monomial::resized(std::size_t num_vars) const {
  Monomial m(num_vars);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (i >= num_vars) {
      if (exps_[i] != 0) throw UsageError("cannot drop a variable that occurs in the monomial");
      continue;
    }
    m.exps_[i] = exps_[i];
  }
  m.degree_ = degree_;
  return m;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + num_vars_);
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

MonomialOrder MonomialOrder::block(std::span<const std::size_t> front) {
  std::uint32_t mask = 0;
  for (std::size_t i : front) {
    if (i >= kMaxVars) throw UsageError("block order variable index out of range");
    mask |= 1u << i;
  }
  return MonomialOrder(Kind::Block, mask);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::GrevLex:
      return grevlex_masked(a, b, ~0u);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::Block: {
      auto front = grevlex_masked(a, b, front_);
      if (front != std::strong_ordering::equal) return front;
      return grevlex_masked(a, b, ~front_);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block: {
      std::string out = "block{";
      bool first = true;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (!(front_ & (1u << i))) continue;
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
      }
      return out + "}";
    }
  }
  return "?";
}

std::strong_ordering cmp_monomials(const MonomialOrder& order, const Monomial& a,
                                   const Monomial& b) {
  if (a.size() != b.size()) {
    throw UsageError("monomial length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
  return order.compare(a, b);
}

}  // namespace starci
