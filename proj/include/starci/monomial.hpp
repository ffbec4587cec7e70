#ifndef STARCI_MONOMIAL_HPP
#define STARCI_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace starci {

/// Upper bound on ring variables, including auxiliary elimination variables.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector x_0^{e_0} ... x_{k-1}^{e_{k-1}} with a cached total degree.
/// Storage is inline; monomials never allocate.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The unit monomial in num_vars variables.
  explicit Monomial(std::size_t num_vars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t num_vars, std::size_t index);

  std::size_t size() const { return num_vars_; }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Precondition: this divides other.
  Monomial quotient_into(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Appends (or drops) trailing variables. Dropping requires zero exponents.
  Monomial resized(std::size_t num_vars) const;

  std::vector<int> exponents() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.num_vars_ == b.num_vars_ && a.exps_ == b.exps_;
  }

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t num_vars_ = 0;
};

/// Total monomial order. Block compares the front variables under GrevLex,
/// then the remaining variables under GrevLex; it eliminates the front block.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { GrevLex, Lex, Block };

  MonomialOrder() = default;
  static MonomialOrder grevlex() { return MonomialOrder{}; }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder block(std::span<const std::size_t> front);

  Kind kind() const { return kind_; }
  std::uint32_t front_mask() const { return front_; }

  /// Unchecked comparison; both monomials must have the same length.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::uint32_t front) : kind_(kind), front_(front) {}

  Kind kind_ = Kind::GrevLex;
  std::uint32_t front_ = 0;
};

/// Checked comparison; throws UsageError on a length mismatch.
std::strong_ordering cmp_monomials(const MonomialOrder& order, const Monomial& a,
                                   const Monomial& b);

}  // namespace starci

#endif  // STARCI_MONOMIAL_HPP
