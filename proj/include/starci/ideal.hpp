#ifndef STARCI_IDEAL_HPP
#define STARCI_IDEAL_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "starci/budget.hpp"
#include "starci/field.hpp"
#include "starci/groebner.hpp"
#include "starci/polynomial.hpp"

namespace starci {

/// Finitely generated ideal of K[x_1..x_k]. Immutable apart from a memo of
/// reduced Groebner bases keyed by monomial order; the memo is written once
/// per key and safe to read from several threads. Copies share the memo.
class Ideal {
 public:
  Ideal(FieldSpec field, std::size_t num_vars, std::vector<Polynomial> generators = {});

  /// Ideal generated by gens; the ring is taken from the first element.
  static Ideal generated_by(std::vector<Polynomial> generators);

  const FieldSpec& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced Groebner basis under order, computed on first use.
  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& order = MonomialOrder::grevlex(), const Budget* budget = nullptr) const;

  bool is_unit() const;

  Ideal operator+(const Ideal& other) const;
  Ideal plus(const Polynomial& f) const;

  void check_same_ring(const Ideal& other) const;
  void check_same_ring(const Polynomial& f) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<MonomialOrder, std::vector<Polynomial>> bases;
  };

  FieldSpec field_;
  std::size_t num_vars_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// f lies in I.
bool ideal_member(const Polynomial& f, const Ideal& ideal, const Budget* budget = nullptr);

/// Reduced grevlex bases of I and J coincide.
bool ideal_eq(const Ideal& i, const Ideal& j, const Budget* budget = nullptr);

/// I n J by eliminating an auxiliary variable t from <t*I, (1-t)*J>.
Ideal intersect(const Ideal& i, const Ideal& j, const Budget* budget = nullptr);

/// f lies in rad(I): decided by 1 in I + <1 - y*f> with a fresh variable y.
bool radical_member(const Polynomial& f, const Ideal& ideal, const Budget* budget = nullptr);

/// rad(I) = rad(J), by mutual generator-wise radical membership.
bool radical_eq(const Ideal& i, const Ideal& j, const Budget* budget = nullptr);

}  // namespace starci

#endif  // STARCI_IDEAL_HPP
