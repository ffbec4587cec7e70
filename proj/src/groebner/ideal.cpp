#include "starci/ideal.hpp"

#include <algorithm>

#include "starci/errors.hpp"

namespace starci {

Ideal::Ideal(FieldSpec field, std::size_t num_vars, std::vector<Polynomial> generators)
    : field_(field), num_vars_(num_vars) {
  if (num_vars > kMaxVars) throw UsageError("too many variables for an ideal");
  for (Polynomial& g : generators) {
    check_same_ring(g);
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::generated_by(std::vector<Polynomial> generators) {
  if (generators.empty()) throw UsageError("generated_by needs at least one polynomial");
  FieldSpec field = generators.front().field();
  std::size_t num_vars = generators.front().num_vars();
  return Ideal(field, num_vars, std::move(generators));
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order,
                                                     const Budget* budget) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->bases.find(order);
    if (it != memo_->bases.end()) return it->second;
  }
  BuchbergerOptions options;
  options.budget = budget;
  std::vector<Polynomial> basis = buchberger(generators_, order, options);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  // First writer wins; the reduced basis is unique so a racing writer would
  // have produced the same value.
  return memo_->bases.try_emplace(order, std::move(basis)).first->second;
}

bool Ideal::is_unit() const {
  const auto& basis = groebner_basis();
  return basis.size() == 1 && basis.front().is_unit();
}

Ideal Ideal::operator+(const Ideal& other) const {
  check_same_ring(other);
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(field_, num_vars_, std::move(gens));
}

Ideal Ideal::plus(const Polynomial& f) const {
  check_same_ring(f);
  std::vector<Polynomial> gens = generators_;
  gens.push_back(f);
  return Ideal(field_, num_vars_, std::move(gens));
}

void Ideal::check_same_ring(const Ideal& other) const {
  if (field_ != other.field_ || num_vars_ != other.num_vars_) {
    throw UsageError("ideals live in different rings: " + field_.to_string() + "[" +
                     std::to_string(num_vars_) + "] vs " + other.field_.to_string() + "[" +
                     std::to_string(other.num_vars_) + "]");
  }
}

void Ideal::check_same_ring(const Polynomial& f) const {
  if (field_ != f.field() || num_vars_ != f.num_vars()) {
    throw UsageError("polynomial and ideal live in different rings");
  }
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const Budget* budget) {
  ideal.check_same_ring(f);
  if (f.is_zero()) return true;
  const auto& basis = ideal.groebner_basis(MonomialOrder::grevlex(), budget);
  return reduce(f.with_order(MonomialOrder::grevlex()), basis).is_zero();
}

bool ideal_eq(const Ideal& i, const Ideal& j, const Budget* budget) {
  i.check_same_ring(j);
  return i.groebner_basis(MonomialOrder::grevlex(), budget) ==
         j.groebner_basis(MonomialOrder::grevlex(), budget);
}

Ideal intersect(const Ideal& i, const Ideal& j, const Budget* budget) {
  i.check_same_ring(j);
  const std::size_t k = i.num_vars();
  if (i.generators().empty() || j.generators().empty()) return Ideal(i.field(), k);
  if (k + 1 > kMaxVars) throw UsageError("no room for the elimination variable");

  const std::size_t t_index = k;
  const std::size_t front[] = {t_index};
  const MonomialOrder elim = MonomialOrder::block(front);
  const FieldSpec field = i.field();
  const Polynomial t = Polynomial::variable(field, k + 1, t_index, elim);
  const Polynomial one_minus_t =
      Polynomial::constant(field, k + 1, Scalar::one(field), elim) - t;

  std::vector<Polynomial> gens;
  for (const Polynomial& g : i.generators()) gens.push_back(t * g.resized(k + 1).with_order(elim));
  for (const Polynomial& g : j.generators()) {
    gens.push_back(one_minus_t * g.resized(k + 1).with_order(elim));
  }
  BuchbergerOptions options;
  options.budget = budget;
  std::vector<Polynomial> basis = buchberger(gens, elim, options);

  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis) {
    if (g.uses_variable(t_index)) continue;
    kept.push_back(g.resized(k).with_order(MonomialOrder::grevlex()));
  }
  return Ideal(field, k, std::move(kept));
}

bool radical_member(const Polynomial& f, const Ideal& ideal, const Budget* budget) {
  ideal.check_same_ring(f);
  if (f.is_zero()) return true;
  const std::size_t k = ideal.num_vars();
  if (k + 1 > kMaxVars) throw UsageError("no room for the auxiliary variable");
  // Plain membership is cheap once the basis is memoized and settles most
  // positive instances.
  if (ideal_member(f, ideal, budget)) return true;

  const FieldSpec field = f.field();
  const MonomialOrder order = MonomialOrder::grevlex();
  const Polynomial y = Polynomial::variable(field, k + 1, k, order);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(g.resized(k + 1).with_order(order));
  gens.push_back(Polynomial::constant(field, k + 1, Scalar::one(field), order) -
                 y * f.resized(k + 1).with_order(order));
  BuchbergerOptions options;
  options.budget = budget;
  std::vector<Polynomial> basis = buchberger(gens, order, options);
  return basis.size() == 1 && basis.front().is_unit();
}

bool radical_eq(const Ideal& i, const Ideal& j, const Budget* budget) {
  i.check_same_ring(j);
  for (const Polynomial& g : i.generators()) {
    if (!radical_member(g, j, budget)) return false;
  }
  for (const Polynomial& g : j.generators()) {
    if (!radical_member(g, i, budget)) return false;
  }
  return true;
}

}  // namespace starci
