#include "starci/polynomial.hpp"

#include <algorithm>

#include "starci/errors.hpp"

namespace starci {

Polynomial::Polynomial(FieldSpec field, std::size_t num_vars, MonomialOrder order)
    : field_(field), num_vars_(num_vars), order_(order) {
  if (num_vars > kMaxVars) {
    throw UsageError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

Polynomial Polynomial::from_terms(FieldSpec field, std::size_t num_vars, MonomialOrder order,
                                  std::vector<Term> terms) {
  Polynomial p(field, num_vars, order);
  for (const Term& t : terms) {
    if (t.monomial.size() != num_vars) throw UsageError("term arity does not match the ring");
    if (t.coeff.field() != field) throw UsageError("term coefficient field does not match");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(FieldSpec field, std::size_t num_vars, const Scalar& c,
                                MonomialOrder order) {
  Polynomial p(field, num_vars, order);
  if (!c.is_zero()) p.terms_.push_back({Monomial(num_vars), c});
  return p;
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t num_vars, std::size_t index,
                                MonomialOrder order) {
  Polynomial p(field, num_vars, order);
  p.terms_.push_back({Monomial::variable(num_vars, index), Scalar::one(field)});
  return p;
}

Polynomial Polynomial::linear(std::span<const Scalar> coeffs, MonomialOrder order) {
  if (coeffs.empty()) throw UsageError("linear form needs at least one coefficient");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    terms.push_back({Monomial::variable(coeffs.size(), i), coeffs[i]});
  }
  return from_terms(coeffs[0].field(), coeffs.size(), order, std::move(terms));
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial[index] != 0; });
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p = *this;
  p.order_ = order;
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  return p;
}

Polynomial Polynomial::resized(std::size_t num_vars) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back({t.monomial.resized(num_vars), t.coeff});
  return from_terms(field_, num_vars, order_, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(field_, num_vars_, order_);
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(field_, num_vars_, order_);
  Polynomial p = *this;
  for (Term& t : p.terms_) {
    t.monomial = t.monomial * m;
    t.coeff *= c;
  }
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(field_, num_vars_, Scalar::one(field_), order_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (field_ != g.field_) {
    throw UsageError("polynomial field mismatch: " + field_.to_string() + " vs " +
                     g.field_.to_string());
  }
  if (num_vars_ != g.num_vars_) {
    throw UsageError("polynomial arity mismatch: " + std::to_string(num_vars_) + " vs " +
                     std::to_string(g.num_vars_));
  }
  if (order_ != g.order_) {
    throw UsageError("polynomial order mismatch: " + order_.to_string() + " vs " +
                     g.order_.to_string());
  }
}

void Polynomial::add_scaled(const Polynomial& g, bool negate) {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    std::strong_ordering c = a == terms_.end()     ? std::strong_ordering::less
                             : b == g.terms_.end() ? std::strong_ordering::greater
                                                   : order_.compare(a->monomial, b->monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(std::move(*a++));
    } else if (c == std::strong_ordering::less) {
      out.push_back({b->monomial, negate ? -b->coeff : b->coeff});
      ++b;
    } else {
      if (negate) {
        a->coeff -= b->coeff;
      } else {
        a->coeff += b->coeff;
      }
      if (!a->coeff.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Term Polynomial::take_leading_term() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Scalar neg = -c;
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = b->monomial * m;
    std::strong_ordering cmp =
        a == terms_.end() ? std::strong_ordering::less : order_.compare(a->monomial, bm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(std::move(*a++));
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({bm, neg * b->coeff});
      ++b;
    } else {
      a->coeff += neg * b->coeff;
      if (!a->coeff.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  if (&g == this) {
    Polynomial copy = g;
    add_scaled(copy, false);
  } else {
    add_scaled(g, false);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_compatible(g);
  if (&g == this) {
    terms_.clear();
  } else {
    add_scaled(g, true);
  }
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  std::vector<Term> terms;
  terms.reserve(f.terms_.size() * g.terms_.size());
  for (const Term& a : f.terms_) {
    for (const Term& b : g.terms_) terms.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  }
  return Polynomial::from_terms(f.field_, f.num_vars_, f.order_, std::move(terms));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return f.field_ == g.field_ && f.num_vars_ == g.num_vars_ && f.order_ == g.order_ &&
         f.terms_ == g.terms_;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> fallback;
  if (names.size() < num_vars_) {
    fallback = default_variable_names(num_vars_);
    names = fallback;
  }
  std::string out;
  for (const Term& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = field_.is_rational() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case ArithOp::Add:
      return f + g;
    case ArithOp::Sub:
      return f - g;
    case ArithOp::Mul:
      return f * g;
  }
  throw UsageError("unknown arithmetic operation");
}

std::vector<std::string> default_variable_names(std::size_t num_vars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace starci
