#include "starci/linear_form.hpp"

#include <algorithm>

#include "starci/errors.hpp"

namespace starci {

LinearForm normalize_linear_form(std::span<const Scalar> coeffs, std::size_t label) {
  if (coeffs.empty()) throw UsageError("linear form needs at least one coefficient");
  const FieldSpec field = coeffs[0].field();
  for (const Scalar& c : coeffs) {
    if (c.field() != field) throw UsageError("linear form coefficients from different fields");
  }
  auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return !c.is_zero(); });
  if (lead == coeffs.end()) throw DegenerateInputError("zero linear form");
  const Scalar inv = lead->inverse();
  LinearForm form;
  form.coeffs_.reserve(coeffs.size());
  for (const Scalar& c : coeffs) form.coeffs_.push_back(c * inv);
  form.label_ = label;
  return form;
}

LinearForm LinearForm::with_label(std::size_t label) const {
  LinearForm f = *this;
  f.label_ = label;
  return f;
}

Polynomial LinearForm::to_polynomial(const MonomialOrder& order) const {
  return Polynomial::linear(coeffs_, order);
}

std::string LinearForm::name() const {
  if (label_ != 0) return "l" + std::to_string(label_);
  return to_string();
}

std::string LinearForm::to_string(std::span<const std::string> names) const {
  return to_polynomial().to_string(names);
}

bool canonical_less(const LinearForm& a, const LinearForm& b) {
  return std::lexicographical_compare(
      a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
      [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
}

ProductOfForms::ProductOfForms(Scalar scalar, std::vector<LinearForm> factors)
    : scalar_(std::move(scalar)), factors_(std::move(factors)) {
  for (const LinearForm& f : factors_) {
    if (f.field() != scalar_.field() || f.num_vars() != factors_.front().num_vars()) {
      throw UsageError("product factors must share field and arity");
    }
  }
  std::stable_sort(factors_.begin(), factors_.end(),
                   [](const LinearForm& a, const LinearForm& b) { return canonical_less(a, b); });
}

namespace {

Scalar unit_for(const std::vector<LinearForm>& factors) {
  return Scalar::one(factors.empty() ? FieldSpec::rationals() : factors.front().field());
}

}  // namespace

ProductOfForms::ProductOfForms(std::vector<LinearForm> factors) : scalar_(unit_for(factors)) {
  *this = ProductOfForms(scalar_, std::move(factors));
}

ProductOfForms ProductOfForms::operator*(const ProductOfForms& other) const {
  std::vector<LinearForm> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return ProductOfForms(scalar_ * other.scalar_, std::move(all));
}

ProductOfForms ProductOfForms::pow(unsigned exponent) const {
  std::vector<LinearForm> all;
  for (unsigned e = 0; e < exponent; ++e) all.insert(all.end(), factors_.begin(), factors_.end());
  Scalar s = Scalar::one(scalar_.field());
  for (unsigned e = 0; e < exponent; ++e) s *= scalar_;
  return ProductOfForms(std::move(s), std::move(all));
}

Polynomial ProductOfForms::expand(const MonomialOrder& order) const {
  if (factors_.empty()) throw UsageError("cannot expand a product with no factors");
  Polynomial p = factors_.front().to_polynomial(order);
  for (std::size_t i = 1; i < factors_.size(); ++i) p = p * factors_[i].to_polynomial(order);
  return p.scaled(scalar_);
}

std::string ProductOfForms::name() const {
  std::vector<std::string> parts;
  for (const LinearForm& f : factors_) parts.push_back(f.name());
  // Labels read better in index order than in canonical coefficient order.
  std::stable_sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::string out = scalar_.is_one() ? "" : "(" + scalar_.to_string() + ")";
  for (const std::string& p : parts) {
    if (!out.empty()) out += '*';
    out += p.find_first_of("+- ") == std::string::npos ? p : "(" + p + ")";
  }
  return out.empty() ? "1" : out;
}

bool product_divides(const ProductOfForms& a, const ProductOfForms& b) {
  if (a.scalar().field() != b.scalar().field()) {
    throw UsageError("product_divides: field mismatch");
  }
  if (!a.factors().empty() && !b.factors().empty() &&
      a.factors().front().num_vars() != b.factors().front().num_vars()) {
    throw UsageError("product_divides: arity mismatch");
  }
  auto less = [](const LinearForm& x, const LinearForm& y) { return canonical_less(x, y); };
  return std::includes(b.factors().begin(), b.factors().end(), a.factors().begin(),
                       a.factors().end(), less);
}

}  // namespace starci
