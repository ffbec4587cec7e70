#include "starci/certificate.hpp"

#include <algorithm>

namespace starci {

namespace {

// l_u times the sum of l_I over I in pool with |I| = size (indices 0-based).
ProductSum times_subset_sum(const Arrangement& arrangement, std::size_t u,
                            const std::vector<std::size_t>& pool, std::size_t size) {
  ProductSum sum;
  for (const auto& pick : combinations(pool.size(), size)) {
    std::vector<std::size_t> subset{u};
    for (std::size_t p : pick) subset.push_back(pool[p]);
    sum.summands.push_back(subset_product(arrangement, subset));
  }
  return sum;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

}  // namespace

Polynomial ProductSum::expand(FieldSpec field, std::size_t num_vars) const {
  Polynomial sum(field, num_vars);
  for (const ProductOfForms& p : summands) sum += p.expand();
  return sum;
}

std::string ProductSum::name() const {
  if (summands.empty()) return "0";
  std::string out;
  for (const ProductOfForms& p : summands) {
    if (!out.empty()) out += " + ";
    out += p.name();
  }
  return out;
}

std::vector<Polynomial> StciCertificate::generators() const {
  std::vector<Polynomial> gens = f_gens;
  gens.push_back(tail_poly);
  return gens;
}

std::vector<std::string> StciCertificate::generator_names() const {
  std::vector<std::string> names;
  for (std::size_t u = 0; u < f_gens.size(); ++u) names.push_back("F_" + std::to_string(u + 1));
  names.push_back("tail");
  return names;
}

Ideal StciCertificate::ideal() const {
  return Ideal(arrangement.field(), arrangement.num_vars(), generators());
}

StciCertificate make_certificate(Arrangement arrangement, std::size_t j,
                                 std::vector<ProductSum> f_terms, ProductOfForms tail) {
  if (j >= arrangement.size()) {
    throw UsageError("j=" + std::to_string(j) + " needs n >= j+1, n=" +
                     std::to_string(arrangement.size()));
  }
  const FieldSpec field = arrangement.field();
  const std::size_t k = arrangement.num_vars();
  auto check_product = [&](const ProductOfForms& p) {
    for (const LinearForm& f : p.factors()) {
      if (f.field() != field || f.num_vars() != k) {
        throw UsageError("certificate product " + p.name() + " is not in the arrangement's ring");
      }
    }
  };
  std::vector<Polynomial> f_gens;
  for (const ProductSum& s : f_terms) {
    for (const ProductOfForms& p : s.summands) check_product(p);
    f_gens.push_back(s.expand(field, k));
  }
  check_product(tail);
  Polynomial tail_poly = tail.degree() == 0 ? Polynomial::constant(field, k, tail.scalar())
                                            : tail.expand();
  return StciCertificate{std::move(arrangement), j,        std::move(f_terms), std::move(tail),
                         std::move(f_gens),      std::move(tail_poly), std::nullopt};
}

StciCertificate theorem_generators(const Arrangement& arrangement, std::size_t j) {
  return theorem_generators(arrangement, j, arrangement.num_vars());
}

StciCertificate theorem_generators(const Arrangement& arrangement, std::size_t j,
                                   std::size_t genericity) {
  const std::size_t n = arrangement.size();
  if (genericity < 2 || genericity > arrangement.num_vars()) {
    throw UsageError("genericity level must lie in 2.." + std::to_string(arrangement.num_vars()));
  }
  if (j + 2 > genericity) {
    throw UsageError("j=" + std::to_string(j) + " outside 0.." + std::to_string(genericity - 2));
  }
  if (n < j + 1) throw UsageError("need n >= j+1");
  if (auto witness = genericity_witness(arrangement, genericity)) {
    std::string forms;
    for (std::size_t i : *witness) forms += (forms.empty() ? "l" : ", l") + std::to_string(i + 1);
    throw PreconditionError("arrangement is not " + std::to_string(genericity) +
                            "-generic: {" + forms + "} are linearly dependent");
  }
  std::vector<ProductSum> f_terms;
  for (std::size_t u = 0; u < j; ++u) {
    f_terms.push_back(times_subset_sum(arrangement, u, range(u + 1, n), n - j - 1));
  }
  const auto tail_indices = range(j, n);
  ProductOfForms tail = subset_product(arrangement, tail_indices);
  return make_certificate(arrangement, j, std::move(f_terms), std::move(tail));
}

Polynomial deletion_summand(const Arrangement& arrangement, std::size_t j, std::size_t u,
                            std::size_t v) {
  const std::size_t n = arrangement.size();
  if (u >= j || v < j || v >= n) throw UsageError("deletion_summand needs u < j <= v < n");
  std::vector<std::size_t> pool;
  for (std::size_t i = u + 1; i < n; ++i) {
    if (i != v) pool.push_back(i);
  }
  return times_subset_sum(arrangement, u, pool, n - j - 1)
      .expand(arrangement.field(), arrangement.num_vars());
}

StciCertificate deletion_generators(const Arrangement& arrangement, std::size_t j, std::size_t v) {
  const std::size_t n = arrangement.size();
  if (j < 1 || v < j || v >= n) throw UsageError("deletion_generators needs 1 <= j <= v < n");
  Arrangement deleted = arrangement.without(v);
  auto shift = [&](std::size_t i) { return i > v ? i - 1 : i; };
  std::vector<ProductSum> g_terms;
  for (std::size_t u = 0; u + 1 < j; ++u) {
    std::vector<std::size_t> pool;
    for (std::size_t i = u + 1; i < n; ++i) {
      if (i != v) pool.push_back(shift(i));
    }
    g_terms.push_back(times_subset_sum(deleted, u, pool, n - j - 1));
  }
  std::vector<std::size_t> tail_indices;
  for (std::size_t i = j - 1; i < n; ++i) {
    if (i != v) tail_indices.push_back(shift(i));
  }
  ProductOfForms tail = subset_product(deleted, tail_indices);
  return make_certificate(std::move(deleted), j - 1, std::move(g_terms), std::move(tail));
}

}  // namespace starci
