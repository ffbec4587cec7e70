#include "starci/groebner.hpp"

#include <algorithm>
#include <random>

#include "starci/errors.hpp"

namespace starci {

namespace {

std::vector<Polynomial> in_order(std::span<const Polynomial> polys, const MonomialOrder& order) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const Polynomial& p : polys) {
    if (!p.is_zero()) out.push_back(p.with_order(order));
  }
  return out;
}

// Normal form against the polynomials selected by active.
Polynomial reduce_against(Polynomial p, const std::vector<Polynomial>& polys,
                          const std::vector<std::size_t>& active) {
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (std::size_t idx : active) {
      if (polys[idx].leading_monomial().divides(lm)) {
        divisor = &polys[idx];
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(p.take_leading_term());
      continue;
    }
    Scalar c = p.leading_coeff() / divisor->leading_coeff();
    Monomial m = divisor->leading_monomial().quotient_into(lm);
    p.sub_mul_term(c, m, *divisor);
  }
  return Polynomial::from_terms(p.field(), p.num_vars(), p.order(), std::move(remainder));
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t tiebreak;
};

class PairSet {
 public:
  explicit PairSet(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  std::uint64_t next_key() { return seed_ == 0 ? counter_++ : rng_(); }

  std::vector<CriticalPair> pairs;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 rng_;
};

// Gebauer-Moeller installation of polys[h] into the basis G and pair set B.
void update(const std::vector<Polynomial>& polys, std::vector<std::size_t>& basis,
            PairSet& pairs, std::size_t h) {
  const Monomial& lh = polys[h].leading_monomial();

  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Candidate> fresh;
  for (std::size_t g : basis) {
    const Monomial& lg = polys[g].leading_monomial();
    fresh.push_back({g, lcm(lh, lg), lh.coprime(lg)});
  }

  // Chain criterion among the new pairs: drop (h,g1) when another (h,g2)
  // still pending or already kept has an lcm dividing lcm(h,g1). Coprime
  // pairs survive this step so they can shadow others.
  std::vector<Candidate> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    const Candidate& c = fresh[a];
    bool keep = c.coprime;
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < fresh.size() && keep; ++b) {
        if (fresh[b].lcm.divides(c.lcm)) keep = false;
      }
      for (const Candidate& d : kept) {
        if (!keep) break;
        if (d.lcm.divides(c.lcm)) keep = false;
      }
    }
    if (keep) kept.push_back(c);
  }

  // Old pairs that h makes redundant.
  std::erase_if(pairs.pairs, [&](const CriticalPair& p) {
    if (!lh.divides(p.lcm)) return false;
    const Monomial l1 = lcm(polys[p.i].leading_monomial(), lh);
    const Monomial l2 = lcm(polys[p.j].leading_monomial(), lh);
    return !(l1 == p.lcm) && !(l2 == p.lcm);
  });

  // Product criterion.
  for (const Candidate& c : kept) {
    if (!c.coprime) pairs.pairs.push_back({c.g, h, c.lcm, pairs.next_key()});
  }

  std::erase_if(basis, [&](std::size_t g) { return lh.divides(polys[g].leading_monomial()); });
  basis.push_back(h);
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<Polynomial> polys = in_order(basis, f.order());
  for (const Polynomial& g : polys) {
    if (g.field() != f.field() || g.num_vars() != f.num_vars()) {
      throw UsageError("reduce: basis element from a different ring");
    }
  }
  std::vector<std::size_t> active(polys.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  return reduce_against(f, polys, active);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s = f.mul_term(f.leading_monomial().quotient_into(l), f.leading_coeff().inverse());
  s.sub_mul_term(g.leading_coeff().inverse(), g.leading_monomial().quotient_into(l), g);
  return s;
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                                   const BuchbergerOptions& options) {
  std::vector<Polynomial> polys;
  std::vector<std::size_t> basis;
  PairSet pairs(options.pair_seed);

  auto unit_basis = [&](const Polynomial& like) {
    return std::vector<Polynomial>{Polynomial::constant(
        like.field(), like.num_vars(), Scalar::one(like.field()), order)};
  };

  std::vector<Polynomial> input = in_order(gens, order);
  if (!input.empty()) {
    for (const Polynomial& g : input) {
      if (g.field() != input[0].field() || g.num_vars() != input[0].num_vars()) {
        throw UsageError("buchberger: generators from different rings");
      }
    }
  }
  // Low degree first keeps the intermediate basis small.
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
  });

  for (const Polynomial& g : input) {
    if (options.budget) options.budget->check();
    Polynomial h = reduce_against(g, polys, basis);
    if (h.is_zero()) continue;
    if (h.is_unit()) return unit_basis(h);
    polys.push_back(h.monic());
    update(polys, basis, pairs, polys.size() - 1);
  }

  while (!pairs.pairs.empty()) {
    if (options.budget) options.budget->check();
    auto best = std::min_element(pairs.pairs.begin(), pairs.pairs.end(),
                                 [](const CriticalPair& a, const CriticalPair& b) {
                                   if (a.lcm.degree() != b.lcm.degree()) {
                                     return a.lcm.degree() < b.lcm.degree();
                                   }
                                   return a.tiebreak < b.tiebreak;
                                 });
    CriticalPair pair = *best;
    *best = pairs.pairs.back();
    pairs.pairs.pop_back();

    Polynomial h = reduce_against(s_polynomial(polys[pair.i], polys[pair.j]), polys, basis);
    if (h.is_zero()) continue;
    if (h.is_unit()) return unit_basis(h);
    polys.push_back(h.monic());
    update(polys, basis, pairs, polys.size() - 1);
  }

  // The basis is minimal; inter-reduce tails to obtain the reduced basis.
  std::vector<Polynomial> reduced;
  reduced.reserve(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (b != a) others.push_back(basis[b]);
    }
    reduced.push_back(reduce_against(polys[basis[a]], polys, others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) ==
           std::strong_ordering::greater;
  });
  return reduced;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || !basis[i].leading_coeff().is_one()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lm = basis[j].leading_monomial();
      for (const Term& t : basis[i].terms()) {
        if (lm.divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

}  // namespace starci
