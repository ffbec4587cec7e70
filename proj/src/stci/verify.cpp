#include <algorithm>
#include <chrono>
#include <functional>

#include "parallel.hpp"
#include "starci/certificate.hpp"

namespace starci {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct PlannedCheck {
  Witness witness;
  std::function<bool()> decide;
};

// Runs the planned checks, appends their witnesses in plan order and returns
// the conjunction. Unreached checks are dropped and flag the report.
bool execute(std::vector<PlannedCheck>& plan, VerificationReport& report, bool& cut) {
  auto results = detail::run_checks(
      plan.size(), [&](std::size_t i) { return plan[i].decide(); }, cut);
  bool all = true;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (!results[i]) continue;
    plan[i].witness.result = *results[i];
    all = all && *results[i];
    report.witnesses.push_back(std::move(plan[i].witness));
  }
  return all;
}

std::string subset_name(const std::vector<std::size_t>& subset) {
  std::string out;
  for (std::size_t i : subset) out += (out.empty() ? "l" : "*l") + std::to_string(i + 1);
  return out;
}

}  // namespace

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

const Witness* VerificationReport::first_failure() const {
  auto it = std::find_if(witnesses.begin(), witnesses.end(), [](const Witness& w) { return !w.result; });
  return it == witnesses.end() ? nullptr : &*it;
}

void VerificationReport::settle() {
  if (verdict == Verdict::Inconclusive) return;
  verdict = first_failure() == nullptr ? Verdict::Holds : Verdict::Fails;
}

std::vector<std::vector<std::size_t>> minimal_hitting_sets(const Arrangement& arrangement,
                                                           std::size_t j) {
  const std::size_t n = arrangement.size();
  if (n > 20) throw UsageError("hitting-set enumeration needs n <= 20");
  std::vector<std::uint32_t> supports;
  for (const LinearPrime& p : minimal_linear_primes(arrangement, j)) {
    std::uint32_t mask = 0;
    for (std::size_t i : p.support()) mask |= 1u << i;
    supports.push_back(mask);
  }
  std::vector<std::uint32_t> found;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 1; size <= n; ++size) {
    for (const auto& subset : combinations(n, size)) {
      std::uint32_t mask = 0;
      for (std::size_t i : subset) mask |= 1u << i;
      bool hits = std::all_of(supports.begin(), supports.end(),
                              [&](std::uint32_t s) { return (s & mask) != 0; });
      if (!hits) continue;
      bool minimal = std::none_of(found.begin(), found.end(),
                                  [&](std::uint32_t f) { return (f & mask) == f; });
      if (!minimal) continue;
      found.push_back(mask);
      out.push_back(subset);
    }
  }
  return out;
}

VerificationReport verify_certificate(const StciCertificate& cert, VerifyMode mode,
                                      const Budget* budget) {
  const Arrangement& arrangement = cert.arrangement;
  const std::size_t a = cert.fold();
  const std::string target_name = "I(A," + std::to_string(a) + ")";

  VerificationReport report;
  report.claim = "rad(" + target_name + ") = rad(F_1..F_" + std::to_string(cert.j) + ", tail)";
  report.field_used = arrangement.field();

  const Ideal target = afold_ideal(arrangement, a);
  const Ideal cert_ideal = cert.ideal();
  const std::vector<Polynomial> gens = cert.generators();
  const std::vector<std::string> names = cert.generator_names();
  bool cut = false;

  try {
    auto start = Clock::now();
    std::vector<PlannedCheck> containment;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      containment.push_back({{"containment", names[g], target_name, false, ""},
                             [&, g] { return ideal_member(gens[g], target, budget); }});
    }
    execute(containment, report, cut);
    report.timings.push_back({"containment", seconds_since(start)});

    std::optional<bool> groebner_ok, combinatorial_ok;

    if (!cut && mode != VerifyMode::CombinatorialOnly) {
      start = Clock::now();
      target.groebner_basis(MonomialOrder::grevlex(), budget);
      cert_ideal.groebner_basis(MonomialOrder::grevlex(), budget);
      std::vector<PlannedCheck> plan;
      const auto subsets = combinations(arrangement.size(), a);
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        plan.push_back({{"radical", subset_name(subsets[s]), "rad(cert)", false, ""},
                        [&, s] { return radical_member(target.generators()[s], cert_ideal, budget); }});
      }
      for (std::size_t g = 0; g < gens.size(); ++g) {
        plan.push_back({{"radical", names[g], "rad(" + target_name + ")", false, ""},
                        [&, g] { return radical_member(gens[g], target, budget); }});
      }
      groebner_ok = execute(plan, report, cut);
      report.timings.push_back({"groebner", seconds_since(start)});
    }

    if (!cut && mode != VerifyMode::GroebnerOnly) {
      start = Clock::now();
      const auto primes = minimal_linear_primes(arrangement, cert.j);
      cert_ideal.groebner_basis(MonomialOrder::grevlex(), budget);
      std::vector<PlannedCheck> plan;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t p = 0; p < primes.size(); ++p) {
          plan.push_back({{"prime", names[g], "<" + subset_name(primes[p].support()) + ">", false, ""},
                          [&, g, p] { return primes[p].contains(gens[g]); }});
        }
      }
      const auto hitting = minimal_hitting_sets(arrangement, cert.j);
      std::vector<Polynomial> products;
      for (const auto& h : hitting) products.push_back(subset_product(arrangement, h).expand());
      for (std::size_t h = 0; h < hitting.size(); ++h) {
        plan.push_back({{"product", subset_name(hitting[h]), "rad(cert)", false, ""},
                        [&, h] { return radical_member(products[h], cert_ideal, budget); }});
      }
      combinatorial_ok = execute(plan, report, cut);
      report.timings.push_back({"combinatorial", seconds_since(start)});
    }

    if (!cut && groebner_ok && combinatorial_ok && *groebner_ok != *combinatorial_ok) {
      report.notes.push_back(std::string("internal consistency failure: groebner route says ") +
                             (*groebner_ok ? "equal" : "different") + ", combinatorial route says " +
                             (*combinatorial_ok ? "equal" : "different"));
      report.witnesses.push_back({"consistency", "groebner vs combinatorial", report.claim, false,
                                  "the two decision routes disagree"});
    }
  } catch (const BudgetExceeded&) {
    cut = true;
  }

  if (cut) {
    report.verdict = Verdict::Inconclusive;
    report.notes.push_back("budget exceeded; verdict withheld");
  } else {
    report.settle();
  }
  return report;
}

}  // namespace starci
