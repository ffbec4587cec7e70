#include "starci/schmitt_vogel.hpp"

#include <algorithm>

namespace starci {

namespace {

std::string part_name(std::size_t l) { return "P_" + std::to_string(l); }

}  // namespace

VerificationReport sv_check_partition(const SVPartition& partition) {
  VerificationReport report;
  report.claim = "Schmitt-Vogel conditions (i)-(iii)";
  if (!partition.ground.empty() && !partition.ground.front().factors().empty()) {
    report.field_used = partition.ground.front().factors().front().field();
  }
  const std::size_t size = partition.ground.size();

  // (i) the parts cover the ground set and only index into it.
  std::vector<bool> covered(size, false);
  bool indices_ok = true;
  for (std::size_t l = 0; l < partition.parts.size(); ++l) {
    for (std::size_t idx : partition.parts[l]) {
      if (idx >= size) {
        indices_ok = false;
        report.witnesses.push_back({"sv-i", "#" + std::to_string(idx), part_name(l), false,
                                    "index outside the ground set"});
        continue;
      }
      covered[idx] = true;
    }
  }
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < size; ++i) {
    if (!covered[i]) missing.push_back(partition.ground[i].name());
  }
  if (missing.empty()) {
    if (indices_ok) report.witnesses.push_back({"sv-i", "P", "union of parts", true, "covered"});
  } else {
    for (const std::string& m : missing) {
      report.witnesses.push_back({"sv-i", m, "union of parts", false, "not in any part"});
    }
  }

  if (partition.exponents.size() != size ||
      std::any_of(partition.exponents.begin(), partition.exponents.end(),
                  [](unsigned e) { return e < 1; })) {
    report.witnesses.push_back({"exponents", "e", "P", false,
                                "need one exponent e(p) >= 1 per ground element"});
  }

  // (ii) P_0 is a singleton.
  const std::size_t p0 = partition.parts.empty() ? 0 : partition.parts.front().size();
  report.witnesses.push_back(
      {"sv-ii", part_name(0), "|P_0| = 1", p0 == 1, "|P_0| = " + std::to_string(p0)});

  // (iii) distinct p, p'' in P_l (l > 0) have a divisor p' of p*p'' in an earlier part.
  for (std::size_t l = 1; l < partition.parts.size(); ++l) {
    const auto& part = partition.parts[l];
    for (std::size_t x = 0; x < part.size(); ++x) {
      for (std::size_t y = x + 1; y < part.size(); ++y) {
        if (part[x] >= size || part[y] >= size || part[x] == part[y]) continue;
        const ProductOfForms& p = partition.ground[part[x]];
        const ProductOfForms& q = partition.ground[part[y]];
        const ProductOfForms pq = p * q;
        Witness w{"sv-iii", p.name() + " , " + q.name(), part_name(l), false,
                  "no divisor of the product in P_0..P_" + std::to_string(l - 1)};
        for (std::size_t earlier = 0; earlier < l && !w.result; ++earlier) {
          for (std::size_t idx : partition.parts[earlier]) {
            if (idx < size && product_divides(partition.ground[idx], pq)) {
              w.result = true;
              w.detail = partition.ground[idx].name() + " in " + part_name(earlier);
              break;
            }
          }
        }
        report.witnesses.push_back(std::move(w));
      }
    }
  }
  report.settle();
  return report;
}

std::vector<Polynomial> sv_sums(const SVPartition& partition) {
  if (partition.parts.empty()) return {};
  const VerificationReport check = sv_check_partition(partition);
  if (!check.holds()) {
    const Witness* w = check.first_failure();
    throw PreconditionError("invalid Schmitt-Vogel partition: " + w->check + " fails for " +
                            w->generator + " (" + w->detail + ")");
  }
  std::vector<Polynomial> sums;
  for (const auto& part : partition.parts) {
    Polynomial q = partition.ground[part.front()].pow(partition.exponents[part.front()]).expand();
    for (std::size_t i = 1; i < part.size(); ++i) {
      q += partition.ground[part[i]].pow(partition.exponents[part[i]]).expand();
    }
    sums.push_back(std::move(q));
  }
  return sums;
}

SVPartition sv_ara_partition(const Arrangement& arrangement, std::size_t j) {
  const std::size_t n = arrangement.size();
  if (j >= n) throw UsageError("j=" + std::to_string(j) + " outside 0.." + std::to_string(n - 1));
  SVPartition partition;
  auto add = [&](ProductOfForms p) {
    partition.ground.push_back(std::move(p));
    partition.exponents.push_back(1);
    return partition.ground.size() - 1;
  };

  std::vector<std::size_t> tail;
  for (std::size_t i = j; i < n; ++i) tail.push_back(i);
  partition.parts.push_back({add(subset_product(arrangement, tail))});

  // 0-based: P_u uses l_{j-u} against subsets of {j-u+1..n-1} of size n-j-1.
  for (std::size_t u = 1; u <= j; ++u) {
    const std::size_t lead = j - u;
    std::vector<std::size_t> pool;
    for (std::size_t i = lead + 1; i < n; ++i) pool.push_back(i);
    std::vector<std::size_t> part;
    for (const auto& pick : combinations(pool.size(), n - j - 1)) {
      std::vector<std::size_t> subset{lead};
      for (std::size_t p : pick) subset.push_back(pool[p]);
      part.push_back(add(subset_product(arrangement, subset)));
    }
    partition.parts.push_back(std::move(part));
  }
  return partition;
}

}  // namespace starci
