#include "starci/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace starci {

namespace {

std::vector<Row> rows_of(const Arrangement& arrangement, std::span<const std::size_t> subset) {
  std::vector<Row> rows;
  rows.reserve(subset.size());
  for (std::size_t i : subset) rows.push_back(arrangement.form(i).coefficients());
  return rows;
}

void check_subset(const Arrangement& arrangement, std::span<const std::size_t> subset) {
  for (std::size_t i : subset) {
    if (i >= arrangement.size()) {
      throw UsageError("form index " + std::to_string(i + 1) + " out of range 1.." +
                       std::to_string(arrangement.size()));
    }
  }
}

}  // namespace

Arrangement::Arrangement(FieldSpec field, std::size_t num_vars, std::vector<LinearForm> forms)
    : field_(field), num_vars_(num_vars), forms_(std::move(forms)) {
  if (num_vars < 2) throw UsageError("an arrangement needs at least 2 variables");
  if (num_vars > kMaxVars - 2) {
    throw UsageError("at most " + std::to_string(kMaxVars - 2) + " variables are supported");
  }
  if (forms_.empty()) throw UsageError("an arrangement needs at least one form");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const LinearForm& f = forms_[i];
    if (f.num_vars() != num_vars || f.field() != field) {
      throw UsageError("form " + std::to_string(i + 1) + " does not live in " + field.to_string() +
                       "[" + std::to_string(num_vars) + " vars]");
    }
    // Re-normalize in case the caller built the form by hand.
    forms_[i] = normalize_linear_form(f.coefficients(), i + 1);
    for (std::size_t j = 0; j < i; ++j) {
      if (forms_[j] == forms_[i]) throw DuplicateFormError(j, i);
    }
  }
}

Arrangement Arrangement::from_coefficients(FieldSpec field, std::size_t num_vars,
                                           const std::vector<Row>& rows) {
  std::vector<LinearForm> forms;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != num_vars) {
      throw UsageError("form " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " coefficients, expected " + std::to_string(num_vars));
    }
    try {
      forms.push_back(normalize_linear_form(rows[i], i + 1));
    } catch (const DegenerateInputError&) {
      throw DegenerateInputError("form " + std::to_string(i + 1) + " is the zero form");
    }
  }
  return Arrangement(field, num_vars, std::move(forms));
}

Arrangement Arrangement::from_integers(FieldSpec field, std::size_t num_vars,
                                       const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<Row> scalars;
  for (const auto& r : rows) {
    Row row;
    for (std::int64_t v : r) row.push_back(Scalar::from_int(field, v));
    scalars.push_back(std::move(row));
  }
  return from_coefficients(field, num_vars, scalars);
}

Arrangement Arrangement::without(std::size_t index) const {
  if (index >= forms_.size()) throw UsageError("deleted form index out of range");
  if (forms_.size() == 1) throw UsageError("cannot delete the only form");
  std::vector<LinearForm> rest;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (i != index) rest.push_back(forms_[i]);
  }
  return Arrangement(field_, num_vars_, std::move(rest));
}

Arrangement Arrangement::permuted(std::span<const std::size_t> order) const {
  if (order.size() != forms_.size()) throw UsageError("permutation has the wrong length");
  std::vector<bool> seen(forms_.size(), false);
  std::vector<LinearForm> out;
  for (std::size_t i : order) {
    if (i >= forms_.size() || seen[i]) throw UsageError("not a permutation of the form indices");
    seen[i] = true;
    out.push_back(forms_[i]);
  }
  return Arrangement(field_, num_vars_, std::move(out));
}

std::string Arrangement::to_string(std::span<const std::string> names) const {
  std::string out = "{";
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (i > 0) out += ", ";
    out += forms_[i].to_string(names);
  }
  return out + "}";
}

std::size_t rank(const Arrangement& arrangement) {
  std::vector<Row> rows;
  for (const LinearForm& f : arrangement.forms()) rows.push_back(f.coefficients());
  return matrix_rank(std::move(rows));
}

std::size_t subset_rank(const Arrangement& arrangement, std::span<const std::size_t> subset) {
  check_subset(arrangement, subset);
  return matrix_rank(rows_of(arrangement, subset));
}

std::optional<std::vector<std::size_t>> genericity_witness(const Arrangement& arrangement,
                                                           std::size_t s) {
  if (s < 2 || s > arrangement.num_vars()) {
    throw UsageError("genericity level s=" + std::to_string(s) + " outside 2.." +
                     std::to_string(arrangement.num_vars()));
  }
  for (const auto& subset : combinations(arrangement.size(), s)) {
    if (subset_rank(arrangement, subset) < s) return subset;
  }
  return std::nullopt;
}

bool is_s_generic(const Arrangement& arrangement, std::size_t s) {
  return !genericity_witness(arrangement, s).has_value();
}

ProductOfForms subset_product(const Arrangement& arrangement, std::span<const std::size_t> subset) {
  if (subset.empty()) throw UsageError("subset_product of the empty set");
  check_subset(arrangement, subset);
  std::vector<LinearForm> factors;
  for (std::size_t i : subset) factors.push_back(arrangement.form(i));
  return ProductOfForms(std::move(factors));
}

Ideal afold_ideal(const Arrangement& arrangement, std::size_t a) {
  if (a < 1 || a > arrangement.size()) {
    throw UsageError("a=" + std::to_string(a) + " outside 1.." + std::to_string(arrangement.size()));
  }
  std::vector<Polynomial> gens;
  for (const auto& subset : combinations(arrangement.size(), a)) {
    gens.push_back(subset_product(arrangement, subset).expand());
  }
  return Ideal(arrangement.field(), arrangement.num_vars(), std::move(gens));
}

std::size_t min_distance(const Arrangement& arrangement) {
  const std::size_t n = arrangement.size();
  if (n > 20) throw UsageError("min_distance enumerates subsets; n must be at most 20");
  const std::size_t r = rank(arrangement);
  // Largest set of forms vanishing at a common point: rank at most r - 1.
  std::size_t largest = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= largest) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    if (subset_rank(arrangement, subset) + 1 <= r) largest = size;
  }
  return n - largest;
}

Arrangement random_generic_arrangement(std::size_t k, std::size_t n, FieldSpec field,
                                       std::uint64_t seed) {
  if (k < 2 || k > n) {
    throw UsageError("random arrangement needs 2 <= k <= n, got k=" + std::to_string(k) +
                     ", n=" + std::to_string(n));
  }
  constexpr int kRestarts = 200;
  constexpr int kDrawsPerForm = 100;
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    if (field.is_prime()) return Scalar::from_int(field, static_cast<std::int64_t>(rng() % field.modulus()));
    return Scalar::from_int(field, static_cast<std::int64_t>(rng() % 19) - 9);
  };

  for (int restart = 0; restart < kRestarts; ++restart) {
    std::vector<Row> chosen;
    bool stuck = false;
    while (chosen.size() < n && !stuck) {
      stuck = true;
      for (int attempt = 0; attempt < kDrawsPerForm; ++attempt) {
        Row candidate(k);
        for (Scalar& c : candidate) c = draw();
        if (std::all_of(candidate.begin(), candidate.end(), [](const Scalar& c) { return c.is_zero(); })) {
          continue;
        }
        // Every subset containing the candidate must stay independent up to size k.
        const std::size_t partner = std::min(k - 1, chosen.size());
        bool ok = true;
        for (const auto& subset : combinations(chosen.size(), partner)) {
          std::vector<Row> rows{candidate};
          for (std::size_t i : subset) rows.push_back(chosen[i]);
          if (matrix_rank(std::move(rows)) != partner + 1) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen.push_back(std::move(candidate));
        stuck = false;
        break;
      }
    }
    if (!stuck) return Arrangement::from_coefficients(field, k, chosen);
  }
  throw GenerationError("no " + std::to_string(k) + "-generic arrangement of " + std::to_string(n) +
                        " forms found over " + field.to_string() + " (k=" + std::to_string(k) +
                        ", n=" + std::to_string(n) + ", p=" + std::to_string(field.modulus()) + ")");
}

}  // namespace starci
