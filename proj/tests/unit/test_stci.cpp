#include <doctest.h>

#include <chrono>

#include "starci/certificate.hpp"
#include "starci/schmitt_vogel.hpp"
#include "support/fixtures.hpp"
#include "support/mutations.hpp"

using namespace starci;
using starci::testing::generic_four;
using starci::testing::hartshorne;

namespace {

const FieldSpec GF = FieldSpec::prime(kDefaultPrime);

Polynomial l(const Arrangement& a, std::size_t label) { return a.form_polynomial(label - 1); }

ProductOfForms prod(const Arrangement& a, std::initializer_list<std::size_t> labels) {
  std::vector<std::size_t> idx;
  for (std::size_t x : labels) idx.push_back(x - 1);
  return subset_product(a, idx);
}

// l_u times the sum of l_I over |I| = n-j-1 subsets of {u+1..n}, built with
// polynomial arithmetic only (1-based labels).
Polynomial f_by_hand(const Arrangement& a, std::size_t j, std::size_t u) {
  const std::size_t n = a.size();
  Polynomial sum(a.field(), a.num_vars());
  for (const auto& pick : combinations(n - u, n - j - 1)) {
    Polynomial term = Polynomial::constant(a.field(), a.num_vars(), Scalar::one(a.field()));
    for (std::size_t p : pick) term = term * l(a, u + 1 + p);
    sum += term;
  }
  return l(a, u) * sum;
}

}  // namespace

TEST_SUITE("theorem_generators") {
  TEST_CASE("j = 0 is the principal case") {
    auto a = generic_four();
    auto cert = theorem_generators(a, 0);
    CHECK(cert.f_gens.empty());
    CHECK(cert.tail_poly == l(a, 1) * l(a, 2) * l(a, 3) * l(a, 4));
    CHECK(cert.generator_names() == std::vector<std::string>{"tail"});
  }

  TEST_CASE("j = 1, n = 4") {
    auto a = generic_four();
    auto cert = theorem_generators(a, 1);
    REQUIRE(cert.f_gens.size() == 1);
    CHECK(cert.f_gens[0] ==
          l(a, 1) * (l(a, 3) * l(a, 4) + l(a, 2) * l(a, 4) + l(a, 2) * l(a, 3)));
    CHECK(cert.tail_poly == l(a, 2) * l(a, 3) * l(a, 4));
    CHECK(cert.f_terms[0].summands.size() == 3);
  }

  TEST_CASE("j = 2, n = 5") {
    auto a = random_generic_arrangement(4, 5, GF, 3);
    auto cert = theorem_generators(a, 2);
    REQUIRE(cert.f_gens.size() == 2);
    CHECK(cert.f_gens[1] == l(a, 2) * (l(a, 3) * l(a, 4) + l(a, 3) * l(a, 5) + l(a, 4) * l(a, 5)));
    CHECK(cert.tail_poly == l(a, 3) * l(a, 4) * l(a, 5));
    CHECK(cert.f_terms[0].summands.size() == 6);
    CHECK(cert.f_gens[0] == f_by_hand(a, 2, 1));
  }

  TEST_CASE("expansion matches the defining formula on random fixtures") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto a = random_generic_arrangement(4, 6, GF, seed);
      for (std::size_t j = 0; j <= 2; ++j) {
        auto cert = theorem_generators(a, j);
        CHECK(cert.generators().size() == j + 1);
        for (std::size_t u = 1; u <= j; ++u) CHECK(cert.f_gens[u - 1] == f_by_hand(a, j, u));
      }
    }
  }

  TEST_CASE("non-generic input is rejected with a dependent subset") {
    try {
      theorem_generators(hartshorne(), 1);
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("{l1, l2, l3, l4}") != std::string::npos);
    }
  }

  TEST_CASE("j outside 0..k-2 is a usage error") {
    CHECK_THROWS_AS(theorem_generators(generic_four(), 2), UsageError);
    CHECK_THROWS_AS(theorem_generators(generic_four(), 0, 4), UsageError);
  }
}

TEST_SUITE("verify_certificate") {
  TEST_CASE("two-generator instance holds in every mode") {
    auto cert = theorem_generators(generic_four(), 1);
    for (auto mode : {VerifyMode::GroebnerOnly, VerifyMode::CombinatorialOnly, VerifyMode::Both}) {
      auto report = verify_certificate(cert, mode);
      CHECK(report.holds());
      CHECK(report.first_failure() == nullptr);
      CHECK(report.notes.empty());
    }
    auto both = verify_certificate(cert, VerifyMode::Both);
    auto count = [&](const std::string& check) {
      return std::count_if(both.witnesses.begin(), both.witnesses.end(),
                           [&](const Witness& w) { return w.check == check; });
    };
    CHECK(count("containment") == 2);
    CHECK(count("radical") == 4 + 2);
    CHECK(count("prime") == 2 * 6);
    CHECK(count("product") == 4);
  }

  TEST_CASE("j = 0 holds trivially") {
    auto report = verify_certificate(theorem_generators(random_generic_arrangement(3, 5, GF, 0), 0));
    CHECK(report.holds());
  }

  TEST_CASE("dropping a summand is caught with a named witness") {
    auto cert = starci::testing::drop_summand(theorem_generators(generic_four(), 1), 0, 0);
    auto report = verify_certificate(cert);
    CHECK(report.verdict == Verdict::Fails);
    const Witness* w = report.first_failure();
    REQUIRE(w != nullptr);
    CHECK_FALSE(w->generator.empty());
    CHECK_FALSE(w->target.empty());
    // Both routes see the failure, so there is no consistency alarm.
    CHECK(report.notes.empty());
  }

  TEST_CASE("swapping a tail form is caught") {
    auto cert = starci::testing::swap_tail_form(theorem_generators(generic_four(), 1), 3, 0);
    auto report = verify_certificate(cert);
    CHECK(report.verdict == Verdict::Fails);
    REQUIRE(report.first_failure() != nullptr);
  }

  TEST_CASE("truncating the tail breaks containment") {
    auto cert = starci::testing::truncate_tail(theorem_generators(generic_four(), 1), 1);
    auto report = verify_certificate(cert);
    CHECK(report.verdict == Verdict::Fails);
    REQUIRE(report.first_failure() != nullptr);
    CHECK(report.first_failure()->check == "containment");
    CHECK(report.first_failure()->generator == "tail");
  }

  TEST_CASE("collapsing F_1 to one summand is caught") {
    auto cert = starci::testing::lower_to_single_summand(
        theorem_generators(random_generic_arrangement(4, 5, GF, 1), 2), 0);
    CHECK(verify_certificate(cert).verdict == Verdict::Fails);
  }

  TEST_CASE("an expired budget is inconclusive, never a verdict") {
    Budget expired(std::chrono::duration<double>(0));
    auto report = verify_certificate(theorem_generators(generic_four(), 1), VerifyMode::Both, &expired);
    CHECK(report.inconclusive());
    CHECK_FALSE(report.holds());
  }

  TEST_CASE("holds is the conjunction of witnesses") {
    auto good = verify_certificate(theorem_generators(generic_four(GF), 1));
    CHECK(good.holds() == std::all_of(good.witnesses.begin(), good.witnesses.end(),
                                      [](const Witness& w) { return w.result; }));
    CHECK(good.field_used == GF);
  }

  TEST_CASE("rank-deficient k-generic shape: j up to k-2 on random fixtures") {
    for (std::uint64_t seed = 10; seed < 12; ++seed) {
      auto a = random_generic_arrangement(4, 6, GF, seed);
      for (std::size_t j = 1; j <= 2; ++j) CHECK(verify_certificate(theorem_generators(a, j)).holds());
    }
  }

  TEST_CASE("label permutation preserves the theorem") {
    auto a = random_generic_arrangement(4, 5, GF, 8);
    const std::size_t order[] = {4, 2, 0, 3, 1};
    CHECK(verify_certificate(theorem_generators(a.permuted(order), 2)).holds());
  }
}

TEST_SUITE("induction step") {
  TEST_CASE("deleting l_v leaves the theorem at j-1 with the G_u generators") {
    auto a = random_generic_arrangement(4, 6, GF, 2);
    const std::size_t j = 2;
    auto cert = theorem_generators(a, j);
    for (std::size_t v = j; v < a.size(); ++v) {
      const Polynomial lv = a.form_polynomial(v);
      // F_u = G_u + l_v * Q.
      for (std::size_t u = 0; u < j; ++u) {
        Polynomial diff = cert.f_gens[u] - deletion_summand(a, j, u, v);
        CHECK(ideal_member(diff, Ideal(a.field(), a.num_vars(), {lv})));
      }
      auto deleted = deletion_generators(a, j, v);
      CHECK(deleted.j == j - 1);
      CHECK(deleted.arrangement.size() == a.size() - 1);
      // G_j = l_j ... ^l_v ... l_n is the tail.
      CHECK(deleted.tail_poly == deletion_summand(a, j, j - 1, v));
      const std::size_t s = rank(deleted.arrangement) == a.num_vars() ? a.num_vars() : a.num_vars() - 1;
      REQUIRE(is_s_generic(deleted.arrangement, s));
      auto direct = theorem_generators(deleted.arrangement, j - 1, s);
      CHECK(direct.generators() == deleted.generators());
      CHECK(verify_certificate(deleted).holds());
    }
  }
}

TEST_SUITE("schmitt-vogel") {
  SVPartition prop_partition(const Arrangement& a) {
    SVPartition p;
    p.ground = {prod(a, {2, 3, 4}), prod(a, {1, 3, 4}), prod(a, {1, 2, 4}), prod(a, {1, 2, 3})};
    p.parts = {{0}, {1, 2, 3}};
    p.exponents = {1, 1, 1, 1};
    return p;
  }

  TEST_CASE("two-part partition satisfies all conditions") {
    auto report = sv_check_partition(prop_partition(generic_four()));
    CHECK(report.holds());
    for (const auto& w : report.witnesses) {
      if (w.check == "sv-iii") CHECK(w.detail.find("in P_0") != std::string::npos);
    }
  }

  TEST_CASE("a two-element P_0 fails (ii)") {
    auto p = prop_partition(generic_four());
    p.parts = {{0, 1}, {2, 3}};
    auto report = sv_check_partition(p);
    CHECK_FALSE(report.holds());
    CHECK(report.first_failure()->check == "sv-ii");
  }

  TEST_CASE("a missing divisor fails (iii)") {
    auto h = hartshorne();
    SVPartition p;
    p.ground = {prod(h, {3, 4}), prod(h, {1, 4}), prod(h, {2, 5})};  // (x+y)z ; xz, yw
    p.parts = {{0}, {1, 2}};
    p.exponents = {1, 1, 1};
    auto report = sv_check_partition(p);
    CHECK_FALSE(report.holds());
    const Witness* w = report.first_failure();
    REQUIRE(w != nullptr);
    CHECK(w->check == "sv-iii");
    CHECK(w->generator == "l1*l4 , l2*l5");
    CHECK_THROWS_AS(sv_sums(p), PreconditionError);
  }

  TEST_CASE("uncovered ground elements fail (i)") {
    auto p = prop_partition(generic_four());
    p.parts = {{0}, {1, 2}};
    auto report = sv_check_partition(p);
    CHECK(report.first_failure()->check == "sv-i");
  }

  TEST_CASE("sums") {
    auto a = generic_four();
    auto sums = sv_sums(prop_partition(a));
    REQUIRE(sums.size() == 2);
    CHECK(sums[0] == l(a, 2) * l(a, 3) * l(a, 4));
    CHECK(sums[1] == l(a, 1) * l(a, 3) * l(a, 4) + l(a, 1) * l(a, 2) * l(a, 4) +
                         l(a, 1) * l(a, 2) * l(a, 3));

    SVPartition squares;
    squares.ground = {prod(a, {1}), prod(a, {2, 3})};
    squares.parts = {{0}, {1}};
    squares.exponents = {2, 2};
    auto sq = sv_sums(squares);
    CHECK(sq[0] == l(a, 1) * l(a, 1));
    CHECK(sq[1] == (l(a, 2) * l(a, 3)).pow(2));

    CHECK(sv_sums(SVPartition{}).empty());
  }

  TEST_CASE("arithmetic-rank partition") {
    auto a = generic_four();
    auto p1 = sv_ara_partition(a, 1);
    REQUIRE(p1.parts.size() == 2);
    CHECK(p1.ground[p1.parts[0][0]] == prod(a, {2, 3, 4}));
    std::vector<ProductOfForms> part1;
    for (std::size_t i : p1.parts[1]) part1.push_back(p1.ground[i]);
    CHECK(part1.size() == 3);
    for (auto expected : {prod(a, {1, 3, 4}), prod(a, {1, 2, 4}), prod(a, {1, 2, 3})}) {
      CHECK(std::find(part1.begin(), part1.end(), expected) != part1.end());
    }
    CHECK(sv_check_partition(p1).holds());

    auto p0 = sv_ara_partition(a, 0);
    REQUIRE(p0.parts.size() == 1);
    CHECK(p0.ground[0] == prod(a, {1, 2, 3, 4}));
    CHECK_THROWS_AS(sv_ara_partition(a, 4), UsageError);
  }

  TEST_CASE("partial sums coincide with the theorem generators in reverse order") {
    auto a = random_generic_arrangement(4, 6, GF, 5);
    for (std::size_t j = 0; j <= 2; ++j) {
      auto sums = sv_sums(sv_ara_partition(a, j));
      auto cert = theorem_generators(a, j);
      REQUIRE(sums.size() == j + 1);
      CHECK(sums[0] == cert.tail_poly);
      for (std::size_t u = 1; u <= j; ++u) CHECK(sums[u] == cert.f_gens[j - u]);
    }
  }

  TEST_CASE("Hartshorne partition bounds the arithmetic rank") {
    auto h = hartshorne(GF);
    for (std::size_t j = 0; j < h.size(); ++j) {
      auto p = sv_ara_partition(h, j);
      CHECK(sv_check_partition(p).holds());
      CHECK(radical_eq(Ideal::generated_by(sv_sums(p)), combinatorial_radical(h, j)));
    }
  }
}
