#include <doctest.h>

#include <set>

#include "starci/arrangement.hpp"
#include "support/fixtures.hpp"
#include "support/random_poly.hpp"

using namespace starci;
using starci::testing::generic_four;
using starci::testing::hartshorne;
using starci::testing::xyzw;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

Polynomial v(std::size_t k, std::size_t i, FieldSpec f = QQ) { return Polynomial::variable(f, k, i); }

// Cofactor-expansion determinant, independent of row reduction.
Scalar determinant(const std::vector<Row>& m) {
  if (m.size() == 1) return m[0][0];
  Scalar total = Scalar::zero(m[0][0].field());
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::vector<Row> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      Row row;
      for (std::size_t cc = 0; cc < m.size(); ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(row);
    }
    Scalar term = m[0][c] * determinant(minor);
    total = c % 2 == 0 ? total + term : total - term;
  }
  return total;
}

// Minimum weight over all nonzero points of GF(p)^k: the codeword of a
// point v has entries l_i(v).
std::size_t min_distance_by_codewords(const Arrangement& a) {
  const std::uint32_t p = a.field().modulus();
  const std::size_t k = a.num_vars();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  std::size_t best = a.size() + 1;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<Scalar> point;
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      point.push_back(Scalar::from_int(a.field(), static_cast<std::int64_t>(c % p)));
      c /= p;
    }
    std::size_t weight = 0;
    for (const LinearForm& f : a.forms()) {
      Scalar value = Scalar::zero(a.field());
      for (std::size_t i = 0; i < k; ++i) value += f.coefficients()[i] * point[i];
      weight += !value.is_zero();
    }
    if (weight > 0) best = std::min(best, weight);
  }
  return best;
}

Arrangement small_random(std::size_t k, std::size_t n, FieldSpec field, std::uint64_t seed) {
  starci::testing::PolyGen gen(field, k, seed, 3);
  for (;;) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Row r;
      for (std::size_t c = 0; c < k; ++c) r.push_back(gen.scalar());
      rows.push_back(r);
    }
    try {
      return Arrangement::from_coefficients(field, k, rows);
    } catch (const DegenerateInputError&) {
    }
  }
}

}  // namespace

TEST_SUITE("arrangement construction") {
  TEST_CASE("duplicate and zero forms are rejected") {
    try {
      Arrangement::from_integers(QQ, 2, {{1, 0}, {0, 1}, {2, 0}});
      FAIL("expected a duplicate error");
    } catch (const DuplicateFormError& e) {
      CHECK(e.first() == 0);
      CHECK(e.second() == 2);
    }
    CHECK_THROWS_AS(Arrangement::from_integers(QQ, 2, {{1, 0}, {0, 0}}), DegenerateInputError);
    CHECK_THROWS_AS(Arrangement::from_integers(QQ, 1, {{1}}), UsageError);
    CHECK_THROWS_AS(Arrangement::from_integers(QQ, 2, {{1, 0, 0}}), UsageError);
  }

  TEST_CASE("deletion and permutation relabel") {
    auto a = generic_four();
    auto d = a.without(1);
    CHECK(d.size() == 3);
    CHECK(d.form(1) == a.form(2));
    CHECK(d.form(1).label() == 2);
    const std::size_t order[] = {3, 2, 1, 0};
    auto p = a.permuted(order);
    CHECK(p.form(0) == a.form(3));
    const std::size_t bad[] = {0, 0, 1, 2};
    CHECK_THROWS_AS(a.permuted(bad), UsageError);
  }
}

TEST_SUITE("rank and genericity") {
  TEST_CASE("rank examples") {
    CHECK(rank(Arrangement::from_integers(QQ, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})) == 2);
    CHECK(rank(generic_four()) == 3);
    CHECK(rank(hartshorne()) == 4);
  }

  TEST_CASE("genericity examples") {
    CHECK(is_s_generic(hartshorne(), 2));
    CHECK(is_s_generic(generic_four(), 2));
    CHECK(is_s_generic(generic_four(), 3));
    CHECK_FALSE(is_s_generic(hartshorne(), 4));
    auto witness = genericity_witness(hartshorne(), 4);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(is_s_generic(generic_four(), 1), UsageError);
    CHECK_THROWS_AS(is_s_generic(generic_four(), 4), UsageError);
  }

  TEST_CASE("3-genericity of {x,y,z,x+y+z} agrees with its 3x3 minors") {
    auto a = generic_four();
    for (const auto& subset : combinations(4, 3)) {
      std::vector<Row> m;
      for (std::size_t i : subset) m.push_back(a.form(i).coefficients());
      CHECK_FALSE(determinant(m).is_zero());
    }
  }

  TEST_CASE("genericity agrees with minors and is monotone on random arrangements") {
    const FieldSpec f = FieldSpec::prime(7);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto a = small_random(4, 6, f, seed);
      for (std::size_t s = 2; s <= 4; ++s) {
        bool by_minors = true;
        for (const auto& subset : combinations(a.size(), s)) {
          if (s == a.num_vars()) {
            std::vector<Row> m;
            for (std::size_t i : subset) m.push_back(a.form(i).coefficients());
            by_minors = by_minors && !determinant(m).is_zero();
          }
        }
        if (s == a.num_vars()) CHECK(is_s_generic(a, s) == by_minors);
        if (is_s_generic(a, s)) {
          for (std::size_t t = 2; t < s; ++t) CHECK(is_s_generic(a, t));
        }
      }
    }
  }
}

TEST_SUITE("products and a-fold ideals") {
  TEST_CASE("subset products") {
    auto a = generic_four();
    const std::size_t one[] = {2};
    CHECK(subset_product(a, one).expand() == v(3, 2));
    const std::size_t last3[] = {1, 2, 3};
    auto x = v(3, 0), y = v(3, 1), z = v(3, 2);
    CHECK(subset_product(a, last3).expand() == y * z * (x + y + z));
    const std::size_t all[] = {0, 1, 2, 3};
    CHECK(subset_product(a, all).expand() == x * y * z * (x + y + z));
    CHECK_THROWS_AS(subset_product(a, std::span<const std::size_t>{}), UsageError);
    const std::size_t bad[] = {4};
    CHECK_THROWS_AS(subset_product(a, bad), UsageError);
  }

  TEST_CASE("a-fold ideals") {
    auto a = generic_four();
    auto x = v(3, 0), y = v(3, 1), z = v(3, 2);
    auto top = afold_ideal(a, 4);
    REQUIRE(top.generators().size() == 1);
    CHECK(top.groebner_basis().size() == 1);
    CHECK(top.generators()[0] == x * y * z * (x + y + z));
    auto linear = afold_ideal(a, 1);
    CHECK(linear.generators().size() == 4);
    CHECK(linear.generators()[3] == x + y + z);
    CHECK(afold_ideal(hartshorne(), 4).generators().size() == 15);
    CHECK_THROWS_AS(afold_ideal(a, 0), UsageError);
    CHECK_THROWS_AS(afold_ideal(a, 5), UsageError);
  }
}

TEST_SUITE("minimal linear primes") {
  TEST_CASE("generic arrangements give every (j+1)-subset") {
    for (std::uint64_t seed : {1u, 2u}) {
      auto a = random_generic_arrangement(4, 6, FieldSpec::prime(32003), seed);
      for (std::size_t j = 0; j <= 2; ++j) {
        auto primes = minimal_linear_primes(a, j);
        CHECK(primes.size() == binomial(6, j + 1));
        std::set<std::vector<std::size_t>> supports;
        for (const auto& p : primes) {
          CHECK(p.height() == j + 1);
          CHECK(p.support().size() == j + 1);
          supports.insert(p.support());
        }
        CHECK(supports.size() == primes.size());
      }
    }
  }

  TEST_CASE("Hartshorne arrangement at a = 4 has two planes") {
    auto a = hartshorne();
    auto primes = minimal_linear_primes(a, 2);
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].to_string(xyzw()) == "<x, y>");
    CHECK(primes[1].to_string(xyzw()) == "<z, w>");
    CHECK(primes[0].support() == std::vector<std::size_t>{0, 1, 2});
    CHECK(primes[1].support() == std::vector<std::size_t>{3, 4, 5});
  }

  TEST_CASE("j = 0 gives the hyperplanes") {
    auto a = hartshorne();
    auto primes = minimal_linear_primes(a, 0);
    REQUIRE(primes.size() == 6);
    for (const auto& p : primes) CHECK(p.height() == 1);
    CHECK_THROWS_AS(minimal_linear_primes(a, 6), UsageError);
  }

  TEST_CASE("linear prime membership") {
    auto a = hartshorne();
    const std::size_t xy[] = {0, 1};
    LinearPrime p(a, xy);
    CHECK(p.contains(a.form(2)));
    CHECK_FALSE(p.contains(a.form(3)));
    auto x = v(4, 0), z = v(4, 2);
    CHECK(p.contains(x * z + x * x));
    CHECK_FALSE(p.contains(z * z + x));
    CHECK(p.contains(x * z) == ideal_member(x * z, p.ideal()));
  }
}

TEST_SUITE("combinatorial radical and heights") {
  TEST_CASE("principal case") {
    auto a = generic_four();
    auto r = combinatorial_radical(a, 0);
    CHECK(ideal_eq(r, afold_ideal(a, 4)));
  }

  TEST_CASE("Hartshorne a = 4 radical is <x,y> n <z,w>") {
    auto a = hartshorne();
    auto x = v(4, 0), y = v(4, 1), z = v(4, 2), w = v(4, 3);
    auto r = combinatorial_radical(a, 2);
    CHECK(ideal_eq(r, Ideal(QQ, 4, {x * z, x * w, y * z, y * w})));
    CHECK(radical_eq(r, afold_ideal(a, 4)));
  }

  TEST_CASE("generic j = 1 matches the Groebner radical of I(A,3)") {
    auto a = generic_four();
    CHECK(radical_eq(combinatorial_radical(a, 1), afold_ideal(a, 3)));
  }

  TEST_CASE("radical pipeline on every j of small fixtures") {
    for (const auto& a : {generic_four(FieldSpec::prime(32003)), hartshorne(FieldSpec::prime(32003)),
                          random_generic_arrangement(3, 5, FieldSpec::prime(32003), 4)}) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(radical_eq(combinatorial_radical(a, j), afold_ideal(a, a.size() - j)));
      }
    }
  }

  TEST_CASE("heights") {
    auto h = hartshorne();
    const std::size_t expected[] = {4, 4, 3, 2, 2, 1};  // a = 1..6
    for (std::size_t a = 1; a <= 6; ++a) CHECK(height_afold(h, 6 - a) == expected[a - 1]);
    auto g = generic_four();
    CHECK(height_afold(g, 0) == 1);
    CHECK(height_afold(g, 1) == 2);
  }

  TEST_CASE("height bound below the minimum distance range") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      auto a = small_random(4, 6, FieldSpec::prime(5), seed);
      const std::size_t k = a.num_vars(), n = a.size(), d = min_distance(a);
      for (std::size_t j = 0; j + d + 1 <= n; ++j) {
        CHECK(height_afold(a, j) <= std::min(k - 1, j + 1));
      }
    }
  }
}

TEST_SUITE("minimum distance") {
  TEST_CASE("examples") {
    CHECK(min_distance(generic_four()) == 2);
    CHECK(min_distance(hartshorne()) == 2);
    CHECK(min_distance(Arrangement::from_integers(QQ, 2, {{1, 1}})) == 1);
  }

  TEST_CASE("generic arrangements meet the Singleton bound") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 5}, {4, 6}, {3, 3}}) {
        auto a = random_generic_arrangement(k, n, FieldSpec::prime(101), seed);
        CHECK(min_distance(a) == n - k + 1);
      }
    }
  }

  TEST_CASE("agrees with codeword enumeration over small fields") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      auto a = small_random(3, 5, FieldSpec::prime(7), seed);
      CHECK(min_distance(a) == min_distance_by_codewords(a));
    }
    CHECK(min_distance_by_codewords(hartshorne(FieldSpec::prime(3))) == 2);
  }
}

TEST_SUITE("random generic arrangements") {
  TEST_CASE("square case accepts any basis") {
    auto coords = Arrangement::from_integers(QQ, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(is_s_generic(coords, 3));
    auto a = random_generic_arrangement(3, 3, QQ, 9);
    CHECK(rank(a) == 3);
  }

  TEST_CASE("generated arrangements are generic and seed-deterministic") {
    auto a = random_generic_arrangement(3, 5, FieldSpec::prime(101), 1);
    CHECK(is_s_generic(a, 3));
    CHECK(a.size() == 5);
    auto b = random_generic_arrangement(3, 5, FieldSpec::prime(101), 1);
    CHECK(a.forms() == b.forms());
    auto q = random_generic_arrangement(4, 6, QQ, 3);
    CHECK(is_s_generic(q, 4));
  }

  TEST_CASE("GF(2) has no 3-generic set of five forms") {
    const FieldSpec f2 = FieldSpec::prime(2);
    // Exhaustive oracle over the 7 points of the projective plane over GF(2).
    std::vector<std::vector<std::int64_t>> points;
    for (int m = 1; m < 8; ++m) points.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
    std::size_t generic_subsets = 0;
    for (const auto& subset : combinations(7, 5)) {
      std::vector<std::vector<std::int64_t>> rows;
      for (std::size_t i : subset) rows.push_back(points[i]);
      generic_subsets += is_s_generic(Arrangement::from_integers(f2, 3, rows), 3);
    }
    CHECK(generic_subsets == 0);
    CHECK_THROWS_AS(random_generic_arrangement(3, 5, f2, 0), GenerationError);
    try {
      random_generic_arrangement(3, 5, f2, 0);
    } catch (const GenerationError& e) {
      CHECK(std::string(e.what()).find("k=3, n=5, p=2") != std::string::npos);
    }
    CHECK_THROWS_AS(random_generic_arrangement(4, 3, f2, 0), UsageError);
  }
}
