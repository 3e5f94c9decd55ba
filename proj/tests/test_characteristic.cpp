#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "wallspan/characteristic.hpp"

using namespace wallspan;

namespace {

// Naive expansion oracle: polynomials as sets of (x, c, d) exponents,
// reduced by direct case analysis instead of the rewriting engine.
using NaivePoly = std::set<std::array<std::uint32_t, 3>>;

std::optional<std::array<std::uint32_t, 3>> reduce(std::array<std::uint32_t, 3> e, std::uint32_t m, std::uint32_t n) {
  if (e[2] > n) return std::nullopt;
  if (e[1] > m) {
    if (e[0] >= 1 || e[1] > m + 1) return std::nullopt;
    return std::array<std::uint32_t, 3>{1, m, e[2]};
  }
  if (e[0] >= 2) return std::nullopt;
  return e;
}

NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b, std::uint32_t m, std::uint32_t n) {
  NaivePoly r;
  for (const auto& s : a)
    for (const auto& t : b)
      if (auto e = reduce({s[0] + t[0], s[1] + t[1], s[2] + t[2]}, m, n)) {
        if (!r.insert(*e).second) r.erase(*e);
      }
  return r;
}

NaivePoly naive_total_sw(std::uint32_t m, std::uint32_t n) {
  const NaivePoly one{{0, 0, 0}};
  NaivePoly r = naive_mul(one, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}}, m, n);
  for (std::uint32_t i = 0; i + 1 < m; ++i) r = naive_mul(r, {{0, 0, 0}, {0, 1, 0}}, m, n);
  for (std::uint32_t i = 0; i < n + 1; ++i) r = naive_mul(r, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, m, n);
  return r;
}

GradedF2Poly from_naive(const RingPtr& ring, const NaivePoly& p) {
  GradedF2Poly r(ring);
  for (const auto& e : p) r += GradedF2Poly::monomial(ring, {e[0], e[1], e[2]});
  return r;
}

GradedF2Poly random_poly(const RingPtr& ring, std::mt19937_64& rng) {
  F2Vector v(ring->basis_size());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < ring->basis_size(); ++i)
    if (coin(rng)) v.set(i);
  return {ring, v};
}

}  // namespace

TEST_CASE("total Stiefel-Whitney class of Q(m,n)", "[characteristic]") {
  CHECK(total_sw_wall({1, 0}).to_string() == "1 + x");
  CHECK(total_sw_wall({1, 1}).to_string() == "1 + x + c + x*c");
  CHECK(total_sw_wall({2, 1}).to_string() == "1 + x + x*c + x*c^2");
  CHECK(total_sw_wall({3, 1}).to_string() == "1 + x + c + x*c^3");

  const auto w22 = total_sw_wall({2, 2});
  CHECK(w22.component(0) == GradedF2Poly::one(w22.ring()));
  CHECK(w22.component(4).to_string() == "x*c*d + d^2");

  for (std::uint32_t m = 1; m <= 5; ++m)
    for (std::uint32_t n = 0; n <= 5; ++n) {
      const auto w = total_sw_wall({m, n});
      REQUIRE(w == from_naive(w.ring(), naive_total_sw(m, n)));
      REQUIRE(w.constant_term());
      // Mapping tori have Euler characteristic 0, so the top class vanishes.
      REQUIRE(w.component(m + 2 * n + 1).is_zero());
    }
}

TEST_CASE("fibre restriction to CP^n", "[characteristic]") {
  const auto ring = wall_ring({3, 4});
  const auto cp = cpn_ring(4);
  const auto a = GradedF2Poly::generator(cp, "a");
  for (std::uint32_t k = 0; k <= 4; ++k)
    CHECK(fiber_restriction(GradedF2Poly::monomial(ring, {0, 0, k})) == a.pow(k));
  CHECK(fiber_restriction(GradedF2Poly::monomial(ring, {1, 1, 1})).is_zero());

  const auto w22 = total_sw_wall({2, 2});
  CHECK(fiber_restriction(w22.component(4)).to_string() == "a^2");

  // Even n: w_2n restricts to the nonzero top class a^n of CP^n.
  for (std::uint64_t m = 1; m <= 4; ++m)
    for (std::uint64_t n = 2; n <= 6; n += 2) {
      const auto w = total_sw_wall({m, n});
      const auto top = fiber_restriction(w.component(static_cast<std::uint32_t>(2 * n)));
      REQUIRE(top == GradedF2Poly::generator(top.ring(), "a").pow(n));
    }

  CHECK_THROWS_AS(fiber_restriction(GradedF2Poly::one(cp)), std::invalid_argument);
  CHECK_THROWS_AS(fiber_restriction(GradedF2Poly::one(ring), cpn_ring(3)), std::invalid_argument);
}

TEST_CASE("fibre restriction is a ring homomorphism", "[characteristic][property]") {
  std::mt19937_64 rng(99);
  for (auto p : {WallParams{1, 1}, WallParams{2, 3}, WallParams{4, 2}}) {
    const auto ring = wall_ring(p);
    for (int t = 0; t < 50; ++t) {
      const auto a = random_poly(ring, rng);
      const auto b = random_poly(ring, rng);
      REQUIRE(fiber_restriction(a * b) == fiber_restriction(a) * fiber_restriction(b));
      REQUIRE(fiber_restriction(a + b) == fiber_restriction(a) + fiber_restriction(b));
    }
  }
}

TEST_CASE("degree-one classes of Q(m,n)", "[characteristic]") {
  const auto classes = degree_one_classes(wall_ring({2, 2}));
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].to_string() == "0");
  CHECK(classes[1].to_string() == "x");
  CHECK(classes[2].to_string() == "c");
  CHECK(classes[3].to_string() == "x + c");
}

TEST_CASE("virtual Stiefel-Whitney obstruction", "[characteristic]") {
  SECTION("k = 1 is never ruled out") {
    for (std::uint64_t m = 1; m <= 4; ++m)
      for (std::uint64_t n = 0; n <= 4; ++n) {
        const auto r = virtual_sw_rules_out({m, n}, 1);
        REQUIRE_FALSE(r.ruled_out);
        REQUIRE(r.survivor);
      }
  }

  SECTION("even n > 0: m + 2 line fields are ruled out") {
    for (std::uint64_t m = 1; m <= 4; ++m)
      for (std::uint64_t n : {2, 4}) {
        const auto r = virtual_sw_rules_out({m, n}, m + 2);
        REQUIRE(r.ruled_out);
        REQUIRE_FALSE(r.survivor);
        // (m+5 choose 3) multisets of size m+2 over four classes.
        const std::uint64_t multisets = (m + 5) * (m + 4) * (m + 3) / 6;
        REQUIRE(r.failures.size() == multisets);
        for (const auto& f : r.failures) REQUIRE(f.failure_degree > WallParams(m, n).dim() - (m + 2));
      }
  }

  SECTION("Q(2,2): k = 4 ruled out, k = 3 survives") {
    CHECK(virtual_sw_rules_out({2, 2}, 4).ruled_out);
    const auto r3 = virtual_sw_rules_out({2, 2}, 3);
    REQUIRE_FALSE(r3.ruled_out);
    REQUIRE(r3.survivor);
    // First survivor in enumeration order: {c, c, x + c}.
    CHECK(r3.survivor->counts == std::vector<std::uint32_t>{0, 0, 2, 1});
    const auto ring = wall_ring({2, 2});
    CHECK(render_multiset(*r3.survivor, degree_one_classes(ring)) == "{c, c, x + c}");
    // Multiplying back recovers w.
    const auto one = GradedF2Poly::one(ring);
    const auto c = GradedF2Poly::generator(ring, "c");
    const auto x = GradedF2Poly::generator(ring, "x");
    const auto u = *r3.survivor_class;
    CHECK(u * (one + c) * (one + c) * (one + x + c) == total_sw_wall({2, 2}));
    for (auto d : u.support_degrees()) CHECK(d <= 7u - 3u);
  }

  CHECK_THROWS_AS(virtual_sw_rules_out({2, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(virtual_sw_rules_out({2, 2}, 8), std::invalid_argument);
}

TEST_CASE("mod-2 upper bound on projective span", "[characteristic]") {
  CHECK(sw_upper_bound({2, 2}) == 3);
  CHECK(sw_upper_bound({1, 1}) == 4);

  // Frozen from an independent brute-force run, m = 1..4 by n = 0..8.
  const std::uint64_t expected[4][9] = {
      {2, 4, 2, 8, 2, 4, 2, 16, 2},
      {3, 5, 3, 9, 3, 5, 3, 17, 3},
      {4, 6, 4, 10, 4, 6, 4, 18, 4},
      {5, 7, 5, 11, 5, 7, 5, 19, 5},
  };
  for (std::uint64_t m = 1; m <= 4; ++m)
    for (std::uint64_t n = 0; n <= 8; ++n) {
      const WallParams p{m, n};
      const auto bound = sw_upper_bound(p);
      REQUIRE(bound == expected[m - 1][n]);
      REQUIRE(bound >= pspan_wall(p));
      if (n % 2 == 0 && n > 0) REQUIRE(bound == m + 1);
    }
}
