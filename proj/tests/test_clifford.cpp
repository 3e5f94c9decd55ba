#include <catch_amalgamated.hpp>

#include <random>

#include "wallspan/clifford.hpp"

using namespace wallspan;

namespace {

GaussMatrix random_unit_matrix(std::size_t size, std::mt19937_64& rng) {
  const GaussInt units[] = {0, 1, -1, kI, -kI};
  std::uniform_int_distribution<int> pick(0, 4);
  GaussMatrix m(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(r, c) = units[pick(rng)];
  return m;
}

ComplexVector random_unit_vector(std::size_t size, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector z(size);
  double norm = 0.0;
  for (auto& c : z) {
    c = {g(rng), g(rng)};
    norm += std::norm(c);
  }
  for (auto& c : z) c /= std::sqrt(norm);
  return z;
}

}  // namespace

TEST_CASE("2x2 generators", "[clifford]") {
  const auto E = generator_2x2(Basic2x2::E);
  const auto g1 = generator_2x2(Basic2x2::G1);
  const auto g2 = generator_2x2(Basic2x2::G2);
  const auto T = generator_2x2(Basic2x2::T);
  CHECK(E == GaussMatrix{{1, 0}, {0, 1}});
  CHECK(g1 == GaussMatrix{{kI, 0}, {0, -kI}});
  CHECK(g2 == GaussMatrix{{0, kI}, {kI, 0}});
  CHECK(T == GaussMatrix{{0, -kI}, {kI, 0}});
  CHECK(T * T == E);
  CHECK(g1 * g2 == GaussMatrix{{0, -1}, {1, 0}});
  CHECK(g2 * g1 == GaussMatrix{{0, 1}, {-1, 0}});
  CHECK(parse_basic2x2("g2") == Basic2x2::G2);
  CHECK_THROWS_AS(parse_basic2x2("g3"), std::invalid_argument);
}

TEST_CASE("Kronecker products", "[clifford]") {
  const auto E = generator_2x2(Basic2x2::E);
  const auto g1 = generator_2x2(Basic2x2::G1);
  CHECK(kronecker(E, E) == GaussMatrix::identity(4));

  const auto k = kronecker(g1, E);
  CHECK(k(0, 0) == kI);
  CHECK(k(1, 1) == kI);
  CHECK(k(2, 2) == -kI);
  CHECK(k(3, 3) == -kI);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    const auto a = random_unit_matrix(2, rng);
    const auto b = random_unit_matrix(2, rng);
    const auto c = random_unit_matrix(2, rng);
    REQUIRE(kronecker(a, kronecker(b, c)) == kronecker(kronecker(a, b), c));
    // Mixed product property.
    const auto d = random_unit_matrix(2, rng);
    REQUIRE(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
  }
}

TEST_CASE("spin generators", "[clifford]") {
  const auto g1 = generator_2x2(Basic2x2::G1);
  const auto g2 = generator_2x2(Basic2x2::G2);
  const auto T = generator_2x2(Basic2x2::T);
  CHECK(spin_generator(1, 1) == g1);
  CHECK(spin_generator(2, 1) == g2);
  CHECK(spin_generator(3, 1) == kI * T);
  CHECK(spin_generator(4, 2) == kronecker(g2, T));
  CHECK(spin_generator(1, 2) == kronecker(generator_2x2(Basic2x2::E), g1));
  CHECK(spin_generator(5, 2) == kI * kronecker(T, T));
  CHECK(spin_generator(1, 0) == GaussMatrix{{kI}});
  CHECK_THROWS_AS(spin_generator(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(spin_generator(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(spin_generator(6, 2), std::invalid_argument);
}

TEST_CASE("predicted quasi-real signs", "[clifford]") {
  CHECK(predicted_sign(1, 1) == -1);
  CHECK(predicted_sign(2, 1) == -1);
  CHECK(predicted_sign(3, 1) == 1);
  CHECK(predicted_sign(1, 0) == -1);
  CHECK(predicted_sign(5, 2) == -1);
  CHECK_THROWS_AS(predicted_sign(4, 1), std::invalid_argument);

  // Cross-check against entrywise conjugation of the spin generators.
  for (std::uint64_t nu = 0; nu <= 4; ++nu)
    for (std::uint64_t j = 1; j <= 2 * nu + 1; ++j) {
      const auto x = spin_generator(j, nu);
      const int s = predicted_sign(j, nu);
      REQUIRE(x.conj() == GaussInt{s} * x);
    }
}

TEST_CASE("family construction", "[clifford]") {
  const auto f1 = build_family(1);
  REQUIRE(f1.count() == 3);
  CHECK(f1.matrices[0] == generator_2x2(Basic2x2::G1));
  CHECK(f1.matrices[1] == generator_2x2(Basic2x2::G2));
  CHECK(f1.matrices[2] == kI * generator_2x2(Basic2x2::T));

  const auto f2 = build_family(2);
  REQUIRE(f2.count() == 1);
  CHECK(f2.b == 3);
  CHECK(f2.matrices[0] == kI * GaussMatrix::identity(3));

  const auto f0 = build_family(0);
  REQUIRE(f0.count() == 1);
  CHECK(f0.matrices[0] == GaussMatrix{{kI}});

  for (std::uint64_t n = 0; n <= 40; ++n) {
    const auto f = build_family(n);
    REQUIRE(f.count() == 2 * nu(n + 1) + 1);
    const std::size_t block = std::size_t{1} << f.nu;
    for (const auto& a : f.matrices) {
      REQUIRE(a.size() == n + 1);
      // Block diagonal with b identical blocks.
      for (std::size_t r = 0; r <= n; ++r)
        for (std::size_t c = 0; c <= n; ++c) {
          if (r / block != c / block) REQUIRE(a(r, c).is_zero());
          else REQUIRE(a(r, c) == a(r % block, c % block));
          const auto v = a(r, c);
          REQUIRE((v.is_zero() || std::abs(v.re) + std::abs(v.im) == 1));
        }
    }
  }
}

TEST_CASE("family verification", "[clifford]") {
  for (std::uint64_t n = 0; n <= 16; ++n) {
    const auto report = verify_family(build_family(n));
    REQUIRE(report.all_pass());
  }
  const auto r1 = verify_family(build_family(1));
  CHECK(r1.count(IdentityCheck::Kind::Anticommute, true) == 3);
  const auto r0 = verify_family(build_family(0));
  CHECK(r0.count(IdentityCheck::Kind::Anticommute, true) == 0);
  CHECK(r0.count(IdentityCheck::Kind::SkewHermitian, true) == 1);
  CHECK(r0.count(IdentityCheck::Kind::QuasiReal, true) == 1);

  SECTION("perturbed entries are detected") {
    for (std::uint64_t n : {1, 3, 7}) {
      auto f = build_family(n);
      f.matrices[0](0, 1) += 1;
      REQUIRE_FALSE(verify_family(f).all_pass());
    }
    auto f0 = build_family(0);
    f0.matrices[0](0, 0) += 1;
    CHECK_FALSE(verify_family(f0).all_pass());
  }
  SECTION("wrong sign is detected") {
    auto f = build_family(3);
    f.predicted_signs[2] = -f.predicted_signs[2];
    const auto r = verify_family(f);
    CHECK(r.count(IdentityCheck::Kind::QuasiReal, false) == 1);
  }
}

TEST_CASE("beta", "[clifford]") {
  const ComplexVector one{Complex{1.0, 0.0}};
  const auto b = beta(one, GaussMatrix{{kI}});
  CHECK(b.real() == 0.0);
  CHECK(b.imag() == -1.0);
  CHECK_THROWS_AS(beta(one, GaussMatrix::identity(2)), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (std::uint64_t n : {1, 3, 5, 7, 11, 15}) {
    const auto f = build_family(n);
    for (int t = 0; t < 50; ++t) {
      const auto z = random_unit_vector(n + 1, rng);
      const Complex omega = std::polar(1.0, angle(rng));
      ComplexVector wz = z;
      for (auto& c : wz) c *= omega;
      for (std::size_t j = 0; j < f.count(); ++j) {
        const auto bj = beta(z, f.matrices[j]);
        REQUIRE(std::abs(bj.real()) <= 1e-12);
        REQUIRE(std::abs(beta(wz, f.matrices[j]) - bj) <= 1e-12);
        // Pairwise imaginarity of <A_j z, A_k z>.
        for (std::size_t k = j + 1; k < f.count(); ++k) {
          const auto ajz = apply_matrix(f.matrices[j], z);
          const auto akz = apply_matrix(f.matrices[k], z);
          REQUIRE(std::abs(hermitian(ajz, akz).real()) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("matrix printing", "[clifford]") {
  std::ostringstream os;
  os << generator_2x2(Basic2x2::T);
  CHECK(os.str() == "[ 0 -i]\n[ i  0]\n");
}
