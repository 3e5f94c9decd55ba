#pragma once
// Skew-Hermitian, pairwise anticommuting automorphisms A_1..A_{2nu+1} of C^(n+1),
// nu = nu(n+1), built from the spin representation of the complex Clifford
// algebra on (C^2)^{(x) nu}, repeated over b = (n+1)/2^nu diagonal blocks.
//
// The block/tensor identification of C^(n+1) is lexicographic: direct-sum
// blocks outermost, tensor factors left-major. Under it, componentwise complex
// conjugation on each C^2 factor is componentwise conjugation on C^(n+1).

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallspan/gauss.hpp"
#include "wallspan/invariants.hpp"

namespace wallspan {

/// Generators of M_2(C). `T` here is the Hermitian 2x2 matrix, unrelated to
/// the block/tensor identification above.
enum class Basic2x2 { E, G1, G2, T };

inline Basic2x2 parse_basic2x2(const std::string& name) {
  if (name == "E") return Basic2x2::E;
  if (name == "g1") return Basic2x2::G1;
  if (name == "g2") return Basic2x2::G2;
  if (name == "T") return Basic2x2::T;
  throw std::invalid_argument("generator_2x2: unknown generator '" + name + "'");
}

inline GaussMatrix generator_2x2(Basic2x2 g) {
  switch (g) {
    case Basic2x2::E:
      return {{1, 0}, {0, 1}};
    case Basic2x2::G1:
      return {{kI, 0}, {0, -kI}};
    case Basic2x2::G2:
      return {{0, kI}, {kI, 0}};
    case Basic2x2::T:
      return {{0, -kI}, {kI, 0}};
  }
  throw std::invalid_argument("generator_2x2: unknown generator");
}

inline GaussMatrix kronecker_power(const GaussMatrix& a, std::uint64_t k) {
  GaussMatrix out = GaussMatrix::identity(1);
  for (std::uint64_t t = 0; t < k; ++t) out = kronecker(out, a);
  return out;
}

inline void check_clifford_index(std::uint64_t j, std::uint64_t nu) {
  if (j < 1 || j > 2 * nu + 1)
    throw std::invalid_argument("clifford index j=" + std::to_string(j) + " outside [1, " +
                                std::to_string(2 * nu + 1) + "]");
}

/// Image of the Clifford generator e_j (1-based) on the spinor space (C^2)^{(x) nu}:
///   j <= 2nu:    E^{(x)(nu-1-h)} (x) g_alpha (x) T^{(x)h},  h = floor((j-1)/2), alpha = 1 (j odd) or 2 (j even)
///   j = 2nu+1:   i T^{(x) nu}
/// The empty tensor product is the 1x1 identity, so nu = 0 gives [i].
inline GaussMatrix spin_generator(std::uint64_t j, std::uint64_t nu) {
  check_clifford_index(j, nu);
  const auto T = generator_2x2(Basic2x2::T);
  if (j == 2 * nu + 1) return kI * kronecker_power(T, nu);
  const std::uint64_t h = (j - 1) / 2;
  const auto g = generator_2x2(j % 2 == 1 ? Basic2x2::G1 : Basic2x2::G2);
  return kronecker(kronecker(kronecker_power(generator_2x2(Basic2x2::E), nu - 1 - h), g), kronecker_power(T, h));
}

/// epsilon_j with A_j(conj z) = epsilon_j conj(A_j z).
inline int predicted_sign(std::uint64_t j, std::uint64_t nu) {
  check_clifford_index(j, nu);
  if (j == 2 * nu + 1) return nu % 2 == 0 ? -1 : 1;
  return ((j - 1) / 2) % 2 == 0 ? -1 : 1;
}

struct CliffordFamily {
  std::uint64_t n = 0;
  std::uint64_t nu = 0;
  std::uint64_t b = 1;
  std::vector<GaussMatrix> matrices;
  std::vector<int> predicted_signs;

  [[nodiscard]] std::size_t dimension() const { return n + 1; }
  [[nodiscard]] std::size_t count() const { return matrices.size(); }
};

inline CliffordFamily build_family(std::uint64_t n) {
  CliffordFamily f;
  f.n = n;
  f.nu = nu(n + 1);
  f.b = odd_part(n + 1);
  for (std::uint64_t j = 1; j <= 2 * f.nu + 1; ++j) {
    f.matrices.push_back(direct_sum_power(spin_generator(j, f.nu), f.b));
    f.predicted_signs.push_back(predicted_sign(j, f.nu));
  }
  return f;
}

struct IdentityCheck {
  enum class Kind { Anticommute, SkewHermitian, QuasiReal, SquareMinusOne };
  Kind kind;
  std::size_t j = 0;  // 1-based
  std::size_t k = 0;  // 1-based, anticommutation only
  bool pass = false;
};

inline const char* to_string(IdentityCheck::Kind k) {
  switch (k) {
    case IdentityCheck::Kind::Anticommute:
      return "anticommute";
    case IdentityCheck::Kind::SkewHermitian:
      return "skew-hermitian";
    case IdentityCheck::Kind::QuasiReal:
      return "quasi-real";
    case IdentityCheck::Kind::SquareMinusOne:
      return "square";
  }
  return "?";
}

struct CliffordReport {
  std::vector<IdentityCheck> checks;

  [[nodiscard]] bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  [[nodiscard]] std::size_t count(IdentityCheck::Kind kind, bool passed) const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (c.kind == kind && c.pass == passed) ++n;
    return n;
  }
};

/// Exact checks of every identity the fields construction relies on:
/// A_j A_k + A_k A_j = 0 (j != k), A_j + A_j^* = 0, conj(A_j) = epsilon_j A_j,
/// and A_j^2 = -1. Failures are reported, never thrown.
inline CliffordReport verify_family(const CliffordFamily& f) {
  CliffordReport r;
  const std::size_t cnt = f.matrices.size();
  const auto minus_id = GaussInt{-1} * GaussMatrix::identity(f.dimension());
  for (std::size_t j = 0; j < cnt; ++j) {
    const auto& a = f.matrices[j];
    for (std::size_t k = j + 1; k < cnt; ++k) {
      const auto& bm = f.matrices[k];
      r.checks.push_back({IdentityCheck::Kind::Anticommute, j + 1, k + 1, (a * bm + bm * a).is_zero()});
    }
    r.checks.push_back({IdentityCheck::Kind::SkewHermitian, j + 1, 0, (a + a.adjoint()).is_zero()});
    const int eps = j < f.predicted_signs.size() ? f.predicted_signs[j] : 0;
    r.checks.push_back({IdentityCheck::Kind::QuasiReal, j + 1, 0, (eps == 1 || eps == -1) && a.conj() == GaussInt{eps} * a});
    r.checks.push_back({IdentityCheck::Kind::SquareMinusOne, j + 1, 0, a * a == minus_id});
  }
  return r;
}

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline ComplexVector apply_matrix(const GaussMatrix& a, std::span<const Complex> z) {
  if (z.size() != a.size()) throw std::invalid_argument("apply_matrix: dimension mismatch");
  ComplexVector out(z.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    Complex s{0.0, 0.0};
    for (std::size_t c = 0; c < a.size(); ++c) {
      const auto v = a(r, c);
      if (v.is_zero()) continue;
      s += Complex(static_cast<double>(v.re), static_cast<double>(v.im)) * z[c];
    }
    out[r] = s;
  }
  return out;
}

/// Hermitian product <z, w> = w^* z.
inline Complex hermitian(std::span<const Complex> z, std::span<const Complex> w) {
  if (z.size() != w.size()) throw std::invalid_argument("hermitian: dimension mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < z.size(); ++i) s += std::conj(w[i]) * z[i];
  return s;
}

/// beta(z) = <z, A z>; purely imaginary when A is skew-Hermitian.
inline Complex beta(std::span<const Complex> z, const GaussMatrix& a) {
  if (z.size() != a.size()) throw std::invalid_argument("beta: dimension mismatch");
  const auto az = apply_matrix(a, z);
  return hermitian(z, az);
}

}  // namespace wallspan
