#pragma once
// Closed-form integer invariants of Wall manifolds Q(m,n) and related spaces.

#include <cstdint>
#include <stdexcept>

namespace wallspan {

/// Parameters of the Wall manifold Q(m,n): an m-sphere factor (m >= 1) and
/// complex projective space of complex dimension n (n >= 0).
struct WallParams {
  std::uint64_t m = 1;
  std::uint64_t n = 0;

  WallParams() = default;
  WallParams(std::uint64_t m_, std::uint64_t n_) : m(m_), n(n_) { validate(); }

  void validate() const {
    if (m < 1) throw std::invalid_argument("WallParams: m must be >= 1");
  }

  /// Real dimension m + 2n + 1.
  [[nodiscard]] std::uint64_t dim() const { return m + 2 * n + 1; }

  friend bool operator==(const WallParams&, const WallParams&) = default;
};

/// 2-adic valuation: the largest e with 2^e dividing k.
[[nodiscard]] constexpr std::uint64_t nu(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("nu: 2-adic valuation of 0 is undefined");
  std::uint64_t e = 0;
  while ((k & 1U) == 0) {
    k >>= 1U;
    ++e;
  }
  return e;
}

/// Odd part b of k = 2^nu(k) * b.
[[nodiscard]] constexpr std::uint64_t odd_part(std::uint64_t k) {
  return k >> nu(k);
}

/// Stable span of CP^n, 2 nu(n+1).
[[nodiscard]] constexpr std::uint64_t sspan_cpn(std::uint64_t n) { return 2 * nu(n + 1); }

/// Projective span of Q(m,n): 2 nu(n+1) + m + 1.
[[nodiscard]] inline std::uint64_t pspan_wall(const WallParams& p) {
  p.validate();
  return 2 * nu(p.n + 1) + p.m + 1;
}

/// Number of quasi-invariant fields built on CP^n x S^m x S^1; equal to pspan_wall.
[[nodiscard]] inline std::uint64_t field_count(const WallParams& p) { return pspan_wall(p); }

/// Upper bound from the fibration CP^n -> Q(m,n) -> Q(m,0): the stable span of
/// the fibre plus the dimension of the base.
[[nodiscard]] inline std::uint64_t upper_bound_fibration(const WallParams& p) {
  p.validate();
  const std::uint64_t base_dim = WallParams{p.m, 0}.dim();
  return sspan_cpn(p.n) + base_dim;
}

/// Hurwitz-Radon number: for n = 2^(4a+b) * odd with 0 <= b <= 3, returns 8a + 2^b.
/// span(S^(n-1)) = hurwitz_radon(n) - 1.
[[nodiscard]] constexpr std::uint64_t hurwitz_radon(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("hurwitz_radon: n must be >= 1");
  const std::uint64_t e = nu(n);
  const std::uint64_t a = e / 4;
  const std::uint64_t b = e % 4;
  return 8 * a + (std::uint64_t{1} << b);
}

/// Lower bound k(k-1)/2 for the projective span of the real flag manifold
/// F(1,...,1,n-k) with k line factors.
[[nodiscard]] constexpr std::uint64_t flag_lower_bound(std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("flag_lower_bound: k must be >= 2");
  return k * (k - 1) / 2;
}

}  // namespace wallspan
