#pragma once
// Quasi-invariant vector fields on CP^n x S^m x S^1 and their numerical checks.
//
// A point is a representative (z, v, lambda) in S^(2n+1) x S^m x S^1. Tangent
// vectors to CP^n are horizontal lifts w with <z, w> = 0, so a tangent vector
// is (w, u, mu) anchored at a representative. The involutions
//   sigma(z, v, lambda) = (conj z, -v, lambda)
//   tau(z, v, lambda)   = (z, rho(v), -lambda),  rho negates the last coordinate,
// generate the free Z/2 x Z/2 action whose quotient is Q(m,n).
//
// Field indices are 1-based: 1..2nu+1 are the Clifford fields, 2nu+2..2nu+m+1
// the sphere fields (sphere index j = 2..m+1).

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "wallspan/clifford.hpp"
#include "wallspan/invariants.hpp"

namespace wallspan {

struct Tolerances {
  double algebraic = 1e-10;      // tangency and well-definedness
  double invariance = 1e-9;      // quasi-invariance comparisons
  double rank_relative = 1e-8;   // singular values relative to the largest
  double imaginary = 1e-12;      // Re(beta), Im(u) and pairwise orthogonality
};

struct TotalSpacePoint {
  ComplexVector z;
  std::vector<double> v;
  Complex lambda{1.0, 0.0};
};

struct AmbientTangent {
  ComplexVector w;
  std::vector<double> u;
  Complex mu{0.0, 0.0};
};

enum class Involution { Sigma, Tau };

inline const char* to_string(Involution k) { return k == Involution::Sigma ? "sigma" : "tau"; }

/// SplitMix64 finalizer; used to derive independent per-point seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Deterministic seed for a sample stream identified by (master, stream index).
constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// Samples a point with z and v normalized Gaussian vectors and lambda uniform on the circle.
inline TotalSpacePoint sample_point(std::uint64_t n, std::uint64_t m, std::uint64_t seed, std::uint64_t stream) {
  std::mt19937_64 rng(substream_seed(seed, stream));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  TotalSpacePoint p;
  p.z.resize(n + 1);
  p.v.resize(m + 1);
  double zn = 0.0;
  do {
    zn = 0.0;
    for (auto& c : p.z) {
      const double re = normal(rng);
      const double im = normal(rng);
      c = {re, im};
      zn += re * re + im * im;
    }
  } while (zn == 0.0);
  zn = std::sqrt(zn);
  for (auto& c : p.z) c /= zn;

  double vn = 0.0;
  do {
    vn = 0.0;
    for (auto& x : p.v) {
      x = normal(rng);
      vn += x * x;
    }
  } while (vn == 0.0);
  vn = std::sqrt(vn);
  for (auto& x : p.v) x /= vn;

  p.lambda = std::polar(1.0, angle(rng));
  return p;
}

inline double real_dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("real_dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Sphere field xi_{2nu+j}, j = 2..m+1: (0, e_j - <v,e_j> v, -i <v,e_j> lambda).
inline AmbientTangent xi_high(std::uint64_t j, const TotalSpacePoint& p) {
  const std::uint64_t m = p.v.size() - 1;
  if (j < 2 || j > m + 1) throw std::invalid_argument("xi_high: j must lie in [2, m+1]");
  const double vj = p.v[j - 1];
  AmbientTangent t;
  t.w.assign(p.z.size(), Complex{0.0, 0.0});
  t.u.resize(p.v.size());
  for (std::size_t i = 0; i < p.v.size(); ++i) t.u[i] = -vj * p.v[i];
  t.u[j - 1] += 1.0;
  t.mu = Complex{0.0, -vj} * p.lambda;
  return t;
}

/// i beta (e_1 - <v,e_1> v) before discarding its (vanishing) imaginary part.
inline ComplexVector xi_low_u_complex(Complex b, const TotalSpacePoint& p) {
  const double v1 = p.v[0];
  ComplexVector u(p.v.size());
  const Complex ib = Complex{0.0, 1.0} * b;
  for (std::size_t i = 0; i < p.v.size(); ++i) u[i] = ib * ((i == 0 ? 1.0 : 0.0) - v1 * p.v[i]);
  return u;
}

/// Clifford field xi_j, j = 1..2nu+1, with beta = <z, A_j z>:
/// (A_j z + beta z, i beta (e_1 - <v,e_1> v), beta <v,e_1> lambda).
inline AmbientTangent xi_low(std::uint64_t j, const TotalSpacePoint& p, const CliffordFamily& f) {
  if (j < 1 || j > f.count()) throw std::invalid_argument("xi_low: j out of range");
  if (p.z.size() != f.dimension()) throw std::invalid_argument("xi_low: family dimension mismatch");
  const auto& a = f.matrices[j - 1];
  const Complex b = beta(p.z, a);
  AmbientTangent t;
  t.w = apply_matrix(a, p.z);
  for (std::size_t i = 0; i < t.w.size(); ++i) t.w[i] += b * p.z[i];
  const auto uc = xi_low_u_complex(b, p);
  t.u.resize(uc.size());
  for (std::size_t i = 0; i < uc.size(); ++i) t.u[i] = uc[i].real();
  t.mu = b * p.v[0] * p.lambda;
  return t;
}

/// Field number j in 1..2nu+m+1.
inline AmbientTangent field(std::uint64_t j, const TotalSpacePoint& p, const CliffordFamily& f) {
  const std::uint64_t low = f.count();
  const std::uint64_t m = p.v.size() - 1;
  if (j >= 1 && j <= low) return xi_low(j, p, f);
  if (j > low && j <= low + m) return xi_high(j - low + 1, p);
  throw std::invalid_argument("field: index out of range");
}

inline std::vector<AmbientTangent> all_fields(const TotalSpacePoint& p, const CliffordFamily& f) {
  std::vector<AmbientTangent> out;
  const std::uint64_t total = f.count() + p.v.size() - 1;
  for (std::uint64_t j = 1; j <= total; ++j) out.push_back(field(j, p, f));
  return out;
}

struct TangencyResidual {
  double hermitian = 0.0;  // |<z, w>|
  double sphere = 0.0;     // |<v, u>|
  double circle = 0.0;     // |Re(lambda conj(mu))|

  [[nodiscard]] double max() const { return std::max({hermitian, sphere, circle}); }
};

inline TangencyResidual tangency(const TotalSpacePoint& p, const AmbientTangent& t) {
  return {std::abs(hermitian(p.z, t.w)), std::abs(real_dot(p.v, t.u)), std::abs((p.lambda * std::conj(t.mu)).real())};
}

inline std::vector<double> rho(std::vector<double> v) {
  v.back() = -v.back();
  return v;
}

inline TotalSpacePoint apply_involution(Involution kind, const TotalSpacePoint& p) {
  TotalSpacePoint q = p;
  if (kind == Involution::Sigma) {
    for (auto& c : q.z) c = std::conj(c);
    for (auto& x : q.v) x = -x;
  } else {
    q.v = rho(p.v);
    q.lambda = -p.lambda;
  }
  return q;
}

/// d sigma: (conj w, -u, mu);  d tau: (w, rho(u), -mu).
inline AmbientTangent apply_differential(Involution kind, const AmbientTangent& t) {
  AmbientTangent r = t;
  if (kind == Involution::Sigma) {
    for (auto& c : r.w) c = std::conj(c);
    for (auto& x : r.u) x = -x;
  } else {
    r.u = rho(t.u);
    r.mu = -t.mu;
  }
  return r;
}

/// Largest componentwise deviation between a and s*b.
inline double tangent_distance(const AmbientTangent& a, const AmbientTangent& b, double s = 1.0) {
  double d = std::abs(a.mu - s * b.mu);
  for (std::size_t i = 0; i < a.w.size(); ++i) d = std::max(d, std::abs(a.w[i] - s * b.w[i]));
  for (std::size_t i = 0; i < a.u.size(); ++i) d = std::max(d, std::abs(a.u[i] - s * b.u[i]));
  return d;
}

/// The sign s with d(kind) xi_j(p) = s xi_j(kind(p)), or nullopt if neither sign fits.
inline std::optional<int> quasi_invariance_sign(std::uint64_t j, Involution kind, const TotalSpacePoint& p,
                                                const CliffordFamily& f, double tol = Tolerances{}.invariance) {
  const auto pushed = apply_differential(kind, field(j, p, f));
  const auto moved = field(j, apply_involution(kind, p), f);
  if (tangent_distance(pushed, moved, 1.0) <= tol) return 1;
  if (tangent_distance(pushed, moved, -1.0) <= tol) return -1;
  return std::nullopt;
}

/// Sign the construction predicts for field j under the given involution.
inline int expected_sign(std::uint64_t j, Involution kind, std::uint64_t m, const CliffordFamily& f) {
  const std::uint64_t low = f.count();
  if (j >= 1 && j <= low) return kind == Involution::Sigma ? f.predicted_signs[j - 1] : 1;
  if (j > low && j <= low + m) {
    if (kind == Involution::Sigma) return -1;
    return (j - low + 1 == m + 1) ? -1 : 1;
  }
  throw std::invalid_argument("expected_sign: index out of range");
}

/// The field at representative omega*z equals omega*w with the same (u, mu).
inline bool check_well_defined(std::uint64_t j, const TotalSpacePoint& p, const CliffordFamily& f, Complex omega,
                               double tol = Tolerances{}.algebraic) {
  if (std::abs(std::abs(omega) - 1.0) > tol) throw std::invalid_argument("check_well_defined: |omega| must be 1");
  TotalSpacePoint q = p;
  for (auto& c : q.z) c *= omega;
  auto base = field(j, p, f);
  const auto shifted = field(j, q, f);
  for (auto& c : base.w) c *= omega;
  return tangent_distance(shifted, base) <= tol;
}

/// Real coordinates (Re w, Im w, u, Re mu, Im mu), length 2(n+1) + (m+1) + 2.
inline Eigen::VectorXd flatten(const AmbientTangent& t) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(2 * t.w.size() + t.u.size() + 2));
  Eigen::Index k = 0;
  for (const auto& c : t.w) x(k++) = c.real();
  for (const auto& c : t.w) x(k++) = c.imag();
  for (double r : t.u) x(k++) = r;
  x(k++) = t.mu.real();
  x(k++) = t.mu.imag();
  return x;
}

struct IndependenceReport {
  std::size_t rank = 0;
  std::size_t vectors = 0;
  double min_relative_singular_value = 0.0;
  std::vector<double> singular_values;
};

/// Numerical rank of a set of tangent vectors: singular values above
/// rel_tol * (largest singular value).
inline IndependenceReport rank_report(const std::vector<AmbientTangent>& ts, double rel_tol = Tolerances{}.rank_relative) {
  IndependenceReport r;
  r.vectors = ts.size();
  if (ts.empty()) return r;
  const auto cols = flatten(ts.front()).size();
  Eigen::MatrixXd mat(static_cast<Eigen::Index>(ts.size()), cols);
  for (std::size_t i = 0; i < ts.size(); ++i) mat.row(static_cast<Eigen::Index>(i)) = flatten(ts[i]).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
  const auto& s = svd.singularValues();
  r.singular_values.assign(s.data(), s.data() + s.size());
  const double top = s.size() > 0 ? s(0) : 0.0;
  if (top == 0.0) return r;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * top) ++r.rank;
  // Fewer singular values than vectors means the trailing ones are zero.
  r.min_relative_singular_value = static_cast<std::size_t>(s.size()) < ts.size() ? 0.0 : s(s.size() - 1) / top;
  return r;
}

inline IndependenceReport independence_report(const TotalSpacePoint& p, const CliffordFamily& f,
                                              double rel_tol = Tolerances{}.rank_relative) {
  return rank_report(all_fields(p, f), rel_tol);
}

}  // namespace wallspan
