#pragma once
// Exact Gaussian-integer scalars and dense square matrices.

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallspan {

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] constexpr GaussInt conj() const { return {re, -im}; }
  [[nodiscard]] constexpr bool is_zero() const { return re == 0 && im == 0; }

  constexpr GaussInt& operator+=(GaussInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return a += b; }
  friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return a + (-b); }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(GaussInt, GaussInt) = default;
};

inline constexpr GaussInt kI{0, 1};

/// Renders units as 0, 1, -1, i, -i; anything else as a+bi.
inline std::string to_string(GaussInt z) {
  if (z.im == 0) return std::to_string(z.re);
  if (z.re == 0) {
    if (z.im == 1) return "i";
    if (z.im == -1) return "-i";
    return std::to_string(z.im) + "i";
  }
  return std::to_string(z.re) + (z.im > 0 ? "+" : "-") +
         (z.im == 1 || z.im == -1 ? std::string{} : std::to_string(z.im > 0 ? z.im : -z.im)) + "i";
}

class GaussMatrix {
 public:
  GaussMatrix() = default;
  explicit GaussMatrix(std::size_t size) : n_(size), a_(size * size) {
    if (size == 0) throw std::invalid_argument("GaussMatrix: size must be positive");
  }
  GaussMatrix(std::initializer_list<std::initializer_list<GaussInt>> rows) : GaussMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("GaussMatrix: rows must be square");
      std::size_t c = 0;
      for (auto v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static GaussMatrix identity(std::size_t size) {
    GaussMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t size() const { return n_; }
  GaussInt& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  [[nodiscard]] const GaussInt& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  /// Entrywise complex conjugate.
  [[nodiscard]] GaussMatrix conj() const {
    GaussMatrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].conj();
    return m;
  }
  /// Conjugate transpose.
  [[nodiscard]] GaussMatrix adjoint() const {
    GaussMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
  }
  [[nodiscard]] bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend GaussMatrix operator+(const GaussMatrix& x, const GaussMatrix& y) {
    x.check_size(y);
    GaussMatrix m(x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
    return m;
  }
  friend GaussMatrix operator-(const GaussMatrix& x, const GaussMatrix& y) {
    x.check_size(y);
    GaussMatrix m(x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
    return m;
  }
  friend GaussMatrix operator*(GaussInt s, const GaussMatrix& x) {
    GaussMatrix m(x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = s * x.a_[i];
    return m;
  }
  friend GaussMatrix operator*(const GaussMatrix& x, const GaussMatrix& y) {
    x.check_size(y);
    GaussMatrix m(x.n_);
    for (std::size_t r = 0; r < x.n_; ++r)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const GaussInt v = x(r, k);
        if (v.is_zero()) continue;
        for (std::size_t c = 0; c < x.n_; ++c) m(r, c) += v * y(k, c);
      }
    return m;
  }
  friend bool operator==(const GaussMatrix&, const GaussMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussMatrix& m) {
    for (std::size_t r = 0; r < m.n_; ++r) {
      os << '[';
      for (std::size_t c = 0; c < m.n_; ++c) {
        const auto s = to_string(m(r, c));
        os << (c ? " " : "") << std::string(s.size() < 2 ? 2 - s.size() : 0, ' ') << s;
      }
      os << "]\n";
    }
    return os;
  }

 private:
  void check_size(const GaussMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("GaussMatrix: size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<GaussInt> a_;
};

/// Kronecker product, left factor major: (a (x) b)(i*p + k, j*p + l) = a(i,j) b(k,l).
inline GaussMatrix kronecker(const GaussMatrix& a, const GaussMatrix& b) {
  const std::size_t p = b.size();
  GaussMatrix m(a.size() * p);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const GaussInt v = a(i, j);
      if (v.is_zero()) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l) m(i * p + k, j * p + l) = v * b(k, l);
    }
  return m;
}

/// Block-diagonal sum of `copies` copies of a.
inline GaussMatrix direct_sum_power(const GaussMatrix& a, std::size_t copies) {
  return kronecker(GaussMatrix::identity(copies), a);
}

}  // namespace wallspan
