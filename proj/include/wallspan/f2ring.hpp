#pragma once
// Graded commutative polynomial quotient rings over F_2, in monomial normal form.
//
// A presentation is a list of generators with positive degrees, a list of
// degree-homogeneous rewrite rules (leading monomial -> sum of monomials) and a
// top degree above which everything is truncated to zero. At construction the
// normal-form basis is enumerated, every monomial up to the top degree is
// checked for confluence, and the structure constants of the multiplication
// are tabulated. Elements are bit vectors over that basis.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wallspan {

using Exponents = std::vector<std::uint32_t>;

/// Dense bit vector over F_2.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  [[nodiscard]] bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  F2Vector& operator^=(const F2Vector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int tz = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(tz));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const F2Vector&, const F2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Generator {
  std::string name;
  std::uint32_t degree = 1;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// lhs -> sum of rhs monomials (empty rhs means lhs -> 0).
struct RewriteRule {
  Exponents lhs;
  std::vector<Exponents> rhs;
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// Which space a presentation describes, when it is one of the named families.
struct SpaceKind {
  enum class Family { Custom, Dold, Wall, CPn };
  Family family = Family::Custom;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  friend bool operator==(const SpaceKind&, const SpaceKind&) = default;
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
  struct Private {};

 public:
  RingPresentation(Private, std::string label, std::vector<Generator> gens, std::vector<RewriteRule> rules,
                   std::uint32_t top_degree, SpaceKind kind)
      : label_(std::move(label)),
        gens_(std::move(gens)),
        rules_(std::move(rules)),
        top_(top_degree),
        kind_(kind) {}

  /// Builds and validates a presentation. Throws std::invalid_argument on
  /// malformed input or if rewriting is non-terminating or non-confluent.
  static RingPtr create(std::string label, std::vector<Generator> gens, std::vector<RewriteRule> rules,
                        std::uint32_t top_degree, SpaceKind kind = {}) {
    auto ring = std::make_shared<RingPresentation>(Private{}, std::move(label), std::move(gens), std::move(rules),
                                                   top_degree, kind);
    ring->build();
    return ring;
  }

  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] const std::vector<Generator>& generators() const { return gens_; }
  [[nodiscard]] const std::vector<RewriteRule>& rules() const { return rules_; }
  [[nodiscard]] std::uint32_t top_degree() const { return top_; }
  [[nodiscard]] const SpaceKind& kind() const { return kind_; }

  [[nodiscard]] std::size_t basis_size() const { return basis_.size(); }
  [[nodiscard]] const Exponents& basis(std::size_t i) const { return basis_.at(i); }
  [[nodiscard]] std::uint32_t basis_degree(std::size_t i) const { return basis_deg_.at(i); }

  [[nodiscard]] std::optional<std::size_t> generator_index(const std::string& name) const {
    for (std::size_t g = 0; g < gens_.size(); ++g)
      if (gens_[g].name == name) return g;
    return std::nullopt;
  }

  [[nodiscard]] std::uint32_t degree_of(const Exponents& e) const {
    std::uint32_t d = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) d += e[g] * gens_[g].degree;
    return d;
  }

  /// Number of normal-form basis monomials of degree q.
  [[nodiscard]] std::size_t graded_dimension(std::uint32_t q) const {
    return static_cast<std::size_t>(std::count(basis_deg_.begin(), basis_deg_.end(), q));
  }

  /// Normal form of an arbitrary monomial, as a vector over the basis.
  /// Monomials above the top degree are zero.
  [[nodiscard]] F2Vector normal_form(const Exponents& e) const {
    if (e.size() != gens_.size()) throw std::invalid_argument("normal_form: exponent arity mismatch");
    if (degree_of(e) > top_) return F2Vector(basis_.size());
    auto it = nf_.find(e);
    if (it == nf_.end()) throw std::logic_error("normal_form: monomial missing from table");
    return it->second;
  }

  /// Structure constants: basis(i) * basis(j) in normal form.
  [[nodiscard]] const F2Vector& product(std::size_t i, std::size_t j) const {
    return table_[i * basis_.size() + j];
  }

  /// Identity of the basis monomial e, if e is itself in normal form.
  [[nodiscard]] std::optional<std::size_t> basis_index(const Exponents& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Structural equality (generators, relations, top degree).
  [[nodiscard]] bool same_ring(const RingPresentation& o) const {
    return this == &o || (gens_ == o.gens_ && rules_ == o.rules_ && top_ == o.top_);
  }

  [[nodiscard]] std::string render_monomial(const Exponents& e) const {
    std::string out;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (e[g] == 0) continue;
      if (!out.empty()) out += '*';
      out += gens_[g].name;
      if (e[g] > 1) out += '^' + std::to_string(e[g]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  static bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }
  static Exponents minus(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  static Exponents plus(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }

  void validate_input() const {
    if (gens_.empty()) throw std::invalid_argument("RingPresentation: no generators");
    for (const auto& g : gens_)
      if (g.degree == 0) throw std::invalid_argument("RingPresentation: generator degree must be >= 1");
    for (const auto& r : rules_) {
      if (r.lhs.size() != gens_.size()) throw std::invalid_argument("RingPresentation: rule arity mismatch");
      if (std::all_of(r.lhs.begin(), r.lhs.end(), [](std::uint32_t x) { return x == 0; }))
        throw std::invalid_argument("RingPresentation: rule with constant leading monomial");
      const auto d = degree_of(r.lhs);
      for (const auto& t : r.rhs) {
        if (t.size() != gens_.size()) throw std::invalid_argument("RingPresentation: rule arity mismatch");
        if (degree_of(t) != d) throw std::invalid_argument("RingPresentation: rule is not degree-homogeneous");
      }
    }
  }

  // All exponent vectors of weighted degree <= top_.
  void enumerate_monomials(std::vector<Exponents>& out) const {
    Exponents cur(gens_.size(), 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t g, std::uint32_t deg) {
      if (g == gens_.size()) {
        out.push_back(cur);
        return;
      }
      for (std::uint32_t k = 0; deg + k * gens_[g].degree <= top_; ++k) {
        cur[g] = k;
        rec(g + 1, deg + k * gens_[g].degree);
      }
      cur[g] = 0;
    };
    rec(0, 0);
  }

  [[nodiscard]] std::vector<std::size_t> applicable_rules(const Exponents& e) const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (divides(rules_[i].lhs, e)) r.push_back(i);
    return r;
  }

  // Normal form as a set of irreducible monomials, memoized; uses the first applicable rule.
  const std::set<Exponents>& reduce(const Exponents& e, std::set<Exponents>& in_progress) {
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    if (!in_progress.insert(e).second)
      throw std::invalid_argument("RingPresentation: rewriting does not terminate at " + render_monomial(e));
    std::set<Exponents> result;
    const auto rules = applicable_rules(e);
    if (rules.empty()) {
      result.insert(e);
    } else {
      result = apply_rule(e, rules.front(), in_progress);
    }
    in_progress.erase(e);
    return memo_.emplace(e, std::move(result)).first->second;
  }

  std::set<Exponents> apply_rule(const Exponents& e, std::size_t rule, std::set<Exponents>& in_progress) {
    std::set<Exponents> result;
    const auto rest = minus(e, rules_[rule].lhs);
    for (const auto& t : rules_[rule].rhs) {
      for (const auto& s : reduce(plus(t, rest), in_progress)) {
        if (!result.insert(s).second) result.erase(s);
      }
    }
    return result;
  }

  void build() {
    validate_input();
    std::vector<Exponents> monos;
    enumerate_monomials(monos);

    std::set<Exponents> in_progress;
    for (const auto& e : monos) reduce(e, in_progress);

    // Local confluence on every monomial: each one-step reduct has the same normal form.
    for (const auto& e : monos) {
      const auto rules = applicable_rules(e);
      for (std::size_t k = 1; k < rules.size(); ++k) {
        if (apply_rule(e, rules[k], in_progress) != memo_.at(e))
          throw std::invalid_argument("RingPresentation: rewriting is not confluent at " + render_monomial(e));
      }
    }

    for (const auto& e : monos)
      if (applicable_rules(e).empty()) basis_.push_back(e);
    std::sort(basis_.begin(), basis_.end(), [this](const Exponents& a, const Exponents& b) {
      const auto da = degree_of(a), db = degree_of(b);
      if (da != db) return da < db;
      return a > b;
    });
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      index_.emplace(basis_[i], i);
      basis_deg_.push_back(degree_of(basis_[i]));
    }

    for (const auto& e : monos) {
      F2Vector v(basis_.size());
      for (const auto& s : memo_.at(e)) v.flip(index_.at(s));
      nf_.emplace(e, std::move(v));
    }
    memo_.clear();

    table_.reserve(basis_.size() * basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < basis_.size(); ++j) table_.push_back(normal_form(plus(basis_[i], basis_[j])));
  }

  std::string label_;
  std::vector<Generator> gens_;
  std::vector<RewriteRule> rules_;
  std::uint32_t top_ = 0;
  SpaceKind kind_;

  std::vector<Exponents> basis_;
  std::vector<std::uint32_t> basis_deg_;
  std::map<Exponents, std::size_t> index_;
  std::map<Exponents, F2Vector> nf_;
  std::map<Exponents, std::set<Exponents>> memo_;
  std::vector<F2Vector> table_;
};

/// Element of a graded F_2 quotient ring, stored over the normal-form basis.
class GradedF2Poly {
 public:
  explicit GradedF2Poly(RingPtr ring) : ring_(std::move(ring)), coeffs_(ring_->basis_size()) {}
  GradedF2Poly(RingPtr ring, F2Vector coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_->basis_size()) throw std::invalid_argument("GradedF2Poly: coefficient size mismatch");
  }

  static GradedF2Poly zero(const RingPtr& ring) { return GradedF2Poly(ring); }
  static GradedF2Poly one(const RingPtr& ring) { return monomial(ring, Exponents(ring->generators().size(), 0)); }
  static GradedF2Poly monomial(const RingPtr& ring, const Exponents& e) {
    return GradedF2Poly(ring, ring->normal_form(e));
  }
  static GradedF2Poly generator(const RingPtr& ring, const std::string& name) {
    auto g = ring->generator_index(name);
    if (!g) throw std::invalid_argument("GradedF2Poly: unknown generator " + name);
    Exponents e(ring->generators().size(), 0);
    e[*g] = 1;
    return monomial(ring, e);
  }

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const F2Vector& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.none(); }

  /// Coefficient of the normal-form monomial e (false if e is not a basis monomial).
  [[nodiscard]] bool coefficient(const Exponents& e) const {
    auto i = ring_->basis_index(e);
    return i && coeffs_.test(*i);
  }

  [[nodiscard]] bool constant_term() const { return ring_->basis_size() > 0 && coeffs_.test(0) && ring_->basis_degree(0) == 0; }

  /// Homogeneous component of degree q.
  [[nodiscard]] GradedF2Poly component(std::uint32_t q) const {
    GradedF2Poly r(ring_);
    coeffs_.for_each_set([&](std::size_t i) {
      if (ring_->basis_degree(i) == q) r.coeffs_.set(i);
    });
    return r;
  }

  /// Degrees of all nonzero homogeneous components, ascending.
  [[nodiscard]] std::vector<std::uint32_t> support_degrees() const {
    std::set<std::uint32_t> ds;
    coeffs_.for_each_set([&](std::size_t i) { ds.insert(ring_->basis_degree(i)); });
    return {ds.begin(), ds.end()};
  }

  GradedF2Poly& operator+=(const GradedF2Poly& o) {
    check_same(o);
    coeffs_ ^= o.coeffs_;
    return *this;
  }
  friend GradedF2Poly operator+(GradedF2Poly a, const GradedF2Poly& b) { return a += b; }

  friend GradedF2Poly operator*(const GradedF2Poly& a, const GradedF2Poly& b) {
    a.check_same(b);
    GradedF2Poly r(a.ring_);
    a.coeffs_.for_each_set([&](std::size_t i) {
      b.coeffs_.for_each_set([&](std::size_t j) { r.coeffs_ ^= a.ring_->product(i, j); });
    });
    return r;
  }
  GradedF2Poly& operator*=(const GradedF2Poly& o) { return *this = *this * o; }

  [[nodiscard]] GradedF2Poly pow(std::uint64_t k) const {
    GradedF2Poly r = one(ring_);
    GradedF2Poly base = *this;
    while (k > 0) {
      if (k & 1U) r *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return r;
  }

  friend bool operator==(const GradedF2Poly& a, const GradedF2Poly& b) {
    return a.ring_->same_ring(*b.ring_) && a.coeffs_ == b.coeffs_;
  }

  /// Sorted monomial sum by ascending degree, e.g. "1 + x + c + x*c^2 + d".
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    coeffs_.for_each_set([&](std::size_t i) {
      if (!out.empty()) out += " + ";
      out += ring_->render_monomial(ring_->basis(i));
    });
    return out;
  }

 private:
  void check_same(const GradedF2Poly& o) const {
    if (!ring_->same_ring(*o.ring_))
      throw std::invalid_argument("GradedF2Poly: mixed presentations " + ring_->label() + " and " + o.ring_->label());
  }

  RingPtr ring_;
  F2Vector coeffs_;
};

/// Multiplicative inverse of a unit (constant term 1), via the truncated
/// geometric series in the nilpotent part.
inline GradedF2Poly unit_inverse(const GradedF2Poly& p) {
  if (!p.constant_term()) throw std::invalid_argument("unit_inverse: degree-0 component is not 1");
  const auto& ring = p.ring();
  const GradedF2Poly nil = p + GradedF2Poly::one(ring);
  GradedF2Poly result = GradedF2Poly::one(ring);
  GradedF2Poly term = GradedF2Poly::one(ring);
  for (std::uint32_t k = 1; k <= ring->top_degree(); ++k) {
    term *= nil;
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

/// Ring homomorphism determined by the images of the source generators.
inline GradedF2Poly ring_map(const GradedF2Poly& p, const RingPtr& target,
                             const std::vector<GradedF2Poly>& generator_images) {
  const auto& src = *p.ring();
  if (generator_images.size() != src.generators().size())
    throw std::invalid_argument("ring_map: one image per generator required");
  for (std::size_t g = 0; g < generator_images.size(); ++g) {
    if (!generator_images[g].ring()->same_ring(*target))
      throw std::invalid_argument("ring_map: image not in target ring");
    const auto& img_deg = generator_images[g].support_degrees();
    for (auto d : img_deg)
      if (d != src.generators()[g].degree) throw std::invalid_argument("ring_map: image does not preserve degree");
  }
  GradedF2Poly result(target);
  p.coefficients().for_each_set([&](std::size_t i) {
    const auto& e = src.basis(i);
    GradedF2Poly term = GradedF2Poly::one(target);
    for (std::size_t g = 0; g < e.size(); ++g) term *= generator_images[g].pow(e[g]);
    result += term;
  });
  return result;
}

}  // namespace wallspan
