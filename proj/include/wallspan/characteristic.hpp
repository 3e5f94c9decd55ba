#pragma once
// Mod-2 cohomology of Dold manifolds P(m,n), Wall manifolds Q(m,n) and CP^n,
// Wall's total Stiefel-Whitney class of Q(m,n), and the virtual
// Stiefel-Whitney obstruction to splitting k line bundles off TQ(m,n).

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallspan/f2ring.hpp"
#include "wallspan/invariants.hpp"

namespace wallspan {

/// H*(P(m,n); Z/2) = F2[c,d]/(c^(m+1), d^(n+1)), |c| = 1, |d| = 2.
inline RingPtr dold_ring(std::uint64_t m, std::uint64_t n) {
  const auto mm = static_cast<std::uint32_t>(m);
  const auto nn = static_cast<std::uint32_t>(n);
  return RingPresentation::create("Dold(" + std::to_string(m) + "," + std::to_string(n) + ")",
                                  {{"c", 1}, {"d", 2}},
                                  {{{mm + 1, 0}, {}}, {{0, nn + 1}, {}}},
                                  mm + 2 * nn, {SpaceKind::Family::Dold, m, n});
}

/// H*(Q(m,n); Z/2) = F2[x,c,d]/(x^2, c^(m+1) - c^m x, d^(n+1)), |x| = |c| = 1, |d| = 2.
/// Rewrite order: c^(m+1) -> c^m x first, then x^2 -> 0.
inline RingPtr wall_ring(const WallParams& p) {
  p.validate();
  const auto mm = static_cast<std::uint32_t>(p.m);
  const auto nn = static_cast<std::uint32_t>(p.n);
  return RingPresentation::create("Wall(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")",
                                  {{"x", 1}, {"c", 1}, {"d", 2}},
                                  {
                                      {{0, mm + 1, 0}, {{1, mm, 0}}},
                                      {{2, 0, 0}, {}},
                                      {{0, 0, nn + 1}, {}},
                                  },
                                  static_cast<std::uint32_t>(p.dim()), {SpaceKind::Family::Wall, p.m, p.n});
}

/// H*(CP^n; Z/2) = F2[a]/(a^(n+1)), |a| = 2.
inline RingPtr cpn_ring(std::uint64_t n) {
  const auto nn = static_cast<std::uint32_t>(n);
  return RingPresentation::create("CP(" + std::to_string(n) + ")", {{"a", 2}}, {{{nn + 1}, {}}}, 2 * nn,
                                  {SpaceKind::Family::CPn, 0, n});
}

/// Selects one of the three named presentations.
inline RingPtr make_presentation(const SpaceKind& kind) {
  switch (kind.family) {
    case SpaceKind::Family::Dold:
      return dold_ring(kind.m, kind.n);
    case SpaceKind::Family::Wall:
      if (kind.m < 1) throw std::invalid_argument("make_presentation: Wall(m,n) requires m >= 1");
      return wall_ring({kind.m, kind.n});
    case SpaceKind::Family::CPn:
      return cpn_ring(kind.n);
    case SpaceKind::Family::Custom:
      break;
  }
  throw std::invalid_argument("make_presentation: unsupported kind");
}

/// w(Q(m,n)) = (1 + c + x)(1 + c)^(m-1)(1 + c + d)^(n+1).
inline GradedF2Poly total_sw_wall(const WallParams& p, const RingPtr& ring) {
  if (ring->kind() != SpaceKind{SpaceKind::Family::Wall, p.m, p.n})
    throw std::invalid_argument("total_sw_wall: ring is not " + ring->label());
  const auto one = GradedF2Poly::one(ring);
  const auto x = GradedF2Poly::generator(ring, "x");
  const auto c = GradedF2Poly::generator(ring, "c");
  const auto d = GradedF2Poly::generator(ring, "d");
  return (one + c + x) * (one + c).pow(p.m - 1) * (one + c + d).pow(p.n + 1);
}

inline GradedF2Poly total_sw_wall(const WallParams& p) { return total_sw_wall(p, wall_ring(p)); }

/// Restriction to the fibre CP^n of CP^n -> Q(m,n) -> Q(m,0): x, c -> 0, d -> a.
inline GradedF2Poly fiber_restriction(const GradedF2Poly& p, const RingPtr& target) {
  const auto& kind = p.ring()->kind();
  if (kind.family != SpaceKind::Family::Wall)
    throw std::invalid_argument("fiber_restriction: input is over " + p.ring()->label() + ", not a Wall ring");
  if (target->kind() != SpaceKind{SpaceKind::Family::CPn, 0, kind.n})
    throw std::invalid_argument("fiber_restriction: target must be CP(" + std::to_string(kind.n) + ")");
  return ring_map(p, target,
                  {GradedF2Poly::zero(target), GradedF2Poly::zero(target), GradedF2Poly::generator(target, "a")});
}

inline GradedF2Poly fiber_restriction(const GradedF2Poly& p) {
  return fiber_restriction(p, cpn_ring(p.ring()->kind().n));
}

/// One candidate multiset {x_1, ..., x_k} of degree-1 classes, recorded as
/// multiplicities over the enumerated elements of H^1 (index 0 is the zero class).
struct LineClassMultiset {
  std::vector<std::uint32_t> counts;
  friend bool operator==(const LineClassMultiset&, const LineClassMultiset&) = default;
};

struct MultisetOutcome {
  LineClassMultiset multiset;
  /// Lowest degree q > dim - k where the virtual class u_q is nonzero.
  std::uint32_t failure_degree = 0;
};

struct ObstructionResult {
  std::uint64_t k = 0;
  bool ruled_out = false;
  /// A multiset passing the mod-2 condition, when one exists.
  std::optional<LineClassMultiset> survivor;
  std::optional<GradedF2Poly> survivor_class;
  /// Every multiset examined before the search stopped, with its failure degree.
  std::vector<MultisetOutcome> failures;
};

/// All elements of H^1 in binary-counting order over the degree-1 basis
/// (for Wall rings: 0, x, c, x + c).
inline std::vector<GradedF2Poly> degree_one_classes(const RingPtr& ring) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ring->basis_size(); ++i)
    if (ring->basis_degree(i) == 1) idx.push_back(i);
  if (idx.size() >= 16) throw std::invalid_argument("degree_one_classes: H^1 too large to enumerate");
  std::vector<GradedF2Poly> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << idx.size()); ++mask) {
    F2Vector v(ring->basis_size());
    for (std::size_t b = 0; b < idx.size(); ++b)
      if ((mask >> b) & 1U) v.set(idx[b]);
    out.emplace_back(ring, std::move(v));
  }
  return out;
}

/// Decides whether the mod-2 condition for k line fields fails for every
/// choice of x_1..x_k in H^1(Q(m,n)): with u = w(Q) * prod(1 + x_i)^(-1),
/// the condition asks for u_q = 0 for all q > dim - k. Multisets are visited
/// in non-decreasing index order; the search stops at the first survivor.
inline ObstructionResult virtual_sw_rules_out(const WallParams& p, std::uint64_t k) {
  const std::uint64_t dim = p.dim();
  if (k < 1 || k > dim) throw std::invalid_argument("virtual_sw_rules_out: k must lie in [1, dim]");
  const auto ring = wall_ring(p);
  const auto w = total_sw_wall(p, ring);
  const auto classes = degree_one_classes(ring);
  const auto g = classes.size();
  const auto one = GradedF2Poly::one(ring);
  const auto threshold = static_cast<std::uint32_t>(dim - k);

  // inverse_powers[c][t] = (1 + x_c)^(-t)
  std::vector<std::vector<GradedF2Poly>> inverse_powers(g);
  for (std::size_t c = 0; c < g; ++c) {
    const auto inv = unit_inverse(one + classes[c]);
    inverse_powers[c].push_back(one);
    for (std::uint64_t t = 1; t <= k; ++t) inverse_powers[c].push_back(inverse_powers[c].back() * inv);
  }

  ObstructionResult result;
  result.k = k;
  std::vector<std::uint32_t> counts(g, 0);
  bool found = false;

  // Enumerate multiplicity vectors summing to k, lexicographically matching
  // non-decreasing sequences of class indices.
  auto visit = [&]() {
    GradedF2Poly u = w;
    for (std::size_t c = 1; c < g; ++c)
      if (counts[c] > 0) u *= inverse_powers[c][counts[c]];
    std::optional<std::uint32_t> fail;
    for (auto d : u.support_degrees()) {
      if (d > threshold) {
        fail = d;
        break;
      }
    }
    if (fail) {
      result.failures.push_back({{counts}, *fail});
    } else {
      result.survivor = LineClassMultiset{counts};
      result.survivor_class = u;
      found = true;
    }
  };
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t c, std::uint64_t remaining) {
    if (found) return;
    if (c + 1 == g) {
      counts[c] = static_cast<std::uint32_t>(remaining);
      visit();
      counts[c] = 0;
      return;
    }
    for (std::uint64_t t = remaining + 1; t-- > 0 && !found;) {
      counts[c] = static_cast<std::uint32_t>(t);
      rec(c + 1, remaining - t);
    }
    counts[c] = 0;
  };
  rec(0, k);
  result.ruled_out = !found;
  return result;
}

/// Smallest k ruled out by the mod-2 obstruction, minus one; dim if none is.
inline std::uint64_t sw_upper_bound(const WallParams& p) {
  for (std::uint64_t k = 1; k <= p.dim(); ++k)
    if (virtual_sw_rules_out(p, k).ruled_out) return k - 1;
  return p.dim();
}

/// Renders a multiset using the class labels, e.g. "{c, c, x + c}".
inline std::string render_multiset(const LineClassMultiset& ms, const std::vector<GradedF2Poly>& classes) {
  std::string out = "{";
  bool first = true;
  for (std::size_t c = 0; c < ms.counts.size(); ++c) {
    for (std::uint32_t t = 0; t < ms.counts[c]; ++t) {
      if (!first) out += ", ";
      out += classes[c].to_string();
      first = false;
    }
  }
  return out + "}";
}

}  // namespace wallspan
