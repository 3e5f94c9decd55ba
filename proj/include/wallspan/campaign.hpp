#pragma once
// Deterministic verification campaigns over a grid of (m, n) and their reports.

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallspan/characteristic.hpp"
#include "wallspan/clifford.hpp"
#include "wallspan/fields.hpp"
#include "wallspan/invariants.hpp"

namespace wallspan {

inline constexpr const char* kReportSchemaVersion = "wallspan-report/1";

struct IntRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  [[nodiscard]] bool contains(std::uint64_t v) const { return lo <= v && v <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses "a" or "a..b" (inclusive).
inline IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const auto lo = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const auto rest = text.substr(dots + 2);
    const auto hi = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("invalid range '" + text + "' (expected N or LO..HI)");
  }
}

enum class OutputFormat { Text, Json };

struct CampaignConfig {
  IntRange m_range{1, 4};
  IntRange n_range{0, 8};
  std::uint64_t samples_per_case = 100;
  std::uint64_t seed = 20240101;
  Tolerances tolerances{};
  OutputFormat format = OutputFormat::Text;

  void validate() const {
    if (m_range.lo > m_range.hi || n_range.lo > n_range.hi) throw std::invalid_argument("empty parameter range");
    if (m_range.lo < 1) throw std::invalid_argument("m must be >= 1");
    if (samples_per_case < 1) throw std::invalid_argument("samples per case must be >= 1");
    for (double t : {tolerances.algebraic, tolerances.invariance, tolerances.rank_relative, tolerances.imaginary})
      if (!(t > 0.0)) throw std::invalid_argument("tolerances must be positive");
  }
};

inline nlohmann::ordered_json to_json(const CampaignConfig& c) {
  return {
      {"mRange", {c.m_range.lo, c.m_range.hi}},
      {"nRange", {c.n_range.lo, c.n_range.hi}},
      {"samplesPerCase", c.samples_per_case},
      {"seed", c.seed},
      {"tolerances",
       {{"algebraic", c.tolerances.algebraic},
        {"invariance", c.tolerances.invariance},
        {"rankRelative", c.tolerances.rank_relative},
        {"imaginary", c.tolerances.imaginary}}},
  };
}

/// FNV-1a over the canonical JSON of the configuration, as 16 hex digits.
inline std::string config_hash(const CampaignConfig& c) {
  const auto text = to_json(c).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

struct SignRecord {
  std::uint64_t index = 0;  // 1-based field number
  bool clifford = false;
  int predicted_sigma = 0;
  int predicted_tau = 0;
  int observed_sigma = 0;  // 0: FAIL or not constant across samples
  int observed_tau = 0;
  std::uint64_t failures = 0;

  [[nodiscard]] bool matches() const {
    return failures == 0 && observed_sigma == predicted_sigma && observed_tau == predicted_tau;
  }
};

struct CaseReport {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t nu = 0;
  std::uint64_t delta = 0;
  std::uint64_t dim = 0;

  // invariants
  std::uint64_t pspan = 0;
  std::uint64_t fibration_bound = 0;
  std::uint64_t sspan = 0;

  // clifford
  std::size_t matrix_count = 0;
  CliffordReport clifford;

  // fields
  std::uint64_t samples = 0;
  std::vector<SignRecord> signs;
  std::size_t rank_min = 0;
  std::size_t rank_max = 0;
  double min_rel_sv_min = 0.0;
  double min_rel_sv_max = 0.0;
  TangencyResidual tangency_max;
  std::uint64_t well_defined_checks = 0;
  std::uint64_t well_defined_failures = 0;
  double fields_seconds = 0.0;

  // cohomology
  std::string total_sw;
  std::uint64_t sw_bound = 0;
  std::optional<std::uint64_t> first_ruled_out;
  std::uint64_t first_ruled_out_multisets = 0;
  std::optional<std::string> survivor_at_bound;

  [[nodiscard]] bool signs_ok() const {
    for (const auto& s : signs)
      if (!s.matches()) return false;
    return true;
  }
  [[nodiscard]] bool independence_ok() const { return rank_min == delta && rank_max == delta; }
  [[nodiscard]] bool tangency_ok(const Tolerances& t) const { return tangency_max.max() <= t.algebraic; }
  [[nodiscard]] bool well_defined_ok() const { return well_defined_failures == 0; }
  [[nodiscard]] bool formula_ok() const { return pspan == fibration_bound && pspan == delta; }
  [[nodiscard]] bool obstruction_ok() const { return sw_bound >= pspan; }
  [[nodiscard]] bool all_ok(const Tolerances& t) const {
    return clifford.all_pass() && matrix_count == 2 * nu + 1 && signs_ok() && independence_ok() && tangency_ok(t) &&
           well_defined_ok() && formula_ok() && obstruction_ok();
  }
};

/// Stream index of sample s in case (m, n).
constexpr std::uint64_t sample_stream(std::uint64_t m, std::uint64_t n, std::uint64_t s) {
  return splitmix64(splitmix64(m) ^ (splitmix64(n) + 0x5851f42d4c957f2dULL)) ^ s;
}

/// Sampled field checks: quasi-invariance signs, rank, tangency, well-definedness.
inline void run_field_checks(const CampaignConfig& cfg, const CliffordFamily& fam, CaseReport& rep) {
  const auto start = std::chrono::steady_clock::now();
  const auto& tol = cfg.tolerances;
  const std::uint64_t low = fam.count();
  rep.signs.clear();
  for (std::uint64_t j = 1; j <= rep.delta; ++j) {
    SignRecord s;
    s.index = j;
    s.clifford = j <= low;
    s.predicted_sigma = expected_sign(j, Involution::Sigma, rep.m, fam);
    s.predicted_tau = expected_sign(j, Involution::Tau, rep.m, fam);
    rep.signs.push_back(s);
  }
  rep.samples = cfg.samples_per_case;
  rep.rank_min = std::numeric_limits<std::size_t>::max();
  rep.rank_max = 0;
  rep.min_rel_sv_min = std::numeric_limits<double>::infinity();
  rep.min_rel_sv_max = 0.0;
  rep.tangency_max = {};

  for (std::uint64_t s = 0; s < cfg.samples_per_case; ++s) {
    const auto p = sample_point(rep.n, rep.m, cfg.seed, sample_stream(rep.m, rep.n, s));
    for (auto& rec : rep.signs) {
      for (auto kind : {Involution::Sigma, Involution::Tau}) {
        const auto got = quasi_invariance_sign(rec.index, kind, p, fam, tol.invariance);
        int& slot = kind == Involution::Sigma ? rec.observed_sigma : rec.observed_tau;
        if (!got) {
          ++rec.failures;
          slot = 0;
        } else if (s == 0) {
          slot = *got;
        } else if (slot != *got) {
          ++rec.failures;
          slot = 0;
        }
      }
      const auto t = field(rec.index, p, fam);
      const auto r = tangency(p, t);
      rep.tangency_max.hermitian = std::max(rep.tangency_max.hermitian, r.hermitian);
      rep.tangency_max.sphere = std::max(rep.tangency_max.sphere, r.sphere);
      rep.tangency_max.circle = std::max(rep.tangency_max.circle, r.circle);
      for (int root = 0; root < 8; ++root) {
        ++rep.well_defined_checks;
        if (!check_well_defined(rec.index, p, fam, std::polar(1.0, root * M_PI / 4.0), tol.algebraic))
          ++rep.well_defined_failures;
      }
    }
    const auto ind = independence_report(p, fam, tol.rank_relative);
    rep.rank_min = std::min(rep.rank_min, ind.rank);
    rep.rank_max = std::max(rep.rank_max, ind.rank);
    rep.min_rel_sv_min = std::min(rep.min_rel_sv_min, ind.min_relative_singular_value);
    rep.min_rel_sv_max = std::max(rep.min_rel_sv_max, ind.min_relative_singular_value);
  }
  rep.fields_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline void run_cohomology_checks(CaseReport& rep) {
  const WallParams p{rep.m, rep.n};
  rep.total_sw = total_sw_wall(p).to_string();
  rep.first_ruled_out.reset();
  rep.survivor_at_bound.reset();
  for (std::uint64_t k = 1; k <= rep.dim; ++k) {
    const auto r = virtual_sw_rules_out(p, k);
    if (r.ruled_out) {
      rep.first_ruled_out = k;
      rep.first_ruled_out_multisets = r.failures.size();
      break;
    }
    if (r.survivor) rep.survivor_at_bound = render_multiset(*r.survivor, degree_one_classes(wall_ring(p)));
  }
  rep.sw_bound = rep.first_ruled_out ? *rep.first_ruled_out - 1 : rep.dim;
}

inline CaseReport run_case(const CampaignConfig& cfg, std::uint64_t m, std::uint64_t n) {
  const WallParams p{m, n};
  CaseReport rep;
  rep.m = m;
  rep.n = n;
  rep.nu = nu(n + 1);
  rep.delta = field_count(p);
  rep.dim = p.dim();
  rep.pspan = pspan_wall(p);
  rep.fibration_bound = upper_bound_fibration(p);
  rep.sspan = sspan_cpn(n);

  const auto fam = build_family(n);
  rep.matrix_count = fam.count();
  rep.clifford = verify_family(fam);
  run_field_checks(cfg, fam, rep);
  run_cohomology_checks(rep);
  return rep;
}

struct CampaignReport {
  CampaignConfig config;
  std::vector<CaseReport> cases;

  [[nodiscard]] bool all_ok() const {
    for (const auto& c : cases)
      if (!c.all_ok(config.tolerances)) return false;
    return true;
  }
};

inline CampaignReport run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  CampaignReport r;
  r.config = cfg;
  for (std::uint64_t m = cfg.m_range.lo; m <= cfg.m_range.hi; ++m)
    for (std::uint64_t n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) r.cases.push_back(run_case(cfg, m, n));
  return r;
}

inline nlohmann::ordered_json check_json(bool pass, const char* verifies) {
  return {{"pass", pass}, {"verifies", verifies}};
}

/// Wall-clock timings are excluded so identical configurations give identical bytes.
inline nlohmann::ordered_json to_json(const CaseReport& c, const CampaignConfig& cfg, const std::string& hash) {
  using nlohmann::ordered_json;
  ordered_json signs = ordered_json::array();
  for (const auto& s : c.signs) {
    signs.push_back({{"field", s.index},
                     {"group", s.clifford ? "clifford" : "sphere"},
                     {"predictedSigma", s.predicted_sigma},
                     {"observedSigma", s.observed_sigma},
                     {"predictedTau", s.predicted_tau},
                     {"observedTau", s.observed_tau},
                     {"failures", s.failures},
                     {"match", s.matches()}});
  }
  ordered_json cliff = ordered_json::object();
  for (auto kind : {IdentityCheck::Kind::Anticommute, IdentityCheck::Kind::SkewHermitian,
                    IdentityCheck::Kind::QuasiReal, IdentityCheck::Kind::SquareMinusOne}) {
    cliff[to_string(kind)] = {{"passed", c.clifford.count(kind, true)}, {"failed", c.clifford.count(kind, false)}};
  }
  return {
      {"m", c.m},
      {"n", c.n},
      {"nu", c.nu},
      {"delta", c.delta},
      {"dim", c.dim},
      {"seed", cfg.seed},
      {"configHash", hash},
      {"invariants",
       {{"pspan", c.pspan},
        {"fibrationBound", c.fibration_bound},
        {"sspanCPn", c.sspan},
        {"check", check_json(c.formula_ok(), "closed form agrees with the fibration upper bound and the field count")}}},
      {"clifford",
       {{"matrices", c.matrix_count},
        {"identities", cliff},
        {"check", check_json(c.clifford.all_pass() && c.matrix_count == 2 * c.nu + 1,
                             "A_j anticommute, are skew-Hermitian and commute with conjugation up to sign")}}},
      {"signs",
       {{"fields", signs},
        {"check", check_json(c.signs_ok(), "each field is quasi-invariant under sigma and tau with the predicted sign")}}},
      {"independence",
       {{"samples", c.samples},
        {"rankMin", c.rank_min},
        {"rankMax", c.rank_max},
        {"minRelativeSingularValueMin", c.min_rel_sv_min},
        {"minRelativeSingularValueMax", c.min_rel_sv_max},
        {"tangencyMax",
         {{"hermitian", c.tangency_max.hermitian}, {"sphere", c.tangency_max.sphere}, {"circle", c.tangency_max.circle}}},
        {"wellDefinedChecks", c.well_defined_checks},
        {"wellDefinedFailures", c.well_defined_failures},
        {"check", check_json(c.independence_ok() && c.tangency_ok(cfg.tolerances) && c.well_defined_ok(),
                             "the delta fields are tangent, well defined on CP^n and pointwise independent")}}},
      {"cohomology",
       {{"totalStiefelWhitney", c.total_sw},
        {"swUpperBound", c.sw_bound},
        {"firstRuledOut", c.first_ruled_out ? ordered_json(*c.first_ruled_out) : ordered_json(nullptr)},
        {"ruledOutMultisets", c.first_ruled_out_multisets},
        {"survivorAtBound", c.survivor_at_bound ? ordered_json(*c.survivor_at_bound) : ordered_json(nullptr)},
        {"check", check_json(c.obstruction_ok(), "mod-2 obstruction bound is at least the projective span")}}},
  };
}

inline nlohmann::ordered_json to_json(const CampaignReport& r) {
  const auto hash = config_hash(r.config);
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c, r.config, hash));
  return {{"schema", kReportSchemaVersion},
          {"config", to_json(r.config)},
          {"configHash", hash},
          {"allPass", r.all_ok()},
          {"cases", cases}};
}

inline std::string render_text(const CampaignReport& r) {
  std::ostringstream os;
  os << "config " << config_hash(r.config) << "  seed " << r.config.seed << "  samples/case "
     << r.config.samples_per_case << "\n";
  os << "   m   n  nu  delta  dim  clifford  signs  rank      minRelSV   tangency  swBound  status\n";
  for (const auto& c : r.cases) {
    char line[256];
    std::snprintf(line, sizeof line, "%4llu%4llu%4llu%7llu%5llu  %8s  %5s  %2zu..%-2zu  %10.3e  %9.2e  %7llu  %s\n",
                  static_cast<unsigned long long>(c.m), static_cast<unsigned long long>(c.n),
                  static_cast<unsigned long long>(c.nu), static_cast<unsigned long long>(c.delta),
                  static_cast<unsigned long long>(c.dim), c.clifford.all_pass() ? "ok" : "FAIL",
                  c.signs_ok() ? "ok" : "FAIL", c.rank_min, c.rank_max, c.min_rel_sv_min, c.tangency_max.max(),
                  static_cast<unsigned long long>(c.sw_bound), c.all_ok(r.config.tolerances) ? "PASS" : "FAIL");
    os << line;
  }
  os << (r.all_ok() ? "all cases pass\n" : "FAILURES present\n");
  return os.str();
}

}  // namespace wallspan
