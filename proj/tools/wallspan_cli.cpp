// wallspan: command-line front end for the Wall manifold projective span checks.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wallspan/acceptance.hpp"
#include "wallspan/campaign.hpp"

using namespace wallspan;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string m = "1..4";
  std::string n = "0..8";
  std::uint64_t seed = CampaignConfig{}.seed;
  std::uint64_t samples = CampaignConfig{}.samples_per_case;
  std::string format = "text";
  std::uint64_t k_max = 0;
  Tolerances tol{};
};

std::uint64_t single_value(const std::string& text, const char* flag) {
  const auto r = parse_range(text);
  if (r.lo != r.hi) throw std::invalid_argument(std::string(flag) + " expects a single value");
  return r.lo;
}

OutputFormat parse_format(const std::string& f) {
  if (f == "text") return OutputFormat::Text;
  if (f == "json") return OutputFormat::Json;
  throw std::invalid_argument("--format must be text or json");
}

CampaignConfig make_config(const Options& o) {
  CampaignConfig c;
  c.m_range = parse_range(o.m);
  c.n_range = parse_range(o.n);
  c.samples_per_case = o.samples;
  c.seed = o.seed;
  c.tolerances = o.tol;
  c.format = parse_format(o.format);
  c.validate();
  return c;
}

int cmd_invariants(const Options& o) {
  const WallParams p{single_value(o.m, "--m"), single_value(o.n, "--n")};
  const auto fmt = parse_format(o.format);
  const auto v = nu(p.n + 1);
  const auto delta = field_count(p);
  const auto ps = pspan_wall(p);
  const auto ub = upper_bound_fibration(p);
  const auto ss = sspan_cpn(p.n);
  const bool consistent = ps == ub && ps == delta && ps <= p.dim() && ss == 2 * v;
  const bool both_even = p.m % 2 == 0 && p.n % 2 == 0;
  if (fmt == OutputFormat::Json) {
    ordered_json j{{"schema", kReportSchemaVersion}, {"m", p.m}, {"n", p.n}, {"nu", v}, {"delta", delta},
                   {"dim", p.dim()}, {"pspan", ps}, {"fibrationBound", ub}, {"sspanCPn", ss},
                   {"consistent", consistent}};
    if (both_even) j["quotedSpan"] = 1;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Q(" << p.m << "," << p.n << ")\n"
              << "  nu(n+1)           " << v << "\n"
              << "  delta             " << delta << "\n"
              << "  dim               " << p.dim() << "\n"
              << "  pspan             " << ps << "\n"
              << "  fibration bound   " << ub << "\n"
              << "  sspan(CP^n)       " << ss << "\n"
              << "  consistent        " << (consistent ? "yes" : "NO") << "\n";
    if (both_even) std::cout << "  note: span=1 < pspan=" << ps << " (span value quoted for m, n even)\n";
  }
  return consistent ? kOk : kCheckFailed;
}

int cmd_cohomology(const Options& o) {
  const WallParams p{single_value(o.m, "--m"), single_value(o.n, "--n")};
  const auto fmt = parse_format(o.format);
  const auto k_max = o.k_max == 0 ? p.dim() : o.k_max;
  if (k_max > p.dim()) throw std::invalid_argument("--k-max must not exceed dim = " + std::to_string(p.dim()));
  const auto ring = wall_ring(p);
  const auto w = total_sw_wall(p, ring);
  const auto classes = degree_one_classes(ring);

  ordered_json by_degree = ordered_json::object();
  for (std::uint32_t q = 0; q <= p.dim(); ++q) {
    const auto c = w.component(q);
    if (!c.is_zero()) by_degree[std::to_string(q)] = c.to_string();
  }
  ordered_json runs = ordered_json::array();
  std::optional<std::uint64_t> first_ruled_out;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const auto r = virtual_sw_rules_out(p, k);
    ordered_json run{{"k", k}, {"ruledOut", r.ruled_out}};
    if (r.survivor) run["survivor"] = render_multiset(*r.survivor, classes);
    else run["multisetsChecked"] = r.failures.size();
    runs.push_back(run);
    if (r.ruled_out && !first_ruled_out) first_ruled_out = k;
  }
  const auto bound = sw_upper_bound(p);
  const bool ok = bound >= pspan_wall(p);

  if (fmt == OutputFormat::Json) {
    ordered_json j{{"schema", kReportSchemaVersion},
                   {"m", p.m},
                   {"n", p.n},
                   {"totalStiefelWhitney", w.to_string()},
                   {"byDegree", by_degree},
                   {"obstruction", runs},
                   {"swUpperBound", bound},
                   {"pspan", pspan_wall(p)},
                   {"consistent", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "w(Q(" << p.m << "," << p.n << ")) = " << w.to_string() << "\n";
    for (const auto& [deg, text] : by_degree.items()) std::cout << "  w_" << deg << " = " << text.get<std::string>() << "\n";
    for (const auto& run : runs) {
      std::cout << "  k=" << run["k"].get<std::uint64_t>() << ": ";
      if (run["ruledOut"].get<bool>())
        std::cout << "ruled out (" << run["multisetsChecked"].get<std::size_t>() << " multisets)\n";
      else
        std::cout << "admissible, e.g. x_i = " << run["survivor"].get<std::string>() << "\n";
    }
    if (first_ruled_out) std::cout << "ruled out at k=" << *first_ruled_out << "\n";
    std::cout << "sw_upper_bound " << bound << "  (pspan " << pspan_wall(p) << ")\n";
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_clifford(const Options& o) {
  const auto n = single_value(o.n, "--n");
  const auto fmt = parse_format(o.format);
  const auto fam = build_family(n);
  const auto rep = verify_family(fam);
  if (fmt == OutputFormat::Json) {
    ordered_json mats = ordered_json::array();
    for (std::size_t j = 0; j < fam.count(); ++j) {
      ordered_json rows = ordered_json::array();
      for (std::size_t r = 0; r < fam.dimension(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < fam.dimension(); ++c) row.push_back(to_string(fam.matrices[j](r, c)));
        rows.push_back(row);
      }
      mats.push_back({{"j", j + 1}, {"epsilon", fam.predicted_signs[j]}, {"entries", rows}});
    }
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
      ordered_json e{{"identity", to_string(c.kind)}, {"j", c.j}};
      if (c.kind == IdentityCheck::Kind::Anticommute) e["k"] = c.k;
      e["pass"] = c.pass;
      checks.push_back(e);
    }
    std::cout << ordered_json{{"schema", kReportSchemaVersion}, {"n", n},         {"nu", fam.nu},
                              {"b", fam.b},                     {"matrices", mats}, {"checks", checks},
                              {"allPass", rep.all_pass()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "n=" << n << "  nu=" << fam.nu << "  b=" << fam.b << "  matrices=" << fam.count() << "\n";
    for (std::size_t j = 0; j < fam.count(); ++j)
      std::cout << "A_" << j + 1 << "  (epsilon " << fam.predicted_signs[j] << ")\n" << fam.matrices[j];
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "  pass  " : "  FAIL  ") << to_string(c.kind) << " j=" << c.j;
      if (c.kind == IdentityCheck::Kind::Anticommute) std::cout << " k=" << c.k;
      std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "all identities hold" : "identity failures present") << "\n";
  }
  return rep.all_pass() ? kOk : kCheckFailed;
}

int cmd_fields(const Options& o) {
  const auto cfg = make_config(o);
  const auto report = run_campaign(cfg);
  if (cfg.format == OutputFormat::Json)
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << render_text(report);
  return report.all_ok() ? kOk : kCheckFailed;
}

int cmd_accept(const Options& o) {
  const auto cfg = make_config(o);
  const auto results = run_acceptance(cfg);
  if (cfg.format == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results)
      arr.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.passed}, {"detail", r.detail}});
    std::cout << ordered_json{{"schema", kReportSchemaVersion},
                              {"config", to_json(cfg)},
                              {"configHash", config_hash(cfg)},
                              {"criteria", arr},
                              {"allPass", all_passed(results)}}
                     .dump(2)
              << "\n";
  } else {
    print_results(std::cout, results);
  }
  return all_passed(results) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective span of Wall manifolds Q(m,n): invariants, cohomology, Clifford and field checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool ranges) {
    sub->add_option("--m", o.m, ranges ? "sphere dimension m, N or LO..HI" : "sphere dimension m")->capture_default_str();
    sub->add_option("--n", o.n, ranges ? "CP^n dimension n, N or LO..HI" : "complex dimension n")->capture_default_str();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };
  auto add_campaign = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "master seed")->envname("WALLSPAN_SEED")->capture_default_str();
    sub->add_option("--samples", o.samples, "sampled points per (m,n)")->capture_default_str();
    sub->add_option("--tol-algebraic", o.tol.algebraic, "tangency / well-definedness tolerance")->capture_default_str();
    sub->add_option("--tol-invariance", o.tol.invariance, "quasi-invariance tolerance")->capture_default_str();
    sub->add_option("--tol-rank", o.tol.rank_relative, "relative singular value threshold")->capture_default_str();
  };

  auto* inv = app.add_subcommand("invariants", "closed-form invariants of Q(m,n)");
  add_common(inv, false);
  auto* coh = app.add_subcommand("cohomology", "Stiefel-Whitney class and mod-2 line-field obstruction");
  add_common(coh, false);
  coh->add_option("--k-max", o.k_max, "largest k to test (default: dim)");
  auto* cl = app.add_subcommand("clifford", "build and verify the Clifford automorphisms of C^(n+1)");
  add_common(cl, false);
  auto* fl = app.add_subcommand("fields", "sampled verification of the quasi-invariant fields");
  add_common(fl, true);
  add_campaign(fl);
  auto* ac = app.add_subcommand("accept", "run the acceptance criteria");
  add_common(ac, true);
  add_campaign(ac);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  // Single-valued subcommands default to the smallest case.
  auto* chosen = app.get_subcommands().front();
  if (chosen == inv || chosen == coh || chosen == cl) {
    if (chosen->count("--m") == 0) o.m = "1";
    if (chosen->count("--n") == 0) o.n = "0";
  }

  try {
    if (inv->parsed()) return cmd_invariants(o);
    if (coh->parsed()) return cmd_cohomology(o);
    if (cl->parsed()) return cmd_clifford(o);
    if (fl->parsed()) return cmd_fields(o);
    if (ac->parsed()) return cmd_accept(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
