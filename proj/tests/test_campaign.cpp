#include <catch_amalgamated.hpp>

#include <set>

#include "wallspan/acceptance.hpp"
#include "wallspan/campaign.hpp"

using namespace wallspan;

namespace {

CampaignConfig small_config() {
  CampaignConfig c;
  c.m_range = {1, 2};
  c.n_range = {0, 3};
  c.samples_per_case = 8;
  c.seed = 42;
  return c;
}

}  // namespace

TEST_CASE("range parsing", "[campaign]") {
  CHECK(parse_range("3") == IntRange{3, 3});
  CHECK(parse_range("1..4") == IntRange{1, 4});
  CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("1..x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("2-3"), std::invalid_argument);
}

TEST_CASE("config validation and hashing", "[campaign]") {
  CampaignConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.m_range == IntRange{1, 4});
  CHECK(c.n_range == IntRange{0, 8});
  CHECK(c.samples_per_case == 100);

  auto bad = c;
  bad.samples_per_case = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.m_range = {3, 2};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.m_range = {0, 2};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.tolerances.invariance = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  CHECK(config_hash(c) == config_hash(CampaignConfig{}));
  CHECK(config_hash(c).size() == 16);
  auto other = c;
  other.seed += 1;
  CHECK(config_hash(other) != config_hash(c));
}

TEST_CASE("campaign report completeness", "[campaign]") {
  const auto cfg = small_config();
  const auto report = run_campaign(cfg);
  REQUIRE(report.cases.size() == 8);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const auto& c : report.cases) {
    REQUIRE(seen.emplace(c.m, c.n).second);
    REQUIRE(c.delta == pspan_wall({c.m, c.n}));
    REQUIRE(c.signs.size() == c.delta);
    REQUIRE(!c.clifford.checks.empty());
    REQUIRE(c.samples == cfg.samples_per_case);
    REQUIRE(!c.total_sw.empty());
    REQUIRE(c.all_ok(cfg.tolerances));
  }
  CHECK(report.all_ok());

  const auto j = to_json(report);
  CHECK(j["schema"] == kReportSchemaVersion);
  REQUIRE(j["cases"].size() == 8);
  for (const auto& c : j["cases"]) {
    CHECK(c["seed"] == 42);
    CHECK(c["configHash"] == config_hash(cfg));
    for (const char* key : {"invariants", "clifford", "signs", "independence", "cohomology"}) {
      REQUIRE(c.contains(key));
      CHECK(c[key]["check"]["pass"] == true);
      CHECK(!c[key]["check"]["verifies"].get<std::string>().empty());
    }
  }
}

TEST_CASE("reports are reproducible byte for byte", "[campaign]") {
  const auto cfg = small_config();
  const auto a = to_json(run_campaign(cfg)).dump(2);
  const auto b = to_json(run_campaign(cfg)).dump(2);
  CHECK(a == b);
  auto other = cfg;
  other.seed = 43;
  CHECK(to_json(run_campaign(other)).dump(2) != a);
}

TEST_CASE("sign table content", "[campaign]") {
  auto cfg = small_config();
  const auto rep = run_case(cfg, 3, 3);  // nu = 2: five Clifford fields, three sphere fields
  REQUIRE(rep.signs.size() == 8);
  const int sigma[] = {-1, -1, 1, 1, -1, -1, -1, -1};
  const int tau[] = {1, 1, 1, 1, 1, 1, 1, -1};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rep.signs[i].observed_sigma == sigma[i]);
    CHECK(rep.signs[i].observed_tau == tau[i]);
    CHECK(rep.signs[i].matches());
  }
  // Odd n: the mod-2 obstruction rules nothing out (oracle table value).
  CHECK(rep.sw_bound == 10);
  CHECK_FALSE(rep.first_ruled_out.has_value());
}

TEST_CASE("acceptance criteria pass on a reduced grid", "[campaign][acceptance]") {
  const auto results = run_acceptance(small_config());
  REQUIRE(results.size() == 7);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].id == static_cast<int>(i + 1));
    CHECK(results[i].passed);
  }
}

TEST_CASE("acceptance criteria detect violations", "[campaign][acceptance]") {
  auto cfg = small_config();
  cfg.tolerances.invariance = 1e-30;
  cfg.tolerances.algebraic = 1e-30;
  cfg.tolerances.rank_relative = 1.5;  // every singular value is below 1.5 * largest
  const auto r = criteria_fields(cfg);
  REQUIRE(r.size() == 3);
  CHECK_FALSE(r[0].passed);
  CHECK_FALSE(r[1].passed);
  CHECK_FALSE(r[2].passed);
}
