#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <memory>

#include "reekit/suite.hpp"

using namespace reekit;

namespace {

const CheckReport* find(const std::vector<CheckReport>& r, const std::string& name) {
  auto it = std::find_if(r.begin(), r.end(), [&](const CheckReport& c) { return c.name == name; });
  return it == r.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(parse_suite_name("ovoid") == SuiteName::ovoid);
  CHECK(std::string(suite_name(SuiteName::geometry)) == "geometry");
  CHECK_THROWS_AS(parse_suite_name("nope"), std::invalid_argument);
  const auto f = Field::standard(0);
  CHECK_THROWS_AS(run_checks({"no.such.check"}, *f), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
  const auto f = Field::standard(1);
  SuiteOptions o;
  o.trials = 50;
  o.seed = 5;
  const std::vector<std::string> names{"hexagon.sampled-axioms", "ovoid.opposite", "identity.cube-formula"};
  const auto a = run_checks(names, *f, o);
  const auto b = run_checks(names, *f, o);
  CHECK(format_text(a) == format_text(b));
  CHECK(format_json(a, *f) == format_json(b, *f));
  CHECK(all_pass(a));
  for (const auto& r : a) {
    CHECK_FALSE(r.exhaustive);
    CHECK(r.seed == 5);
  }
  CHECK(a[0].scope().starts_with("sampled(seed=5,trials="));
}

TEST_CASE("JSON report") {
  const auto f = Field::standard(0);
  const auto r = run_checks({"ovoid.polarity-involution", "ovoid.absolute-points"}, *f);
  const auto j = nlohmann::json::parse(format_json(r, *f));
  REQUIRE(j.contains("checks"));
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "ovoid.polarity-involution");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["scope"]["kind"] == "exhaustive");
  CHECK(r[0].scope() == "exhaustive");
}

TEST_CASE("imported blocks with a wrong gnarl fail with a witness") {
  const auto f = Field::standard(0);
  auto blocks = all_blocks(*f, BlockKind::sphere);
  blocks[3].gnarl = blocks[3].points.back() == blocks[3].gnarl ? blocks[3].points.front()
                                                               : blocks[3].points.back();
  SuiteOptions o;
  o.imported_blocks = std::make_shared<const std::vector<Block>>(blocks);
  const auto r = run_checks({"geometry.imported-blocks"}, *f, o);
  REQUIRE(r.size() == 1);
  CHECK_FALSE(r[0].pass);
  CHECK_FALSE(r[0].witness.empty());

  o.imported_blocks = std::make_shared<const std::vector<Block>>(all_blocks(*f, BlockKind::sphere));
  CHECK(run_checks({"geometry.imported-blocks"}, *f, o)[0].pass);
}
