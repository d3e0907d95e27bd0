#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "skewzf/io.hpp"
#include "skewzf/suites.hpp"

using namespace skewzf;

TEST_CASE("verdict report bookkeeping") {
  VerdictReport r("demo");
  r.add("A_", "1", "1", true);
  CHECK(r.passed());
  r.add({"Bw", "2", "3", InstanceStatus::finding});
  CHECK(r.passed());
  CHECK(r.findings().size() == 1);
  r.add("C~", "4", "5", false);
  CHECK_FALSE(r.passed());
  CHECK(r.failures().size() == 1);
  CHECK(r.failures().front().graph6 == "C~");
  CHECK(r.checked() == 3);
  CHECK(r.to_text().find("demo: FAIL") == 0);

  std::istringstream lines(r.to_json_lines());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("suite") == "demo");
    CHECK(j.contains("graph6"));
    CHECK(j.contains("expected"));
    CHECK(j.contains("actual"));
    CHECK(j.contains("status"));
    ++count;
  }
  CHECK(count == 3);
}

TEST_CASE("failure records replay") {
  SuiteParams params;
  params.n_max = 5;
  const auto report = run_suite("extreme", params);
  CHECK(report.passed());
  for (const auto& rec : report.instances()) CHECK_NOTHROW(parse_graph6(rec.graph6));
}

TEST_CASE("suites are deterministic") {
  const auto a = suite_unicyclic(30, 10, 99);
  const auto b = suite_unicyclic(30, 10, 99);
  CHECK(a.to_json_lines() == b.to_json_lines());
}

TEST_CASE("small suite runs") {
  CHECK(suite_extreme(4).checked() == 9);
  CHECK(suite_unique_pm_order6().passed());
  CHECK(suite_cut_vertex(5, Prime(3)).passed());
  CHECK(suite_smallz_observations(6).passed());
  CHECK_THROWS_AS(suite_extreme(8), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}
