#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rsbench/experiment_io.hpp"

using namespace rsbench;

namespace {

std::string write_temp_json(const std::string& body) {
  std::string path = "rsbench_test_config.json";
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("parse_spec round-trip with overrides") {
  std::string path = write_temp_json(
      R"({"config":"slippage","k":5,"budget":500,"macroreps":5000,"seed":9,
          "policies":["gcei"],"r0":100,"n0":2})");
  SpecOverrides ov;
  ov.policies = {"gcei"};
  ov.seed = 42;
  ExperimentSpec spec = parse_spec(path, ov);
  CHECK(spec.config == ConfigName::Slippage);
  CHECK(spec.k == 5);
  CHECK(spec.budget == 500);
  CHECK(spec.seed == 42);        // flag beats file
  CHECK(spec.macroreps == 5000); // file value survives
  CHECK(spec.policies.size() == 1);
  CHECK(spec.policies[0].kind == PolicyKind::Gcei);

  SpecOverrides ov2;
  ov2.macroreps = 100;
  ExperimentSpec spec2 = parse_spec(path, ov2);
  CHECK(spec2.macroreps == 100);
  std::remove(path.c_str());
}

TEST_CASE("parse_spec defaults follow r0=20k, R=100k, n0=2") {
  SpecOverrides ov;
  ov.config = std::string("ascending_mean");
  ov.k = 10;
  ExperimentSpec spec = parse_spec("", ov);
  CHECK(spec.effective_r0() == 200);
  CHECK(spec.effective_budget() == 1000);
  CHECK(spec.n0 == 2);
  CHECK(spec.policies.size() == 4);
  for (const PolicySpec& p : spec.policies) CHECK(p.beta == 0.5);
}

TEST_CASE("parse_spec rejects bad fields by name") {
  SpecOverrides ov;
  ov.policies = {"bogus"};
  CHECK_THROWS_WITH_AS(parse_spec("", ov), doctest::Contains("bogus"), UsageError);

  SpecOverrides k1;
  k1.k = 1;
  CHECK_THROWS_WITH_AS(parse_spec("", k1), doctest::Contains("k"), UsageError);

  SpecOverrides tiny;
  tiny.budget = 5;
  tiny.k = 5;
  CHECK_THROWS_WITH_AS(parse_spec("", tiny), doctest::Contains("budget"), UsageError);

  CHECK_THROWS_AS(parse_spec("no_such_file.json", SpecOverrides{}), UsageError);
}

TEST_CASE("emit_csv header, ordering, and thinning") {
  MetricsSeries s;
  s.start_t = 10;
  for (int i = 0; i <= 7; ++i) {
    s.pics.push_back(0.5);
    s.alloc_best_mean.push_back(0.25);
    s.gap_mean.push_back(0.15);
    s.gap_std.push_back(0.0);
  }
  std::ostringstream out;
  emit_csv({{"zeta", s}, {"alpha", s}}, out, 5);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "policy,t,pics,alloc_best_mean,gap_mean,gap_std");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  // thin=5 over t in [10,17]: keeps 10, 15, and the final 17; alpha first
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].rfind("alpha,10,", 0) == 0);
  CHECK(rows[1].rfind("alpha,15,", 0) == 0);
  CHECK(rows[2].rfind("alpha,17,", 0) == 0);
  CHECK(rows[3].rfind("zeta,10,", 0) == 0);
  CHECK(rows[5] == "zeta,17,0.5,0.25,0.15,0");
}

TEST_CASE("format_real caps at 10 significant digits, locale-independent") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0 / 3.0) == "0.3333333333");
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(1234567.125) == "1234567.125");
}

TEST_CASE("identical runs emit byte-identical CSV regardless of workers") {
  ExperimentSpec spec;
  spec.config = ConfigName::Slippage;
  spec.k = 3;
  spec.budget = 90;
  spec.macroreps = 30;
  spec.seed = 5150;
  spec.policies.push_back(PolicySpec{PolicyKind::Mcei, 0.5, {}});
  spec.policies.push_back(PolicySpec{PolicyKind::StaticOracle, 0.5, {}});

  std::ostringstream a, b, c;
  emit_csv(run_experiment(spec, 1).series, a, 1);
  emit_csv(run_experiment(spec, 1).series, b, 1);
  emit_csv(run_experiment(spec, 3).series, c, 1);
  CHECK(a.str() == b.str());
  CHECK(a.str() == c.str());
  CHECK(!a.str().empty());

  // every emitted value respects its range
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');  // policy
    std::getline(row, field, ',');  // t
    std::getline(row, field, ',');
    double pics = std::stod(field);
    CHECK(pics >= 0.0);
    CHECK(pics <= 1.0);
    std::getline(row, field, ',');
    double alloc = std::stod(field);
    CHECK(alloc > 0.0);
    CHECK(alloc < 1.0);
    std::getline(row, field, ',');
    std::getline(row, field, ',');
    CHECK(std::stod(field) >= 0.0);
  }
}
