#include <doctest.h>

#include <string>

#include "hammersley/increments.hpp"
#include "hammersley/json_io.hpp"
#include "hammersley/process.hpp"
#include "hammersley/series.hpp"

using namespace hammersley;

TEST_CASE("format6 pins six decimals and normalizes negative zero") {
  CHECK(format6(1.575) == "1.575000");
  CHECK(format6(0.0) == "0.000000");
  CHECK(format6(-0.0) == "0.000000");
  CHECK(format6(1.0 / 3.0) == "0.333333");
  CHECK(fixed6(1.2345678) == doctest::Approx(1.234568).epsilon(1e-12));
}

TEST_CASE("table JSON carries counts as decimal strings in text order") {
  const Json j = table_json(series_table(2, 2));
  CHECK(j["k"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["process"] == "had");
  CHECK(j["counts"] == Json{{"21", "1"}, {"22", "1"}});

  const Json interval = table_json(interval_table(2, 2));
  CHECK(interval["process"] == "interval");
  // Text order: '*' sorts before digits.
  CHECK(interval["counts"] == Json{{"2*1*", "1"}, {"2*2*", "1"}, {"22**", "7"}});
}

TEST_CASE("table CSV uses probability decimals") {
  CHECK(table_csv(series_table(2, 2)) ==
        "word,multiplicity,probability\n"
        "21,1,0.500000\n"
        "22,1,0.500000\n");
}

TEST_CASE("exact distribution JSON keeps fractions") {
  const Json j = distribution_json(exact_increment_distribution(3, 2));
  CHECK(j["mode"] == "exact");
  CHECK_FALSE(j.contains("samples"));
  CHECK_FALSE(j.contains("seed"));
  CHECK(j["pmf"] == Json{{"1", "5/6"}, {"2", "1/6"}});
  CHECK(j["mean"] == "7/6");
  CHECK(j["fitted_p"] == fixed6(6.0 / 7.0));
  CHECK(j["lambda_hat"] == fixed6(7.0 / 6.0));
}

TEST_CASE("sampled distribution JSON keeps six-decimal strings") {
  const Json j = distribution_json(sampled_increment_distribution(50, 2, 8, 5));
  CHECK(j["mode"] == "sampled");
  CHECK(j["samples"] == 8);
  CHECK(j["seed"] == 5);
  for (const auto& [key, value] : j["pmf"].items()) {
    CHECK(value.get<std::string>().find('.') != std::string::npos);
  }
  CHECK(j["mean"].get<std::string>().size() == 8);  // d.dddddd
}

TEST_CASE("estimate JSON reports the reference constants") {
  const Json j = estimate_json(lambda_estimate_exact(4, 2));
  CHECK(j["mode"] == "exact");
  CHECK(j["exact_mean"] == "29/24");
  CHECK(j["phi"] == 1.618034);
  CHECK(j["p_star"] == 0.618034);
  CHECK(j["mean_increments"] == fixed6(29.0 / 24.0));
  CHECK(j["gap_to_phi"] == fixed6(ScalingEstimate::kPhi - 29.0 / 24.0));
  CHECK_FALSE(j.contains("half_width"));

  const Json sampled = estimate_json(lambda_estimate(50, 2, 30, 9));
  CHECK(sampled["mode"] == "sampled");
  CHECK(sampled.contains("half_width"));
  CHECK_FALSE(sampled.contains("exact_mean"));
}

TEST_CASE("distribution CSV supports the shifted convention") {
  const IncrementDistribution d = exact_increment_distribution(3, 2);
  CHECK(distribution_csv(d) ==
        "i,probability\n"
        "1,0.833333\n"
        "2,0.166667\n");
  CHECK(distribution_csv(d, true) ==
        "i,probability\n"
        "0,0.833333\n"
        "1,0.166667\n");
}

TEST_CASE("trajectory and trace serializers emit plain arrays") {
  CHECK(trajectory_json(Trajectory{{0, 1, 0}}) == Json::array({0, 1, 0}));
  CHECK(trajectory_json(IntervalTrajectory{{{0, 0}, {2, 1}}}) ==
        Json::array({Json::array({0, 0}), Json::array({2, 1})}));
  const PdaRun run = pda_run(Word::parse("212"), 2);
  CHECK(pda_trace_json(run) == Json::array({1, 1, 2}));
}

TEST_CASE("dump is canonical and repeatable") {
  const Json j{{"b", 1}, {"a", 2}};
  const std::string once = dump(j);
  CHECK(once == dump(j));
  CHECK(once.back() == '\n');
  CHECK(once.find("\"b\": 1") < once.find("\"a\": 2"));  // insertion order kept
}

TEST_CASE("process names match the CLI vocabulary") {
  CHECK(process_name(Process::had) == "had");
  CHECK(process_name(Process::interval) == "interval");
}
