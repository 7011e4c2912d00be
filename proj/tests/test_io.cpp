#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "qws/errors.hpp"
#include "qws/report.hpp"
#include "qws/simulate.hpp"
#include "qws/walk.hpp"

using namespace qws;

namespace {

std::string csv_string(const SimulationSeries& series) {
  std::ostringstream out;
  write_csv(series, out);
  return out.str();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("csv cells are printed with a fixed format") {
  SimulationSeries series;
  series.basis_labels = {"ab"};
  StepRecord rec;
  rec.t = 0;
  rec.report.position_success = 0.015625;  // 1/64, exact in binary
  rec.report.boosted_success = 0.25;
  rec.basis_probs = {0.5};
  series.steps.push_back(rec);
  CHECK(csv_string(series) ==
        "t,p_position,p_boosted,ab\n"
        "0,1.562500000000000e-02,2.500000000000000e-01,5.000000000000000e-01\n");
}

TEST_CASE("csv header and shape follow the recorded series") {
  const RegularGraph g = build_complete(16);
  const MarkedSet m = make_marked(g, {0});
  const SimulationSeries series = run_search(g, m, 12, true);
  const std::string text = csv_string(series);

  std::istringstream lines(text);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "t,p_position,p_boosted,ab,ba,bb");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
  }
  CHECK(rows == 13);  // t = 0..12
  CHECK(text.substr(text.find('\n') + 1, 2) == "0,");

  // without basis recording the basis columns disappear
  const SimulationSeries bare = run_search(g, m, 3, false);
  const std::string bare_text = csv_string(bare);
  CHECK(bare_text.substr(0, bare_text.find('\n')) ==
        "t,p_position,p_boosted");
}

TEST_CASE("csv output is byte deterministic across runs") {
  auto make = [] {
    const RegularGraph g = build_torus(2, 6);
    const MarkedSet m = make_marked(g, {0});
    return csv_string(run_search(g, m, 30, true));
  };
  const std::string first = make();
  const std::string second = make();
  CHECK(first == second);
  CHECK(first.size() > 1000);
}

TEST_CASE("csv file round trip") {
  const RegularGraph g = build_complete(8);
  const MarkedSet m = make_marked(g, {0});
  const SimulationSeries series = run_search(g, m, 4, true);
  const char* path = "test_io_roundtrip.csv";
  write_csv(series, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream readback;
  readback << in.rdbuf();
  CHECK(readback.str() == csv_string(series));
  in.close();
  std::remove(path);

  CHECK_THROWS_AS(write_csv(series, "no-such-dir/run.csv"), io_error);
}

TEST_CASE("reduced report fields") {
  const RegularGraph g = build_complete(6);
  const MarkedSet m = make_marked(g, {0});
  const ReducedSystem rs = reduce_system(g, m);
  const ReducedOperator u0 = reduced_operator(rs.partition, rs.basis, false);
  const ReducedOperator u = reduced_operator(rs.partition, rs.basis, true);
  const json j = reduced_report(g, rs.partition, rs.basis, u0, u);

  CHECK(j["family"] == "complete");
  CHECK(j["n_vertices"] == 6);
  CHECK(j["degree"] == 5);
  CHECK(j["n_types"] == 2);
  CHECK(j["single_neighbor_type"] == true);
  CHECK(j["dimension"] == 3);
  REQUIRE(j["types"].size() == 2);
  CHECK(j["types"][0]["label"] == "a");
  CHECK(j["types"][0]["count"] == 1);
  CHECK(j["types"][0]["marked"] == true);
  CHECK(j["types"][1]["count"] == 5);
  REQUIRE(j["basis"].size() == 3);
  CHECK(j["basis"][0]["label"] == "ab");
  CHECK(j["basis"][0]["source_count"] == 1);
  CHECK(j["basis"][0]["port_count"] == 5);
  CHECK(j["basis"][2]["label"] == "bb");
  CHECK(j["basis"][2]["port_count"] == 4);

  // [re, im] pairs; the oracle flips the ab column sign
  CHECK(j["walk_matrix"][1][0][0] == doctest::Approx(1.0));
  CHECK(j["walk_matrix"][1][0][1] == doctest::Approx(0.0));
  CHECK(j["search_matrix"][1][0][0] == doctest::Approx(-1.0));
  CHECK(j["search_matrix"][2][2][0] == doctest::Approx(0.6));
}

TEST_CASE("doubling report json") {
  const RegularGraph a = build_complete(16);
  const RegularGraph b = build_complete(64);
  const DoublingReport rep = doubling_condition(
      {{a, make_marked(a, {0})}, {b, make_marked(b, {0})}});
  const json j = doubling_report_json(rep);
  CHECK(j["verdict"] == "Satisfied");
  CHECK(j["single_neighbor_type"] == true);
  CHECK(j["low_confidence"] == false);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["n_vertices"] == 16);
  CHECK(j["entries"][0]["degree"] == 15);
  CHECK(j["entries"][0]["c"] == "2/15");
  CHECK(j["entries"][1]["c"] == "2/63");
  CHECK(j["entries"][1]["ratio"] == doctest::Approx(2.0 / 63).epsilon(1e-14));
}

TEST_CASE("spectral and perturbation json") {
  const RegularGraph g = build_complete(64);
  const MarkedSet m = make_marked(g, {0});
  const ReducedSystem rs = reduce_system(g, m);
  const ReducedOperator op = reduced_operator(rs.partition, rs.basis, true);
  const json js = spectral_report_json(spectrum(op));
  REQUIRE(js["eigenphases"].size() == 3);
  CHECK(js.contains("closed_form"));
  CHECK(js["closed_form"]["cos_theta"] ==
        doctest::Approx(61.0 / 63).epsilon(1e-14));

  const ReducedOperator prime =
      plus_minus_basis(op, op.basis.index_of("ab"), op.basis.index_of("ba"));
  const PerturbationResult pr = degenerate_perturbation(
      prime, prime.basis.index_of("-"), prime.basis.index_of("bb"));
  const json jp = perturbation_json(pr);
  CHECK(jp["sigma"].get<double>() > 0.0);
  CHECK(jp["e_plus"].size() == 2);
  CHECK(jp["predicted_runtime"].get<double>() > 1.0);
  CHECK(jp["rounded_runtime"].get<int>() ==
        static_cast<int>(std::lround(jp["predicted_runtime"].get<double>())));
}

TEST_CASE("json writer reports unusable paths") {
  json j;
  j["x"] = 1;
  CHECK_THROWS_AS(write_json(j, "no-such-dir/report.json"), io_error);
  const char* path = "test_io_report.json";
  write_json(j, path);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text == "{\n  \"x\": 1\n}\n");
  in.close();
  std::remove(path);
}

}  // TEST_SUITE
