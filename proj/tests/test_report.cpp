#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "arr/report.hpp"

using namespace arr;
using json = nlohmann::json;

TEST_CASE("analyze report for the 3-dim family at alpha=-2") {
  AnalyzeInput in;
  in.family = "A";
  in.alpha = Rat(-2);
  AnalyzeOutcome out = analyze(in);
  json rep = json::parse(out.report_json);

  CHECK(rep["schema"] == "run-report/1");
  CHECK(rep["arrangement"]["num_forms"] == 9);
  CHECK(rep["arrangement"]["rank"] == 3);
  CHECK(rep["freeness"]["status"] == "free");
  CHECK(rep["freeness"]["exponents"] == json::array({1, 4, 4}));
  CHECK(rep["lattice"]["num_chambers"] == "50");
  CHECK(rep["chambers"]["count"] == 50);
  CHECK(rep["kpi1"]["status"] == "not_kpi1");
  CHECK(rep["kpi1"]["reason"] == "simple_triangle");
  // one of the two sign conventions validates the printed basis
  bool any_basis = false;
  for (const auto& e : rep["saito_conventions"]) {
    if (e["is_basis"].get<bool>()) any_basis = true;
  }
  CHECK(any_basis);
  // reports exclude timing unless asked, and are byte-stable
  CHECK(!rep.contains("timing_ms"));
  CHECK(analyze(in).report_json == out.report_json);
}

TEST_CASE("analyze report for a file input") {
  AnalyzeInput in;
  in.file_path = "/tmp/arr_report_test.arr";
  {
    std::ofstream f(in.file_path);
    f << "arrangement dim=3\n1 0 0\n0 1 0\n0 0 1\n";
  }
  AnalyzeOutcome out = analyze(in);
  json rep = json::parse(out.report_json);
  CHECK(rep["freeness"]["exponents"] == json::array({1, 1, 1}));
  CHECK(rep["kpi1"]["status"] == "kpi1");
  CHECK(rep["kpi1"]["reason"] == "simplicial");
}

TEST_CASE("empty arrangement report") {
  AnalyzeInput in;
  in.file_path = "/tmp/arr_report_empty.arr";
  {
    std::ofstream f(in.file_path);
    f << "arrangement dim=3\n# no forms\n";
  }
  AnalyzeOutcome out = analyze(in);
  json rep = json::parse(out.report_json);
  CHECK(rep["freeness"]["status"] == "free");
  CHECK(rep["freeness"]["exponents"] == json::array({0, 0, 0}));
  CHECK(rep["kpi1"]["status"] == "kpi1");
  CHECK(!rep.contains("chambers"));
}

TEST_CASE("sweep rows") {
  SweepRow row = sweep_row("B", Rat(-1), 10000);
  CHECK(row.freeness.rfind("not_free", 0) == 0);
  SweepRow row2 = sweep_row("A", Rat(-2), 10000);
  CHECK(row2.freeness == "free {1,4,4}");
  CHECK(row2.kpi1 == "not_kpi1(simple_triangle)");
  std::string table = format_sweep_table("A", {row2});
  CHECK(table.find("free {1,4,4}") != std::string::npos);
}
