#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "matgor/io.hpp"
#include "matgor/report.hpp"

using namespace matgor;
using nlohmann::json;

TEST_SUITE("cli-report") {
  TEST_CASE("every matroid JSON type") {
    auto b = matroid_from_json(json::parse(R"({"type":"bases","ground":["a","b","c"],"bases":[["a","b"],["a","c"],["b","c"]]})"));
    CHECK(b.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(b.bases().size() == 3);
    auto mx = matroid_from_json(json::parse(R"({"type":"matrix","field":{"p":3},"columns":[[1,0],[0,1],[1,1],[1,2]]})"));
    CHECK(mx.bases().size() == 6);
    auto f4 = matroid_from_json(json::parse(R"({"type":"matrix","field":{"p":2,"k":2},"columns":[[1,0],[0,1],[1,1],[1,2],[1,3]]})"));
    CHECK(f4.bases().size() == 10);
    auto f4m = matroid_from_json(json::parse(R"({"type":"matrix","field":{"p":2,"k":2,"modulus":[1,1,1]},"columns":[[1,0],[1,2]]})"));
    CHECK(f4m.rank() == 2);
    CHECK(matroid_from_json(json::parse(R"({"type":"pg","q":3,"n":2})")).size() == 4);
    CHECK(matroid_from_json(json::parse(R"({"type":"boolean","n":4})")).rank() == 4);
    CHECK(matroid_from_json(builtin_spec("fano")).bases().size() == 28);
    auto t = matroid_from_json(json::parse(R"({"type":"truncation","i":2,"of":{"type":"boolean","n":4}})"));
    CHECK(t.bases().size() == 6);
    auto ds = matroid_from_json(json::parse(R"({"type":"direct_sum","parts":[{"type":"pg","q":2,"n":2},{"type":"boolean","n":1}]})"));
    CHECK(ds.size() == 4);
    CHECK(ds.rank() == 3);
  }

  TEST_CASE("invalid specs") {
    auto bad = [](const char* s) { return matroid_from_json(json::parse(s)); };
    CHECK_THROWS_AS(bad(R"({"type":"bases","ground":[1,2],"bases":[]})"), InputError);
    CHECK_THROWS_AS(bad(R"({"type":"bases","ground":[1,2],"bases":[[3]]})"), InputError);
    CHECK_THROWS_AS(bad(R"({"type":"bases","ground":[1,1],"bases":[[1]]})"), InputError);
    CHECK_THROWS_AS(bad(R"({"type":"matrix","field":{"p":4},"columns":[[1]]})"), InputError);
    CHECK_THROWS_AS(bad(R"({"type":"matrix","field":{"p":2},"columns":[[1,0],[1]]})"), InputError);
    CHECK_THROWS_AS(bad(R"({"type":"pg","q":2})"), InputError);
    CHECK_THROWS_AS(bad(R"({"type":"widget"})"), InputError);
    CHECK_THROWS_AS(bad(R"([1,2])"), InputError);
    CHECK_THROWS_AS(bad(R"({"type":"truncation","i":5,"of":{"type":"boolean","n":4}})"), InputError);
    CHECK_THROWS_AS(bad(R"({"type":"plane","lines":[[1,2,3],[1,4,5],[2,4,6]]})"), InputError);
    CHECK_THROWS_AS(builtin_spec("m99"), InputError);
    CHECK_THROWS_AS(builtin_spec("boolean:x"), InputError);
    CHECK_THROWS_AS(load_matroid("/nonexistent/matroid.json"), InputError);
  }

  TEST_CASE("canonical JSON round trip") {
    auto m = builtin_matroid("fivevec");
    json j = matroid_to_json(m);
    CHECK(j["type"] == "bases");
    CHECK(j["ground"] == json::parse("[1,2,3,4,5]"));
    CHECK(j["bases"].size() == 8);
    CHECK(j["bases"][0] == json::parse("[1,2,3]"));
    auto back = matroid_from_json(j);
    CHECK(back.bases() == m.bases());
    CHECK(label_json("12") == 12);
    CHECK(label_json("a1") == "a1");
    const std::string path = "matgor_roundtrip_test.json";
    std::ofstream(path) << j.dump();
    CHECK(load_matroid(path).bases() == m.bases());
    std::remove(path.c_str());
  }

  TEST_CASE("expectations recognize instances") {
    CHECK(expectations_for(builtin_matroid("m22"), builtin_spec("m22")).instance == "M(2,2)");
    CHECK(expectations_for(builtin_matroid("fivevec"), builtin_spec("fivevec")).instance == "5-vector");
    auto relabeled = json::parse(R"({"type":"bases","ground":[1,2,3],"bases":[[1,2],[1,3],[2,3]]})");
    CHECK(expectations_for(matroid_from_json(relabeled), relabeled).instance == "M(2,2) (relabeled)");
    CHECK(expectations_for(builtin_matroid("boolean:3"), builtin_spec("boolean:3")).instance == "boolean(3)");
    CHECK(expectations_for(uniform_matroid(2, 4), json::object()).instance == "M(3,2) (relabeled)");
    CHECK(expectations_for(uniform_matroid(2, 5), json::object()).instance.empty());
    CHECK(q_binomials(2, 3) == std::vector<long>{1, 7, 7, 1});
    CHECK(q_binomials(3, 4) == std::vector<long>{1, 40, 130, 40, 1});
  }

  TEST_CASE("check results carry verdicts") {
    CheckResult r;
    r.data["x"] = 1;
    r.expect("x", 1);
    CHECK(r.pass());
    r.expect("y", 2);
    CHECK_FALSE(r.pass());
    json f = r.flat();
    CHECK(f["verdict"] == "fail");
    CHECK(f["paper-expected"]["x"] == 1);
    json t = r.tagged();
    CHECK(t["computed"]["x"] == 1);
    r = CheckResult{};
    r.cross_check("holds", true);
    CHECK(r.pass());
    r.cross_check("does not hold", false);
    CHECK(r.failures.size() == 1);
  }

  TEST_CASE("five-vector checks") {
    auto m = builtin_matroid("fivevec");
    auto e = expectations_for(m, builtin_spec("fivevec"));
    RunOptions o;
    o.samples = 5;
    o.trials = 20;
    auto alg = check_algebra(m, e);
    CHECK(alg.pass());
    CHECK(alg.data["ann_equals_jm"] == false);
    auto lat = check_lattice(m, e);
    CHECK(lat.pass());
    CHECK(lat.data["modular"] == false);
    auto sp = check_sperner(m, "both", o, e);
    CHECK(sp.pass());
    CHECK(sp.data["sperner"] == true);
    auto lef = check_lefschetz(m, std::nullopt, "both", "ann", e);
    CHECK(lef.pass());
    auto fan = check_fan(m, "ann", o, e);
    CHECK(fan.pass());
    CHECK(fan.data["refines_jm"] == true);
    CHECK_THROWS_AS(check_fan(m, "bogus", o, e), InputError);
    CHECK(check_axioms(m).pass());
  }

  TEST_CASE("report-all on M(2,2)") {
    auto spec = builtin_spec("m22");
    RunOptions o;
    o.samples = 5;
    o.trials = 20;
    bool pass = false;
    json rep = report_all(matroid_from_json(spec), spec, o, pass);
    CHECK(pass);
    CHECK(rep["verdict"] == "pass");
    CHECK(rep["schema"] == kReportSchema);
    CHECK(rep["failed_checks"].empty());
    CHECK_FALSE(rep.contains("timings_ms"));
    CHECK(rep["checks"]["algebra"]["computed"]["hilbert_ann"] == json::parse("[1,3,1]"));
    CHECK(rep["checks"]["algebra"]["paper-expected"]["hilbert_ann"] == json::parse("[1,3,1]"));
    json again = report_all(matroid_from_json(spec), spec, o, pass);
    CHECK(again == rep);
  }
}
