#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hankel/json_io.hpp"
#include "hankel/sequences.hpp"

using namespace hankel;
using hankel::test::qs;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("hankel_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const char* kSchroederCoeffs = R"({"s_prefix":["2"],"s_tail":"3","t_prefix":[],"t_tail":"2"})";

}  // namespace

TEST_CASE("verify-theorem1") {
  const std::string coeffs = write_temp("coeffs.json", kSchroederCoeffs);
  const Result r = run({"verify-theorem1", "--coeffs", coeffs, "--points", "1,2,5/2", "--n", "4"});
  REQUIRE(r.code == 0);
  const Json doc = r.json();
  CHECK(doc["equal"] == true);
  CHECK(doc["n"] == 4);
  CHECK(doc["d"] == 3);
  CHECK(doc["base_det"] == "64");
  CHECK(doc["first_failing_n"].is_null());
  CHECK(doc["seed"].is_null());

  SUBCASE("repeated points use the confluent form") {
    const Result c = run({"verify-theorem1", "--sequence", "motzkin", "--points", "1/2,1/2,-1", "--n", "3"});
    CHECK(c.code == 0);
    CHECK(c.json()["equal"] == true);
  }
}

TEST_CASE("a corrupted moment is pinpointed") {
  std::vector<Rational> moments = moments_from_coeffs(RecurrenceCoeffs({2}, 3, {}, 2), 12).values;
  moments[6] += 1;
  Json doc = Json::parse(kSchroederCoeffs);
  doc["moments"] = to_json(moments);
  const std::string coeffs = write_temp("corrupt.json", doc.dump());
  const Result r = run({"verify-theorem1", "--coeffs", coeffs, "--points", "1,2", "--n", "5"});
  CHECK(r.code == 1);
  // mu_6 first appears at size n with 2n - 2 + 2 >= 6.
  CHECK(r.json()["first_failing_n"] == 3);
  CHECK(r.json()["equal"] == false);
  CHECK(r.json()["moment_source"] == "user-supplied");
}

TEST_CASE("hankel") {
  const Result r = run({"hankel", "--sequence", "motzkin", "--shift", "0", "--n", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["value"] == "1");
  CHECK(run({"hankel", "--sequence", "schroeder_large", "--n", "3"}).json()["value"] == "8");
  CHECK(run({"hankel", "--sequence", "motzkin", "--shift", "1", "--n", "2"}).json()["value"] == "0");
  CHECK(run({"hankel", "--sequence", "catalan", "--lambda", "1,1", "--n", "4"}).json()["value"] == "34");
}

TEST_CASE("recurrence") {
  const Result r = run({"recurrence", "--sequence", "catalan", "--lambda", "3,1"});
  REQUIRE(r.code == 0);
  const Json doc = r.json();
  CHECK(doc["order"] == 2);
  CHECK(doc["c"] == Json::array({"1", "-5", "1"}));
  CHECK(doc["validity_start"] == 2);
  CHECK(doc["window_rule"] == "remark2a");
  CHECK(doc["verified"] == true);
  CHECK(doc["fit_matches"] == true);
  CHECK(recurrence_spec_from_json(doc).c == qs("1,-5,1"));
}

TEST_CASE("heine") {
  const std::string measure = write_temp("measure.json", R"({"atoms":[{"x":"1","w":"1/2"},{"x":"-2","w":"3"},{"x":"0","w":"1"}]})");
  const Result r = run({"heine", "--measure", measure, "--points", "1,3", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["equal"] == true);
  CHECK(r.json()["twisted"]["atoms"].size() == 2);
  const std::string dup = write_temp("dup.json", R"({"atoms":[{"x":"1","w":"1"},{"x":"1","w":"2"}]})");
  CHECK(run({"heine", "--measure", dup, "--n", "1"}).code == 2);
}

TEST_CASE("sequences and bench") {
  const Result all = run({"sequences"});
  REQUIRE(all.code == 0);
  CHECK(all.json().size() == registry().size());
  const Result one = run({"sequences", "--sequence", "fine", "--n", "6"});
  CHECK(one.json()["terms"] == Json::array({"1", "0", "1", "2", "6", "18"}));
  CHECK(one.json()["params_provenance"] == "DERIVED");
  const Result bench = run({"bench", "--n", "12"});
  REQUIRE(bench.code == 0);
  CHECK(bench.json()["agree"] == true);
  CHECK(bench.json()["value"] == "73786976294838206464");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hankel", "--sequence", "motzkin", "--unknown", "1"}).code == 2);
  CHECK(run({"hankel", "--sequence", "nope", "--n", "2"}).code == 2);
  CHECK(run({"verify-theorem1", "--sequence", "motzkin", "--points", "1/0"}).code == 2);
  const Result bad = run({"verify-theorem1", "--coeffs", write_temp("bad.json", "{\"s_tail\": "), "--points", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("malformed JSON") != std::string::npos);
  CHECK(run({"verify-theorem1", "--coeffs", "/nonexistent/file.json", "--points", "1"}).code == 2);
  CHECK(run({"recurrence", "--sequence", "motzkin", "--lambda", "1,2"}).code == 2);
}

TEST_CASE("seeded runs are reproducible and echo the seed") {
  const Result a = run({"verify-theorem1", "--seed", "77", "--n", "3"});
  const Result b = run({"verify-theorem1", "--seed", "77", "--n", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["seed"] == 77);
  CHECK(run({"recurrence", "--seed", "5"}).json()["seed"] == 5);
}

TEST_CASE("pretty output is a table") {
  const Result r = run({"hankel", "--sequence", "motzkin", "--n", "3", "--pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value") != std::string::npos);
  CHECK_FALSE(Json::accept(r.out));
}

TEST_CASE("emitted documents round-trip") {
  const Json report = run({"verify-theorem1", "--sequence", "schroeder_large", "--points", "1,-1/2", "--n", "3"}).json();
  const IdentityReport parsed = identity_report_from_json(report);
  Json again = to_json(parsed);
  for (const auto& [k, v] : again.items()) CHECK(report[k] == v);

  const Json spec = run({"recurrence", "--sequence", "motzkin", "--points", "1,2"}).json();
  const Json spec_again = to_json(recurrence_spec_from_json(spec));
  for (const auto& [k, v] : spec_again.items()) CHECK(spec[k] == v);

  const RecurrenceCoeffs c({Rational(1, 3)}, -2, {Rational(5, 7)}, 4);
  CHECK(coeffs_from_json(Json::parse(to_json(c).dump())) == c);
  const DiscreteMeasure m{{{Rational(1, 2), Rational(-3)}, {Rational(2), Rational(1, 9)}}};
  CHECK(measure_from_json(Json::parse(to_json(m).dump())) == m);
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK_THROWS(static_cast<void>(rational_from_json(Json(1.5))));
}
