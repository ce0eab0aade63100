#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = qhurwitz::cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("hurwitz subcommands") {
  auto j = run_json({"hurwitz", "quantum", "--mu", "2", "--d", "1"});
  CHECK(j["schema"] == 1);
  CHECK(j["value"] == "1/(2 - 2*q)");
  CHECK(run_json({"hurwitz", "quantum", "--mu", "1,1", "--d", "1"})["value"] == "0");
  CHECK(run_json({"hurwitz", "pure", "--profiles", "2;2"})["value"] == "1/2");
  CHECK(run_json({"hurwitz", "pure", "--profiles", "2;2", "--flag", "method=bruteforce"})["value"] == "1/2");
  auto all = run_json({"hurwitz", "quantum", "--nmax", "2", "--dmax", "1"});
  CHECK(all["values"].size() == 4);
  auto c = run({"hurwitz", "quantum", "--mu", "2", "--d", "1", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("mu,d,value,method\n", 0) == 0);
}

TEST_CASE("tau subcommands") {
  auto j = run_json({"tau", "coeffs", "--nmax", "2", "--order", "3"});
  CHECK(j["schema"] == 1);
  bool found = false;
  for (const auto& e : j["coeffs"])
    if (e["mu"] == "2") {
      found = true;
      CHECK(e["beta_series"][3] == "1/(2 - 2*q)");
    }
  CHECK(found);
  auto v = run_json({"tau", "eval", "--x", "0"});
  CHECK(v["value"].get<std::string>().rfind("1", 0) == 0);
  auto w = run_json({"tau", "eval", "--x", "0.1,0.2", "--nmax", "30"});
  CHECK(w["value"].get<std::string>().rfind("0.91351004693910327", 0) == 0);
}

TEST_CASE("phi subcommands") {
  auto j = run_json({"phi", "eval", "--k", "1", "--x", "0.5"});
  CHECK(j["schema"] == 1);
  CHECK(j["terms_used"].get<int>() > 0);
  auto c = run({"phi", "eval", "--k", "1", "--x", "0.5", "--format", "csv"});
  CHECK(c.code == 0);
  auto bad = run({"phi", "eval", "--k", "2", "--x", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("SingularPoint") != std::string::npos);
}

TEST_CASE("determinism and output file") {
  std::vector<std::string> a = {"tau", "coeffs", "--nmax", "3", "--order", "5"};
  CHECK(run(a).out == run(a).out);
  std::string path = "test_cli_out.json";
  auto r = run({"hurwitz", "pure", "--profiles", "2;2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"hurwitz"}).code == 2);
  CHECK(run({"hurwitz", "quantum"}).code == 2);
  CHECK(run({"hurwitz", "quantum", "--mu", "2", "--flag", "nokey"}).code == 2);
  CHECK(run({"tau", "coeffs", "--flag", "beta-grading=other"}).code == 2);
  CHECK(run({"tau", "eval", "--x", "0.1", "--q", "2"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"tau", "eval", "--x", "0.1", "--format", "xml"}).code == 2);
}

TEST_CASE("verify reports failures with a witness") {
  auto r = run({"verify", "--suite", "exact", "--flag", "beta-grading=literal"});
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["passed"] == false);
  CHECK(j["calibration"]["beta-grading"] == "beta^d");
  bool witnessed = false;
  for (const auto& c : j["checks"])
    if (c["id"] == "C2") {
      CHECK(c["passed"] == false);
      witnessed = c["witness"].get<std::string>().rfind("mu=1", 0) == 0;
    }
  CHECK(witnessed);
  CHECK(r.err.find("C2 failed") != std::string::npos);
}
