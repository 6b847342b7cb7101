#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "besselsum/cli.hpp"

using namespace besselsum;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE(r.code == kExitOk);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("eval prints the closed-form value") {
  const Run r = run({"eval", "--series", "h0", "--s", "0.5", "--beta", "0.5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0.515763427613875") != std::string::npos);
  const auto j = run_json({"eval", "--series", "h0", "--s", "0.5", "--beta", "0.5"});
  const double exact = (std::sqrt(M_PI) / 2.0) / (std::exp(1.0) - 1.0);
  CHECK(std::abs(j["result"]["value"].get<double>() - exact) < 1e-12);
  CHECK(j["request"]["series"] == "h0");
  CHECK(j["result"].contains("error_estimate"));
  CHECK(j["result"].contains("method"));
}

TEST_CASE("JSON output is byte-identical across runs") {
  const std::vector<std::string> args = {"compare", "--series", "f",    "--model", "hurwitz:0.3", "--s",
                                         "0.4",     "--beta",   "0.1",  "--B",     "0.3",         "--format",
                                         "json"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"request\"") < a.out.find("\"result\""));
}

TEST_CASE("compare reports the order-scaling test") {
  const auto j = run_json({"compare", "--series", "g", "--d", "1", "--s", "0.7", "--beta", "0.1", "--order", "6"});
  const auto& r = j["result"];
  for (const char* key : {"direct", "expansion", "abs_diff", "remainder_power", "ratio_test"}) {
    CHECK(r.contains(key));
  }
  CHECK(r["ratio_test"] == "pass");
  // the circle expansion terminates; at beta = 1 the exponentially small
  // remainder is visible and the check fails with exit code 3
  const Run bad = run({"compare", "--series", "f", "--model", "circle", "--s", "0.5", "--B", "0.3", "--beta",
                       "1", "--order", "4"});
  CHECK(bad.code == kExitTolerance);
}

TEST_CASE("expand lists terms") {
  const auto j = run_json({"expand", "--series", "h0", "--s", "-0.5", "--order", "4"});
  const auto& terms = j["result"]["terms"];
  REQUIRE(terms.is_array());
  bool found = false;
  for (const auto& t : terms) {
    if (t["power"].get<double>() == -1.0) {
      found = true;
      CHECK(std::abs(t["log_coeff"].get<double>() + std::sqrt(M_PI) / 2.0) < 1e-14);
    }
  }
  CHECK(found);
  CHECK(j["result"]["case_tag"] == "neg_half");
  const Run csv = run({"expand", "--series", "h0", "--s", "-0.5", "--order", "4", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("power,const_coeff,log_coeff\n", 0) == 0);
  CHECK(csv.out.find("\n-1,") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
  const Run ok = run({"oracle", "--series", "h0", "--s", "0.3", "--beta", "0.8"});
  CHECK(ok.code == kExitOk);
  const Run tight = run({"oracle", "--series", "h0", "--s", "0.3", "--beta", "0.8", "--agree-tol", "1e-30"});
  CHECK(tight.code == kExitTolerance);
  const Run bad_c = run({"oracle", "--series", "h0", "--s", "0.3", "--beta", "0.8", "--c", "0.2"});
  CHECK(bad_c.code == kExitDomain);
}

TEST_CASE("casimir and mass subcommands") {
  const auto c = run_json({"casimir", "--D", "1", "--model", "torus:1", "--beta", "0.3", "--L", "2"});
  CHECK(c["result"]["pole_coeff"].get<double>() == 0.0);
  CHECK(c["result"].contains("finite_part"));
  CHECK(c["result"].contains("force"));
  const Run bad = run({"casimir", "--D", "1", "--model", "torus:1", "--beta", "3", "--L", "2"});
  CHECK(bad.code == kExitDomain);
  const auto m = run_json({"mass", "--m", "0.1", "--D", "3", "--order", "2"});
  CHECK(std::abs(m["result"]["value"].get<double>() - m["result"]["expansion"].get<double>()) < 1e-6);
}

TEST_CASE("models subcommand") {
  CHECK(run({"models"}).code == kExitOk);
  const auto j = run_json({"models", "--model", "torus:2"});
  CHECK(j["result"]["dim"] == 2);
  CHECK(run({"models", "--model", "sphere"}).code == kExitDomain);
  const std::string path = "besselsum_cli_model.txt";
  {
    std::ofstream f(path);
    f << "D 1\nalpha 1\nalpha 2\nA 0 0.88\nwidth 3\n";
  }
  CHECK(run({"models", "--model", "table:" + path}).code == kExitDomain);
  {
    std::ofstream f(path);
    f << "D 1\nalpha 1\nalpha 2\nA 0 0.88\n";
  }
  CHECK(run({"models", "--model", "table:" + path}).code == kExitOk);
  std::remove(path.c_str());
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"eval", "--s", "0.5", "--beta", "1"}).code == kExitUsage);
  CHECK(run({"eval", "--series", "h0", "--s", "x", "--beta", "1"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"eval", "--series", "h0", "--s", "0.5", "--beta", "1", "--format", "xml"}).code == kExitUsage);
  const Run unknown = run({"eval", "--series", "q", "--s", "0.5", "--beta", "1"});
  CHECK(unknown.code == kExitDomain);
  CHECK(!unknown.err.empty());
  CHECK(run({"eval", "--series", "h0", "--s", "0.5", "--beta", "-1"}).code == kExitDomain);
  CHECK(run({"eval", "--series", "f", "--s", "0.5", "--beta", "1"}).code == kExitDomain);
}

TEST_CASE("BESSELSUM_TOL") {
  ::unsetenv("BESSELSUM_TOL");
  CHECK(default_tolerance() == 1e-12);
  ::setenv("BESSELSUM_TOL", "1e-6", 1);
  CHECK(default_tolerance() == 1e-6);
  const auto j = run_json({"eval", "--series", "h0", "--s", "0.5", "--beta", "0.5"});
  CHECK(j["result"]["error_estimate"].get<double>() <= 1e-6);
  ::setenv("BESSELSUM_TOL", "abc", 1);
  CHECK(run({"eval", "--series", "h0", "--s", "0.5", "--beta", "0.5"}).code == kExitDomain);
  ::setenv("BESSELSUM_TOL", "-1", 1);
  CHECK(run({"eval", "--series", "h0", "--s", "0.5", "--beta", "0.5"}).code == kExitDomain);
  ::unsetenv("BESSELSUM_TOL");
}
