#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "euler-pencil");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ep::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream is(text);
  std::string l;
  while (std::getline(is, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("golden: canonical match at p = 3") {
  auto r = cli({"match", "--ap", "0", "--p", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "w_exact,2/3*sqrt(3)"));
  CHECK(has_line(r.out, "w,1.15470053838"));
  CHECK(has_line(r.out, "u,1.07456993182"));
  CHECK(has_line(r.out, "lambda,1.2408064788"));
  CHECK(has_line(r.out, "tr,0"));
  CHECK(has_line(r.out, "det,3"));
  CHECK(has_line(r.out, "P,0.38490017946"));
  CHECK(has_line(r.out, "P_exact,2/9*sqrt(3)"));
  CHECK(has_line(r.out, "offshell_distance,0.178632794954"));
  CHECK(has_line(r.out, "status,PASS"));
}

TEST_CASE("golden: canonical match at p = 5") {
  auto r = cli({"match", "--ap", "-4", "--p", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "w_exact,-2/5 + 1/5*sqrt(26)"));
  CHECK(has_line(r.out, "w,0.619803902719"));
  CHECK(has_line(r.out, "u,0.787276255655"));
  CHECK(has_line(r.out, "lambda,0.802867398035"));
  CHECK(has_line(r.out, "tr_exact,-4"));
  CHECK(has_line(r.out, "det_exact,5"));
  CHECK(has_line(r.out, "P,0.123960780544"));
  CHECK(has_line(r.out, "euler_factor,1 + (4)T + 5T^2"));
}

TEST_CASE("golden: canonical match at p = 13 from the catalogue curve") {
  auto r = cli({"match", "--curve", "256b2", "--p", "13", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "w_exact,-2/13 + 1/13*sqrt(178)"));
  CHECK(has_line(r.out, "w,0.87243569724"));
  CHECK(has_line(r.out, "u,0.934042663501"));
  CHECK(has_line(r.out, "lambda,0.958591033692"));
  CHECK(has_line(r.out, "tr_exact,-4"));
  CHECK(has_line(r.out, "det_exact,13"));
}

TEST_CASE("output is deterministic") {
  auto a = cli({"match", "--curve", "27a3", "--pencil", "-9,-1,20.35", "--max-p", "31", "--format", "json"});
  auto b = cli({"match", "--curve", "27a3", "--pencil", "-9,-1,20.35", "--max-p", "31", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == "euler-pencil/1");
  CHECK(j["rows"].size() == 10);
  CHECK(j["rows"][0]["p"] == 2);
}

TEST_CASE("ap table and exact j") {
  auto r = cli({"ap", "--curve", "256b2", "--max-p", "50", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "p,a_p,good"));
  CHECK(has_line(r.out, "5,-4,true"));
  CHECK(has_line(r.out, "37,12,true"));
  CHECK(has_line(r.out, "41,-10,true"));
  CHECK(has_line(r.out, "2,0,false"));
  auto j = cli({"j", "--tau", "2", "--delta", "0", "--Delta", "2", "--format", "csv"});
  CHECK(has_line(j.out, "j,1728"));
}

TEST_CASE("every command honours --format and --tol") {
  const std::vector<std::vector<std::string>> invocations{
      {"ap", "--curve", "32a2", "--max-p", "20"},
      {"good-primes", "--model", "0,0,0,8,0", "--max-p", "30"},
      {"hasse", "--ap", "3", "--p", "5"},
      {"cornacchia", "--p", "13"},
      {"quartic", "--coeffs", "-1,0,0,0,2"},
      {"legendre-j", "--lambda", "1/4"},
      {"curve-j", "--curve", "48a1"},
      {"pencil", "--pencil", "2,0,2", "--u", "1.2", "--lambda", "0.3+0.1i"},
      {"spectral-poly", "--zco"},
      {"eta-gram", "--zco", "--E", "2"},
      {"evenness", "--pencil", "1,1/2,3"},
      {"pontryagin", "--pencil", "2,0,2"},
      {"monomial-gram"},
      {"j", "--tau-sq", "45/11", "--delta", "1", "--Delta", "1"},
      {"j1728-q", "--tau-sq", "45/11", "--delta", "1", "--Delta", "1"},
      {"basepoint", "--canonical", "--ap", "-4", "--p", "5"},
      {"match", "--ap", "0", "--p", "3"},
      {"reduce-check", "--ap", "-4", "--p", "5"},
      {"disc-identity", "--ap", "-4", "--p", "5"},
      {"d-off", "--w", "1", "--p", "7"},
      {"cd-ratio", "--ap", "0", "--p", "3"},
      {"tco", "--ap", "-2", "--p", "5"},
      {"zco"},
      {"zco-c", "--c", "7/3", "--u", "0.3+0.4i"},
      {"golden"},
      {"obstruction", "--curve", "256b2"},
      {"universality", "--z", "0.5+0.1i"},
      {"arcsine", "--t", "0.2"},
      {"chi4-L", "--s", "1", "--n", "7"},
      {"eta-feq", "--s", "0.5"},
      {"delta-series", "--curve", "256b2", "--X", "200"},
      {"sato-tate", "--curve", "256b2", "--X", "500"},
      {"bulk", "--curve", "256b2", "--X", "500"},
      {"accumulate", "--curve", "32a2", "--X-list", "100,500"},
      {"catalogue"},
      {"verify-all", "--criterion", "9"},
  };
  CHECK(invocations.size() == 36);
  for (auto args : invocations) {
    for (const char* fmt : {"table", "json", "csv"}) {
      auto a = args;
      a.insert(a.end(), {"--format", fmt, "--tol", "1e-9"});
      auto r = cli(a);
      INFO(args[0], " ", fmt, " ", r.err);
      CHECK(r.code == 0);
      CHECK_FALSE(r.out.empty());
      if (std::string(fmt) == "json") {
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["schema"] == "euler-pencil/1");
        CHECK(j["command"] == args[0]);
        CHECK(j["tolerance"] == 1e-9);
      }
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(cli({"hasse", "--ap", "5", "--p", "5"}).code == 1);
  CHECK(cli({"eta-feq", "--s", "0.3"}).code == 1);
  CHECK(cli({"verify-all", "--criterion", "13"}).code == 1);
  CHECK(cli({"verify-all", "--criterion", "1"}).code == 0);
  auto bad = cli({"match", "--ap", "x", "--p", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--ap") != std::string::npos);
  auto pen = cli({"pencil", "--pencil", "1,2"});
  CHECK(pen.code == 2);
  CHECK(pen.err.find("--pencil") != std::string::npos);
  CHECK(cli({"match", "--ap", "0", "--p", "4"}).code == 2);
  CHECK(cli({"ap", "--curve", "49a1"}).code == 2);
  CHECK(cli({"ap", "--curve", "nope"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"ap", "--curve", "256b2", "--format", "xml"}).code == 2);
  CHECK(cli({"match", "--ap", "9", "--p", "5"}).code == 2);
}

TEST_CASE("eta-feq at the symmetric point and off it") {
  auto r = cli({"eta-feq", "--s", "0.7", "--format", "csv"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "residual,2.28965261403"));
}
