#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ggp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Column `index` of every data row.
std::vector<std::string> column(const std::string& csv, std::size_t index) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> out;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (std::size_t i = 0; i <= index; ++i) std::getline(cells, cell, ',');
    out.push_back(cell);
  }
  return out;
}

using V = std::vector<std::string>;

}  // namespace

TEST_CASE("sequences") {
  auto r = run({"sequences", "--which", "singletons", "--max", "7"});
  CHECK(r.code == 0);
  CHECK(column(r.out, 2) == V{"1", "4", "21", "144", "1245", "13140", "164745"});
  r = run({"sequences", "--which", "connected", "--max", "5"});
  CHECK(column(r.out, 2) == V{"1", "1", "4", "27", "248"});
  r = run({"sequences", "--which", "pairings", "--max", "4"});
  CHECK(r.out == "n,points,value,check,agree\n1,2,1,1,true\n2,4,3,3,true\n3,6,15,15,true\n4,8,105,105,true\n");
  r = run({"sequences", "--which", "catalan", "--max", "5"});
  CHECK(column(r.out, 2) == V{"1", "2", "5", "14", "42"});
  r = run({"sequences", "--which", "moments", "--max", "3"});
  CHECK(column(r.out, 2) == V{"2", "9", "56"});

  CHECK(run({"sequences", "--which", "pairings", "--max", "9"}).code == 2);
  CHECK(run({"sequences", "--which", "pairings", "--max", "0"}).code == 2);
  CHECK(run({"sequences", "--which", "primes", "--max", "3"}).code == 2);
  CHECK(run({"sequences", "--which", "pairings"}).code == 2);
}

TEST_CASE("moments") {
  auto r = run({"moments", "--weight", "betah", "--param", "2", "--N", "3"});
  CHECK(r.code == 0);
  CHECK(column(r.out, 2) == V{"2", "9", "56"});
  r = run({"moments", "--weight", "const", "--N", "4", "--mix", "0"});
  CHECK(r.code == 0);
  CHECK(column(r.out, 5) == V{"1", "2", "5", "14"});
  r = run({"moments", "--weight", "const", "--N", "2", "--mix", "0.5"});
  CHECK(column(r.out, 5) == V{"1", "9/4"});
  CHECK(column(r.out, 6) == V{"1", "2.25"});
  CHECK(column(r.out, 8) == V{"true", "true"});

  r = run({"moments", "--weight", "qcr", "--param", "1/3", "--N", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][2]["moment"] == "199/27");  // 5 + 6q + 3q^2 + q^3
  CHECK(j["cumulants_reproduce_moments"] == true);

  CHECK(run({"moments", "--weight", "betah", "--param", "2", "--N", "2", "--mix", "0.5"}).code == 2);
  CHECK(run({"moments", "--weight", "const", "--N", "2", "--mix", "2"}).code == 2);
  CHECK(run({"moments", "--weight", "qcr", "--param", "x", "--N", "2"}).code == 2);
  CHECK(run({"moments", "--N", "9"}).code == 2);
  CHECK(run({"--max-n", "3", "moments", "--N", "4"}).code == 2);
  CHECK(run({"moments", "--N", "4", "--max-n", "4"}).code == 0);
}

TEST_CASE("randmat") {
  const V args = {"randmat", "--n", "2", "--trials", "1", "--kmax", "2", "--seed", "1"};
  const auto a = run(args);
  CHECK(a.code == 0);
  CHECK(a.out.rfind("k,mean,std_error,target,z,passed\n", 0) == 0);
  CHECK(run(args).out == a.out);
  CHECK(run({"randmat", "--n", "1"}).code == 2);
  CHECK(run({"randmat", "--dist", "cauchy"}).code == 2);
  CHECK(run({"randmat", "--seed", "-3"}).code == 2);

  const auto path = (std::filesystem::temp_directory_path() / "ggp_cli_hist.csv").string();
  const auto h = run({"randmat", "--n", "40", "--trials", "3", "--kmax", "4", "--histogram", path, "--bins", "8",
                      "--format", "json"});
  CHECK(h.code == 0);
  const auto j = nlohmann::json::parse(h.out);
  CHECK(j["config"]["n"] == 40);
  CHECK(j["moments"].size() == 4);
  CHECK(j["moments"][1]["target"] == 2.0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "bin_left,bin_right,count");
  long total = 0;
  for (std::string line; std::getline(in, line);) total += std::stol(line.substr(line.rfind(',') + 1));
  CHECK(total == 40);
  std::remove(path.c_str());
}

TEST_CASE("permcheck") {
  auto r = run({"permcheck", "--n", "4", "--b", "2", "--x", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("false") == std::string::npos);
  CHECK(run({"permcheck", "--n", "3"}).code == 0);
  r = run({"permcheck", "--n", "9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("cap") != std::string::npos);
  CHECK(run({"permcheck", "--n", "3", "--tol", "0"}).code == 2);
}

TEST_CASE("verify and general usage") {
  auto r = run({"verify", "--level", "quick"});
  CHECK(r.code == 0);
  CHECK(column(r.out, 0).size() == 11);
  CHECK(run({"verify"}).code == 2);

  r = run({});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"sequences", "--which", "pairings", "--max", "2", "--format", "xml"}).code == 2);

  const auto path = (std::filesystem::temp_directory_path() / "ggp_cli_out.json").string();
  r = run({"sequences", "--which", "pairings", "--max", "3", "--format", "json", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["values"] == nlohmann::json::array({"1", "3", "15"}));
  std::remove(path.c_str());
}
