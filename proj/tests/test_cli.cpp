#include <doctest.h>

#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "f4tool");
  std::ostringstream out, err;
  const int status = f4::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli f-vector and branchings") {
  const Run f = run({"fvector", "1,0,0,1"});
  CHECK(f.status == 0);
  CHECK(f.out.find("N0=144 N1=576 N2=672 N3=240") != std::string::npos);
  const Run b = run({"branch-b4", "0,0,0,1"});
  CHECK(b.status == 0);
  CHECK(b.out.find("(0,1,0,0)_B4") != std::string::npos);
  const Run j = run({"branch-b3a1", "0,0,0,1", "--format", "json"});
  CHECK(j.status == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["slices"].size() == 2);
}

TEST_CASE("cli errors exit nonzero") {
  const Run zero = run({"orbit", "0,0,0,0"});
  CHECK(zero.status != 0);
  CHECK(zero.err.find("(0,0,0,0)") != std::string::npos);
  CHECK(run({"orbit", "1,nope,0,0"}).status != 0);
  CHECK(run({"orbit", "1,0,0"}).status != 0);
  CHECK(run({"frobnicate"}).status != 0);
  CHECK(run({}).status != 0);
  CHECK(run({"fvector", "1,0,0,1", "--format", "off"}).status != 0);
  CHECK(run({"export", "1,0,0,1", "-o", "/nonexistent-dir/x.off"}).status != 0);
}

TEST_CASE("cli output is deterministic") {
  const Run a = run({"export", "1,0,0,1"});
  const Run b = run({"export", "1,0,0,1"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("OFF\n10 8 16\n", 0) == 0);
  const Run d = run({"dual", "1,1,0,1", "--format", "json"});
  CHECK(d.status == 0);
  CHECK(d.out == run({"dual", "1,1,0,1", "--format", "json"}).out);
  const auto doc = nlohmann::json::parse(d.out);
  CHECK(doc["shells"].size() >= 1);
  const Run g = run({"export", "--object", "group", "--group", "WB3", "--format", "json"});
  CHECK(g.status == 0);
  CHECK(nlohmann::json::parse(g.out)["order"] == 48);
}

TEST_CASE("cli verify runs one report") {
  const Run v = run({"verify", "--criterion", "1"});
  CHECK(v.status == 0);
  CHECK(v.out.rfind("PASS [1]", 0) == 0);
  const Run j = run({"verify", "--criterion", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);
}
