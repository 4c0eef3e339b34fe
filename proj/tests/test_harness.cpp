#include <fstream>
#include <sstream>

#include "doctest.h"
#include "replika/errors.hpp"
#include "replika/harness.hpp"

using namespace replika;
using namespace replika::harness;
using nlohmann::json;

namespace {

std::string quiver(const std::string& name) { return std::string(REPLIKA_QUIVER_DIR) + "/" + name + ".quiver"; }

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "replika");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& cmd, const std::string& q, int m) {
  RunConfig c;
  c.command = cmd;
  c.quiver_path = quiver(q);
  c.m = m;
  return c;
}

}  // namespace

TEST_CASE("build summaries") {
  auto r = execute(config("build", "a3", 1)).report;
  CHECK(r["dim"] == 18);
  CHECK(r["simples"] == 6);
  CHECK(r["gldim"] == 3);
  r = execute(config("build", "a3", 2)).report;
  CHECK(r["dim"] == 30);
  CHECK(r["simples"] == 9);
  r = execute(config("build", "a3", 0)).report;
  CHECK(r["gldim"] == 1);
  // dim A^(m) = (2m + 1) dim A
  for (const char* q : {"a3", "a4", "a3s", "d4", "kronecker"}) {
    int base = execute(config("build", q, 0)).report["dim"];
    for (int m = 1; m <= 2; ++m) CHECK(execute(config("build", q, m)).report["dim"] == (2 * m + 1) * base);
  }
}

TEST_CASE("exit codes") {
  CHECK(cli({"build", "--quiver", quiver("a3"), "--m", "1"}).code == 0);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"build", "--quiver", "/nonexistent.quiver"}).code == 2);
  CHECK(cli({"build", "--quiver", quiver("a3"), "--prime", "100"}).code == 2);
  CHECK(cli({"enumerate", "--quiver", quiver("kronecker"), "--m", "1"}).code == 2);
  CHECK(cli({"verify", "--quiver", quiver("a3"), "--target", "nothing"}).code == 2);
  CHECK(cli({"verify", "--quiver", quiver("a3"), "--m", "1", "--target", "cor38"}).code == 0);
  CHECK(cli({"verify", "--quiver", quiver("a3"), "--m", "1", "--target", "thm42"}).code == 1);
  CHECK(cli({"mutate", "--quiver", quiver("a3"), "--m", "1", "--tilting-id", "0000000000000000"}).code == 2);

  const std::string bad = "/tmp/replika_bad.quiver";
  {
    std::ofstream f(bad);
    f << "quiver X\nvertices 2\narrow a 1\n";
  }
  auto r = cli({"build", "--quiver", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("output formats") {
  auto text = cli({"build", "--quiver", quiver("a3"), "--m", "1", "--out", "text"});
  CHECK(text.out.find("gldim: 3") != std::string::npos);
  auto dot = cli({"enumerate", "--quiver", quiver("a3"), "--m", "1", "--pd-bound", "1", "--out", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph mutation {", 0) == 0);
  CHECK(cli({"build", "--quiver", quiver("a3"), "--out", "dot"}).code == 2);
  auto cl = cli({"cluster", "--quiver", quiver("a3"), "--m", "1", "--out", "dot"});
  CHECK(cl.out.rfind("graph exchange", 0) == 0);
}

TEST_CASE("enumerate matches the cluster count") {
  auto cfg = config("enumerate", "a3", 1);
  cfg.pd_bound = 1;
  auto o = execute(cfg);
  CHECK(o.pass);
  CHECK(o.report["count"] == 14);
  CHECK(o.report["cluster_count"] == 14);
  CHECK(o.report["graph"]["connected"] == true);
  CHECK(execute(config("cluster", "a3", 1)).report["count"] == 14);
}

TEST_CASE("mutate round trip and chain ends") {
  auto cfg = config("enumerate", "a3", 1);
  cfg.pd_bound = 1;
  auto nodes = execute(cfg).report["tilting"];
  int moved = 0, ends = 0;
  for (const auto& node : nodes) {
    const std::string id = node["id"];
    for (int k = 0; k < static_cast<int>(node["summands"].size()); ++k) {
      if (node["summands"][k].contains("projective_injective")) continue;
      for (const char* dir : {"up", "down"}) {
        auto mc = config("mutate", "a3", 1);
        mc.tilting_id = id;
        mc.summand = k;
        mc.direction = dir;
        auto o = execute(mc);
        if (o.report.contains("error")) {
          ++ends;
          CHECK_FALSE(o.pass);
          CHECK(o.report["error"]["kind"] == (std::string(dir) == "up" ? "SinkEnd" : "BongartzEnd"));
          continue;
        }
        ++moved;
        CHECK(o.pass);
        CHECK(o.report["exact"] == true);
        auto back = config("mutate", "a3", 1);
        back.tilting_id = o.report["to"];
        back.summand = o.report["new_summand_index"];
        back.direction = std::string(dir) == "up" ? "down" : "up";
        auto b = execute(back);
        CHECK(b.report["to"] == id);
      }
    }
  }
  CHECK(moved > 0);
  CHECK(ends > 0);
}

TEST_CASE("sequence dump survives a round trip through text") {
  auto cfg = config("enumerate", "a3", 1);
  auto nodes = execute(cfg).report["tilting"];
  for (const auto& node : nodes) {
    auto mc = config("mutate", "a3", 1);
    mc.tilting_id = node["id"];
    mc.summand = 0;
    auto o = execute(mc);
    if (!o.report.contains("sequence")) continue;
    auto dump = json::parse(o.report["sequence"].dump());
    CHECK(check_sequence(Quiver::linear_a(3), 1, kDefaultPrime, dump));
    // break g o f
    auto broken = dump;
    broken["g"]["matrix"][0][0] = broken["g"]["matrix"][0][0].get<long long>() + 1;
    bool ok = true;
    try {
      ok = check_sequence(Quiver::linear_a(3), 1, kDefaultPrime, broken);
    } catch (const Error&) {
      ok = false;
    }
    CHECK_FALSE(ok);
    break;
  }
}

TEST_CASE("determinism and two primes") {
  auto cfg = config("verify", "a3", 1);
  cfg.target = "thm34";
  cfg.seed = 5;
  CHECK(execute(cfg).report.dump() == execute(cfg).report.dump());
  cfg.target = "lemma31";
  cfg.samples = 10;
  CHECK(execute(cfg).report.dump() == execute(cfg).report.dump());
  auto e = config("enumerate", "a3", 2);
  e.prime = kSecondPrime;
  e.crosscheck = kDefaultPrime;
  auto o = execute(e);
  CHECK(o.report["crosscheck"]["agree"] == true);
}

TEST_CASE("dimensions_only strips matrices") {
  json j{{"prime", 7}, {"dims", {1, 2}}, {"f", {{"matrix", {{1}}}, {"source_dim", 1}}}, {"xs", {{{"actions", 1}}}}};
  auto d = dimensions_only(j);
  CHECK_FALSE(d.contains("prime"));
  CHECK(d["f"] == json{{"source_dim", 1}});
  CHECK(d["xs"][0].empty());
  CHECK(render_text(json{{"a", 1}}) == "a: 1\n");
}
