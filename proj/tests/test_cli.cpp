#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "booklab/cli.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::vector<json> lines;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = booklab::cli::run(args, out, err);
  Result r{code, {}, err.str()};
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) r.lines.push_back(json::parse(line));
  return r;
}

}  // namespace

TEST_CASE("gen then books") {
  const auto path = testing_support::scratch("cli-a.kcg").string();
  auto gen = run({"gen", "kpartite", "--k", "2", "--part-size", "6", "--out", path});
  REQUIRE(gen.code == 0);
  auto books = run({"books", "--in", path, "--color", "blue", "--k", "2", "--max"});
  REQUIRE(books.code == 0);
  REQUIRE(books.lines.size() == 2);
  CHECK(books.lines[0]["command"] == "books");
  CHECK(books.lines[0]["in"] == path);
  CHECK(books.lines[1]["pages"] == 4);

  auto hist = run({"books", "--in", path, "--k", "2", "--spectrum"});
  REQUIRE(hist.code == 0);
  CHECK(hist.lines[1]["pages"] == 4);
  CHECK(hist.lines[1]["spines"] == 30);
}

TEST_CASE("analytic and ramsey commands") {
  auto k1 = run({"analytic", "k1", "--p", "9/10"});
  REQUIRE(k1.code == 0);
  CHECK(k1.lines[0]["p"] == "9/10");
  CHECK(k1.lines[1]["k1"] == 6.0);

  auto c1 = run({"analytic", "c1", "--k", "2"});
  CHECK(c1.lines[1]["c1"] == 1.0);

  auto r = run({"ramsey", "--k", "2", "--m", "1", "--n", "1", "--cap", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.lines[1]["value"] == 6);

  auto capped = run({"ramsey", "--k", "2", "--m", "2", "--n", "2", "--cap", "8"});
  CHECK(capped.code == 2);
  CHECK_FALSE(capped.lines.back().contains("value"));
  CHECK(capped.lines.back()["lower"] == 9);
}

TEST_CASE("generated files reproduce from the config echo") {
  const auto path = testing_support::scratch("cli-r.kcg").string();
  auto first = run({"gen", "random", "--n", "40", "--p", "1/3", "--seed", "77", "--out", path});
  REQUIRE(first.code == 0);
  const auto cfg = first.lines[0];
  CHECK(cfg["seed"] == 77);
  CHECK(cfg["p"] == "1/3");
  auto again = run({"gen", "random", "--n", std::to_string(cfg["n"].get<int>()), "--p", cfg["p"], "--seed",
                    std::to_string(cfg["seed"].get<int>()), "--out", path});
  CHECK(again.lines[1] == first.lines[1]);
}

TEST_CASE("quasi, identity and kdist commands") {
  const auto path = testing_support::scratch("cli-kp.kcg").string();
  REQUIRE(run({"gen", "kpartite", "--k", "2", "--part-size", "6", "--out", path}).code == 0);
  auto q = run({"quasi", "--in", path, "--p", "1/2", "--theta", "1/10", "--exhaustive"});
  REQUIRE(q.code == 0);
  CHECK(q.lines[1]["verdict"] == "violated");
  CHECK(q.lines[1]["deviation"] == "18/1");

  auto s = run({"quasi", "--in", path, "--p", "1/2", "--theta", "1/10", "--probes", "20", "--seed", "3"});
  REQUIRE(s.code == 0);
  CHECK(s.lines[0]["probes"] == 20);
  CHECK(s.lines[1]["method"] == "sampled");

  auto id = run({"identity", "--in", path, "--k", "2", "--p", "1/3"});
  REQUIRE(id.code == 0);
  CHECK(id.lines[1]["equal"] == true);

  auto kd = run({"kdist", "--in", path, "--k", "2", "--restarts", "4", "--seed", "1"});
  REQUIRE(kd.code == 0);
  CHECK(kd.lines[1]["edits"] == 0);

  const auto big = testing_support::scratch("cli-big.kcg").string();
  REQUIRE(run({"gen", "random", "--n", "30", "--p", "1/2", "--out", big}).code == 0);
  auto inconclusive = run({"quasi", "--in", big, "--p", "1/2", "--theta", "1/10", "--exhaustive"});
  CHECK(inconclusive.code == 2);
  CHECK(inconclusive.lines.size() == 1);  // config echo only, no claim
  CHECK(inconclusive.err.find("inconclusive") != std::string::npos);
}

TEST_CASE("witness command") {
  const auto path = testing_support::scratch("cli-w.kcg").string();
  auto w = run({"witness", "--N", "5", "--k", "2", "--m", "1", "--n", "1", "--budget", "10000", "--seed", "2",
                "--out", path});
  REQUIRE(w.code == 0);
  CHECK(w.lines[1]["found"] == true);
}

TEST_CASE("error reporting") {
  auto unknown = run({"books", "--in", "x.kcg", "--k", "2", "--bogus"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("unknown flag") != std::string::npos);

  auto bad_rational = run({"analytic", "k1", "--p", "nine-tenths"});
  CHECK(bad_rational.code == 1);
  CHECK(bad_rational.err.find("malformed rational") != std::string::npos);

  auto missing = run({"books", "--in", testing_support::scratch("nope.kcg").string(), "--k", "2"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("missing input file") != std::string::npos);

  CHECK(run({}).code == 1);
  CHECK(run({"--threads", "0", "analytic", "c1", "--k", "3"}).code == 1);
  CHECK(run({"many-books", "--in", "x.kcg", "--k", "2", "--gamma", "1/10"}).code == 1);
}
