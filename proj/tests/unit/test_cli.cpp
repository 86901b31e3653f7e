#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "arsite/cli.hpp"
#include "arsite/figure.hpp"
#include "arsite/io.hpp"
#include "support.hpp"

using namespace arsite;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("arsite_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

const std::string kFigure = R"({"generators":[[0,8],[2,5],[5,3],[7,0]]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("hereditary subcommands") {
    const std::string a = write_temp("a.json", R"({"generators":[[1,0]]})");
    const std::string b = write_temp("b.json", R"({"generators":[[0,1]]})");
    CHECK(run({"hereditary", "mul", "--lhs", a, "--rhs", b}).out == "{\"generators\":[[1,1]]}\n");
    CHECK(run({"hereditary", "add", "--lhs", a, "--rhs", b}).out == "{\"generators\":[[0,1],[1,0]]}\n");
    CHECK(run({"hereditary", "mu", "--input", "-"}, kFigure).out == "{\"mu\":7}\n");
    CHECK(json::parse(run({"hereditary", "m_r", "--r", "1/3"}, kFigure).out)["alpha"]["a"] == json::parse("[7,3]"));
    CHECK(run({"hereditary", "frobenius", "--n", "2", "--m", "3"}, kFigure).out ==
          "{\"generators\":[[0,24],[4,15],[10,9],[14,0]]}\n");
    const Result r = run({"hereditary", "rasterize", "--window", "3"}, R"({"generators":[[1,1]]})");
    CHECK(json::parse(r.out)["rows"] == json::parse(R"(["011","011","000"])"));
  }

  TEST_CASE("newton subcommands") {
    const std::string p = write_temp("p.json", R"({"vertices":[[0,2],[1,0]]})");
    const std::string r = write_temp("r.json", R"({"vertices":[[0,1],[3,0]]})");
    CHECK(run({"newton", "mul", "--lhs", p, "--rhs", r}).out == "{\"vertices\":[[0,3],[1,1],[4,0]]}\n");
    CHECK(run({"newton", "add", "--lhs", p, "--rhs", r}).out == "{\"vertices\":[[0,1],[1,0]]}\n");
    CHECK(run({"newton", "gamma"}, kFigure).out == "{\"vertices\":[[0,8],[2,5],[7,0]]}\n");
    CHECK(run({"newton", "hull"}, R"({"points":[[3,3],[0,4],[4,0]]})").out == "{\"vertices\":[[0,4],[4,0]]}\n");
    CHECK(json::parse(run({"newton", "universal-factor", "--x", "1/3", "--y", "1"},
                          R"({"vertices":[[0,8],[2,5],[7,0]]})").out)["exponent"]["a"] == json::parse("[7,3]"));
    CHECK(run({"newton", "cancellative", "--p", p, "--r", r, "--s", p}).out == "{\"cancellative\":true}\n");
    const Result zero = run({"newton", "universal-factor", "--x", "inf"}, R"({"vertices":[[0,0]]})");
    CHECK(zero.code == 1);
    CHECK(json::parse(zero.out)["error"] == "ZeroImage");
  }

  TEST_CASE("semigroup") {
    CHECK(run({"semigroup", "--n", "3", "--m", "5", "--check", "7"}).out == "{\"represents\":false}\n");
    CHECK(run({"semigroup", "--n", "3", "--m", "5", "--check", "8"}).out == "{\"represents\":true}\n");
    const json g = json::parse(run({"semigroup", "--n", "3", "--m", "5", "--gaps"}).out);
    CHECK(g["gaps"] == json::parse("[1,2,4,7]"));
    CHECK(g["conductor"] == 8);
    const Result bad = run({"semigroup", "--n", "4", "--m", "6", "--gaps"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["error"] == "NotCoprime");
    CHECK(run({"semigroup", "--n", "3", "--m", "5", "--check", "7", "--gaps"}).code == 2);
  }

  TEST_CASE("eval, iso and approx") {
    const json e = json::parse(run({"eval", "--lambda", "1/3"}, kFigure).out);
    CHECK(e["witness"] == json::parse("[7,0]"));
    CHECK(json::parse(run({"iso", "--l1", "2/3", "--l2", "3/2"}).out)["isomorphic"] == true);
    CHECK(json::parse(run({"iso", "--l1", "2/3", "--l2", "3/4"}).out)["isomorphic"] == false);
    const Result mixed = run({"iso", "--l1", "sqrt:2", "--l2", "sqrt:3"});
    CHECK(mixed.code == 1);
    CHECK(json::parse(mixed.out)["error"] == "IncompatibleRadicals");
    const json a = json::parse(run({"approx", "--lambda", "sqrt:2", "--depth", "4"}, R"({"generators":[[1,0]]})").out);
    CHECK(a["steps"].size() == 4);
    CHECK(a["steps"][3]["lambda"] == json::parse("[17,12]"));
    const Result rational = run({"approx", "--lambda", "1/2", "--depth", "4"}, kFigure);
    CHECK(rational.code == 1);
    CHECK(json::parse(rational.out)["error"] == "RationalLambda");
    CHECK(json::parse(run({"eval", "--lambda", "0"}, kFigure).out)["error"] == "NonPositiveLambda");
  }

  TEST_CASE("compose") {
    const json c = json::parse(run({"compose", "--left", "sqrt:2", "--right", "sqrt:2"}).out);
    CHECK(c["rho"] == "2");
    CHECK(c["deformed"] == true);
    const json a = json::parse(run({"compose", "--left", "1/2", "--right", "3/4", "--verify-bound", "64"}).out);
    CHECK(a["rho"] == "3/8");
    CHECK(a["deformed"] == false);
    CHECK(a["verified"] == true);
    CHECK(json::parse(run({"compose", "--left", "sqrt:2", "--right", "sqrt:3"}).out)["rho"] == "sqrt:6");
    const Result bad = run({"compose", "--left", "1+sqrt:2", "--right", "1+sqrt:3"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["error"] == "IncompatibleRadicals");
  }

  TEST_CASE("axioms is deterministic") {
    const Result a = run({"axioms", "--iters", "50", "--seed", "4"});
    const Result b = run({"axioms", "--iters", "50", "--seed", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out).size() == 11);
    const json one = json::parse(run({"axioms", "--iters", "10", "--seed", "1", "--instance", "R(sqrt:2)"}).out);
    CHECK(one[0]["passed"] == true);
    CHECK(run({"axioms", "--instance", "nope"}).code == 2);
  }

  TEST_CASE("malformed input exits with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"hereditary", "mu"}, "{not json").code == 2);
    CHECK(run({"hereditary", "mu"}, R"({"generators":[[-1,0]]})").code == 2);
    CHECK(run({"hereditary", "mu", "--input", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"eval", "--lambda", "abc"}, kFigure).code == 2);
    CHECK(run({"newton", "gamma"}, R"({"vertices":[]})").code == 2);
    CHECK(run({"semigroup", "--n", "x", "--m", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("canonical JSON round-trips through the CLI") {
    auto rng = arsite::test::rng(7);
    for (int i = 0; i < 100; ++i) {
      const std::string set = io::to_json(random_hereditary(rng)).dump() + "\n";
      CHECK(run({"hereditary", "canonicalize"}, set).out == set);
      const std::string poly = io::to_json(random_polygon(rng)).dump() + "\n";
      const std::string p = write_temp("poly.json", poly);
      const std::string unit = write_temp("unit.json", R"({"vertices":[[0,0]]})");
      CHECK(run({"newton", "mul", "--lhs", p, "--rhs", unit}).out == poly);
    }
  }

  TEST_CASE("figure") {
    const Result a = run({"figure", "--lambda", "1/3"}, kFigure);
    const Result b = run({"figure", "--lambda", "1/3"}, kFigure);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("<svg") != std::string::npos);
    CHECK(a.out.find("id=\"mu-line\"") != std::string::npos);
    CHECK(a.out.find("id=\"lambda-line\"") != std::string::npos);
    // Hull through (0,8), (2,5), (7,0) on a 10-cell window: y = 32 + (10 - b) * 24.
    CHECK(a.out.find("points=\"32,32 32,80 80,152 200,272 272,272\"") != std::string::npos);
    const Result small = run({"figure", "--window", "8"}, kFigure);
    CHECK(small.code == 1);
    CHECK(json::parse(small.out)["error"] == "WindowTooSmall");
    const Result zero = run({"figure", "--window", "3"}, R"({"generators":[]})");
    CHECK(zero.code == 0);
    CHECK(zero.out.find("polyline") == std::string::npos);
    CHECK(zero.out.find("<rect x=") == std::string::npos);
    const Result unit = run({"figure", "--window", "2", "--layers", "region,hull"}, R"({"generators":[[0,0]]})");
    CHECK(unit.out.find("points=\"32,32 32,80 80,80\"") != std::string::npos);
    CHECK(run({"figure", "--layers", "bogus"}, kFigure).code == 2);
    const std::string out = (std::filesystem::temp_directory_path() / "arsite_cli_fig.svg").string();
    CHECK(run({"figure", "--lambda", "1/3", "--output", out}, kFigure).code == 0);
    CHECK(slurp(out) == a.out);
  }

  TEST_CASE("figure matches the golden file") {
    cli::FigureSpec spec;
    spec.set = HereditarySet::canonicalize({{0, 8}, {2, 5}, {5, 3}, {7, 0}});
    spec.lambda = Lambda::rational(1, 3);
    spec.window = 10;
    CHECK(cli::emit_figure(spec) == slurp(ARSITE_GOLDEN_DIR "/figure1.svg"));
  }
}
