#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace skewlie;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SKEWLIE_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("documents") {
  TEST_CASE("Heisenberg and abelian") {
    const auto h = parse_algebra(R"({"dim":3,"products":[{"i":1,"j":2,"c":["0","0","1"]}]})");
    CHECK(h == SkewAlgebra::from_products(3, {{1, 2, {0, 0, 1}}}));
    CHECK(parse_algebra(R"({"dim":3,"products":[]})") == SkewAlgebra(3));
  }

  TEST_CASE("literals") {
    const auto a = parse_algebra(R"({"dim":2,"products":[{"i":1,"j":2,"c":["-6/4", 3]}]})");
    CHECK(a.constants(0, 1) == Vec{Rational(-3, 2), 3});
  }

  TEST_CASE("invariant violations") {
    CHECK_THROWS_AS(parse_algebra(R"({"dim":3,"products":[{"i":2,"j":2,"c":["1","0","0"]}]})"),
                    InvariantError);
    CHECK_THROWS_AS(parse_algebra(R"({"dim":3,"products":[{"i":3,"j":1,"c":["1","0","0"]}]})"),
                    InvariantError);
    CHECK_THROWS_AS(parse_algebra(R"({"dim":3,"products":[{"i":1,"j":2,"c":["1","0","0"]},
                                                          {"i":1,"j":2,"c":["0","1","0"]}]})"),
                    InvariantError);
  }

  TEST_CASE("malformed documents") {
    const char* bad[] = {
        "",
        "{",
        "[]",
        R"({"products":[]})",
        R"({"dim":3})",
        R"({"dim":"3","products":[]})",
        R"({"dim":1,"products":[]})",
        R"({"dim":7,"products":[]})",
        R"({"dim":3,"products":{}})",
        R"({"dim":3,"products":[{"i":0,"j":2,"c":["1","0","0"]}]})",
        R"({"dim":3,"products":[{"i":1,"j":4,"c":["1","0","0"]}]})",
        R"({"dim":3,"products":[{"i":1,"j":2,"c":["1","0"]}]})",
        R"({"dim":3,"products":[{"i":1,"j":2,"c":["1","0","1/0"]}]})",
        R"({"dim":3,"products":[{"i":1,"j":2,"c":["1","0",0.5]}]})",
        R"({"dim":3,"products":[{"i":1,"c":["1","0","0"]}]})",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS(parse_algebra(text), ParseError);
    }
  }

  TEST_CASE("diagnostics name the field") {
    try {
      parse_algebra(R"({"dim":3,"products":[{"i":1,"j":2,"c":["1","x","0"]}]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("products[0].c[1]") != std::string::npos);
    }
  }

  TEST_CASE("round trip") {
    oracle::Rng rng(401);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = rng.integer(2, 6);
      std::vector<Vec> constants(n * (n - 1) / 2, Vec(n));
      for (auto& c : constants)
        if (rng.integer(0, 1)) c = rng.vec(n, 9);
      const SkewAlgebra a(n, constants);
      CHECK(parse_algebra(serialize_algebra(a)) == a);
    }
  }

  TEST_CASE("rationals serialize as strings") {
    CHECK(to_json(Rational(-3, 4)) == "-3/4");
    CHECK(to_json(Vec{1, Rational(1, 2)}).dump() == R"(["1","1/2"])");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("derivations report for Heisenberg") {
    const auto r = run_cli({"derivations", data("heisenberg.json"), "--json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["derivations"]["rank_M"] == 3);
    CHECK(j["derivations"]["aut_dimension"] == 6);
    CHECK(j["algebra"]["dim"] == 3);
  }

  TEST_CASE("classify sol example") {
    const auto r = run_cli({"classify", data("sol_example.json")});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out.find("SolvableNonLie") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);

    const auto j = nlohmann::json::parse(run_cli({"classify", data("sol_example.json"), "--json"}).out);
    const auto& c = j["classification"];
    CHECK(c["tag"] == "SolvableNonLie");
    CHECK(c["params"].contains("beta1"));
    CHECK(c["witness"].size() == 3);
  }

  TEST_CASE("homlie on the dimension-4 counterexample") {
    const auto r = run_cli({"homlie", data("counterexample4.json")});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out.find("not Hom-Lie") != std::string::npos);
    const auto j = nlohmann::json::parse(run_cli({"homlie", data("counterexample4.json"), "--json"}).out);
    CHECK(j["homlie"]["is_homlie"] == false);
    CHECK(j["homlie"]["determinant"] == oracle::kCounterexampleHLDet.str());
  }

  TEST_CASE("every command succeeds on the fixtures") {
    for (const char* cmd : {"analyze", "derivations", "homlie", "classify", "killing", "lietype"}) {
      for (const char* file : {"heisenberg.json", "sol_example.json"}) {
        CAPTURE(cmd);
        CAPTURE(file);
        CHECK(run_cli({cmd, data(file)}).code == cli::kExitOk);
        const auto r = run_cli({cmd, data(file), "--json"});
        CHECK(r.code == cli::kExitOk);
        CHECK(nlohmann::json::parse(r.out).is_object());
      }
    }
  }

  TEST_CASE("JSON output is byte stable") {
    for (const char* file : {"heisenberg.json", "sol_example.json", "counterexample4.json"}) {
      const auto a = run_cli({"analyze", data(file), "--json"});
      const auto b = run_cli({"analyze", data(file), "--json"});
      CHECK(a.code == cli::kExitOk);
      CHECK(a.out == b.out);
    }
    const auto s1 = run_cli({"sample", "--dim", "3", "--trials", "20", "--seed", "5", "--json"});
    const auto s2 = run_cli({"sample", "--dim", "3", "--trials", "20", "--seed", "5", "--json", "--threads", "1"});
    CHECK(s1.code == cli::kExitOk);
    CHECK(s1.out == s2.out);
  }

  TEST_CASE("sample report") {
    const auto r = run_cli({"sample", "--dim", "3", "--trials", "10", "--seed", "1", "--height", "2", "--json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["trials"] == 10);
    CHECK(j["report"]["homlie_count"] == 10);
  }

  TEST_CASE("usage and parse errors exit 2") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run_cli({"derivations"}).code == cli::kExitUsage);
    CHECK(run_cli({"derivations", data("missing.json")}).code == cli::kExitUsage);
    CHECK(run_cli({"sample", "--dim", "9"}).code == cli::kExitUsage);
    CHECK(run_cli({"sample", "--trials", "0"}).code == cli::kExitUsage);

    const std::string bad = std::string(SKEWLIE_BINARY_DIR) + "/bad_document.json";
    {
      std::ofstream(bad) << R"({"dim":3,"products":[{"i":2,"j":2,"c":["1","0","0"]}]})";
    }
    const auto r = run_cli({"derivations", bad});
    CHECK(r.code == cli::kExitUsage);
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("analysis errors exit 1") {
    // classify needs dimension 3.
    CHECK(run_cli({"classify", data("counterexample4.json")}).code == cli::kExitAnalysis);
    CHECK(run_cli({"lietype", data("counterexample4.json")}).code == cli::kExitAnalysis);
    const std::string two = std::string(SKEWLIE_BINARY_DIR) + "/dim2_document.json";
    {
      std::ofstream(two) << R"({"dim":2,"products":[{"i":1,"j":2,"c":["1","0"]}]})";
    }
    CHECK(run_cli({"classify", two}).code == cli::kExitAnalysis);
    CHECK(run_cli({"homlie", two}).code == cli::kExitOk);
  }

  TEST_CASE("help exits 0") { CHECK(run_cli({"--help"}).code == cli::kExitOk); }
}
