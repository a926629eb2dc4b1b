// Copyright 2026 The prorcf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "prorcf/io.hpp"
#include "support.hpp"

#ifndef PRORCF_FIXTURE_DIR
#define PRORCF_FIXTURE_DIR "data/fixtures"
#endif

using namespace prorcf;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = PRORCF_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "prorcf_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("csv parsing") {
    const auto rows = parse_csv_matrix("1, 2.5\n-3,4e1\r\n\n", "mem");
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][1] == 40.0);
    CHECK_THROWS_AS(parse_csv_matrix("1,2\n3\n", "mem"), ValidationError);
    CHECK_THROWS_AS(parse_csv_matrix("1,x\n", "mem"), ValidationError);
    CHECK_THROWS_AS(parse_csv_matrix("1,\n", "mem"), ValidationError);
    CHECK_THROWS_AS(parse_csv_matrix("", "mem"), ValidationError);
    CHECK_THROWS_AS(parse_csv_matrix("nan\n", "mem"), ValidationError);
  }

  TEST_CASE("prospect and instance round trips") {
    const Prospect x(2, 2, {0.1, -2.0 / 3.0, 1e-17, 123456.789});
    const fs::path p = Scratch("x.csv");
    write_prospect_csv(p.string(), x);
    CHECK(read_prospect_csv(p.string()) == x);

    std::mt19937_64 rng(1);
    const Instance inst = testing::RandomInstance(rng, 4, 3, 2, 2, 0.5, true);
    const fs::path ip = Scratch("inst.json");
    write_instance_json(ip.string(), inst);
    CHECK(read_instance_json(ip.string()) == inst);

    const Instance a = read_instance_json(kFixtures + "/fixture_a/instance.json");
    CHECK(a == testing::FixtureA());
    const Instance b = read_instance_json(kFixtures + "/fixture_b/instance.json");
    CHECK(b == testing::FixtureB());
  }

  TEST_CASE("decomposition and model round trips") {
    const Decomposition d(true, {{0, 0.0}, {2, -1.25}, {1, -3.0}}, 7);
    CHECK(decomposition_from_json(decomposition_to_json(d)) == d);
    CHECK_THROWS_AS(decomposition_from_json("{\"entries\": 3}"), ValidationError);
    CHECK_THROWS_AS(decomposition_from_json("not json"), ValidationError);

    DecisionModel m = testing::FixtureAPortfolio();
    m.lower[1] = -kInfinity;
    const DecisionModel back = model_from_json(model_to_json(m));
    CHECK(back.g == m.g);
    CHECK(back.Aeq == m.Aeq);
    CHECK(back.lower == m.lower);
    CHECK(back.upper == m.upper);
    CHECK(back.scenarios == 1);

    const DecisionModel f = read_model_json(kFixtures + "/fixture_a/portfolio.json");
    CHECK(f.g == testing::FixtureAPortfolio().g);
    CHECK(f.Aeq == testing::FixtureAPortfolio().Aeq);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("value, eval and oracle on the scalar fixture") {
    const std::string inst = kFixtures + "/fixture_a/instance.json";
    const std::string d = Scratch("d.json").string();
    const Run v = Cli({"value", "--instance", inst, "--out", d});
    REQUIRE(v.code == 0);
    const Decomposition dec = read_decomposition_json(d);
    CHECK(dec.level(1) == 0.0);
    CHECK(dec.level(2) == doctest::Approx(-2.0));
    CHECK(dec.level(3) == doctest::Approx(-4.0));

    const Run e = Cli({"eval", "--instance", inst, "--decomposition", d, "--prospect",
                       kFixtures + "/fixture_a/x4.csv"});
    CHECK(e.code == 0);
    CHECK(e.out == "-1.0\n");

    const Run o = Cli({"oracle", "--instance", inst});
    CHECK(o.code == 0);
    const Decomposition od = decomposition_from_json(o.out);
    for (std::size_t j = 1; j <= 3; ++j) {
      CHECK(od.prospect_at(j) == dec.prospect_at(j));
      CHECK(od.level(j) == doctest::Approx(dec.level(j)).epsilon(1e-9));
    }

    for (const char* x : {"x0.csv", "x6.csv"}) {
      const Run r = Cli({"eval", "--instance", inst, "--decomposition", d, "--prospect",
                         kFixtures + "/fixture_a/" + x});
      CHECK(r.code == 0);
    }
  }

  TEST_CASE("accept, aspiration and pro") {
    const std::string inst = kFixtures + "/fixture_a/instance.json";
    const std::string d = Scratch("d2.json").string();
    REQUIRE(Cli({"value", "--instance", inst, "--out", d}).code == 0);
    const std::string x4 = kFixtures + "/fixture_a/x4.csv";
    const Run in = Cli({"accept", "--instance", inst, "--decomposition", d, "--prospect", x4,
                        "--level", "-1"});
    CHECK(in.code == 0);
    CHECK(in.out.find("\"in\"") != std::string::npos);
    CHECK(in.out.find("\"kappa\": 1") != std::string::npos);
    const Run out = Cli({"accept", "--instance", inst, "--decomposition", d, "--prospect", x4,
                         "--level", "-0.5"});
    CHECK(out.out.find("\"out\"") != std::string::npos);

    const Run asp = Cli({"aspiration", "--instance", inst, "--decomposition", d,
                         "--grid-step", "0.5", "--prospect", x4});
    CHECK(asp.code == 0);
    CHECK(asp.out.rfind("v,kappa,c,tau,risk,accepted\n0,1,-5,5,1,0\n", 0) == 0);

    const Run pro = Cli({"pro", "--instance", inst, "--decomposition", d, "--model",
                         kFixtures + "/fixture_a/portfolio.json"});
    CHECK(pro.code == 0);
    CHECK(pro.out.find("\"value\": -1.0") != std::string::npos);
  }

  TEST_CASE("law pipeline and mixing rejection") {
    const std::string inst = kFixtures + "/fixture_b/instance.json";
    const std::string d = Scratch("db.json").string();
    REQUIRE(Cli({"value", "--instance", inst, "--out", d}).code == 0);
    const Run e = Cli({"eval", "--instance", inst, "--decomposition", d, "--prospect",
                       kFixtures + "/fixture_b/x43.csv"});
    CHECK(e.code == 0);
    CHECK(std::stod(e.out) == doctest::Approx(-2.0).epsilon(1e-10));

    const std::string a = kFixtures + "/fixture_a/instance.json";
    const std::string da = Scratch("da.json").string();
    REQUIRE(Cli({"value", "--instance", a, "--out", da}).code == 0);
    const Run mixed = Cli({"eval", "--law", "--instance", a, "--decomposition", da, "--prospect",
                           kFixtures + "/fixture_a/x4.csv"});
    CHECK(mixed.code == 2);
    const Run lawa = Cli({"value", "--law", "--instance", a});
    CHECK(lawa.code == 0);
    CHECK(decomposition_from_json(lawa.out).law_invariant());
  }

  TEST_CASE("exit codes and dumps") {
    CHECK(Cli({}).code == 1);
    CHECK(Cli({"frobnicate"}).code == 1);
    CHECK(Cli({"value", "--instance", kFixtures + "/fixture_a/instance.json", "--bogus"}).code == 1);
    CHECK(Cli({"value", "--instance", "/nonexistent.json"}).code == 1);
    CHECK(Cli({"--help"}).code == 0);

    const fs::path bad = Scratch("bad.json");
    write_prospect_csv(Scratch("bad_w0.csv").string(), Prospect::Scalar(1));
    write_prospect_csv(Scratch("bad_w1.csv").string(), Prospect::Scalar(3));
    write_text_file(bad.string(),
                    R"({"lipschitz": 1, "w0": "bad_w0.csv", "pairs": [{"preferred": "bad_w1.csv", "dominated": "bad_w0.csv"}]})");
    const Run v = Cli({"validate", "--instance", bad.string()});
    CHECK(v.code == 2);
    CHECK(v.err.find("normalizing prospect") != std::string::npos);

    const fs::path dump = Scratch("dump.lp");
    fs::remove(dump);
    CHECK(Cli({"value", "--instance", kFixtures + "/fixture_a/instance.json", "--lp-dump",
               dump.string()}).code == 0);
    const std::string text = read_text_file(dump.string());
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("status") != std::string::npos);
  }

  TEST_CASE("simulate is deterministic") {
    const std::vector<std::string> args{"simulate", "--experiment", "capital", "--pairs", "5",
                                        "--scenarios", "3", "--attributes", "2", "--seed", "4",
                                        "--test-prospects", "10"};
    const Run a = Cli(args);
    const Run b = Cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("ecds_size,avg_rcf_raw,avg_rcf_minmax\n", 0) == 0);
    CHECK(a.out.find("method,rcf_value,ce_value,lp_calls") != std::string::npos);

    const Run p = Cli({"simulate", "--experiment", "portfolio", "--returns",
                       kFixtures + "/fixture_a/returns.csv", "--pairs", "1", "--test-prospects", "5"});
    CHECK(p.code == 0);
    CHECK(Cli({"simulate", "--experiment", "lottery"}).code == 1);
  }
}
