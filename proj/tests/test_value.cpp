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

#include <random>

#include "doctest.h"
#include "prorcf/oracle.hpp"
#include "prorcf/value.hpp"
#include "support.hpp"

using namespace prorcf;

namespace {

Decomposition Prefix(bool law, std::vector<DecompositionEntry> e) {
  return Decomposition(law, std::move(e), 0);
}

}  // namespace

TEST_SUITE("value") {
  TEST_CASE("candidate programs on the scalar fixture") {
    const ValidatedInstance inst = validate_instance(testing::FixtureA());
    const Decomposition d1 = Prefix(false, {{0, 0.0}});
    const PlpResult w1 = solve_plp(inst, 1, d1, 1);
    REQUIRE(w1.feasible);
    CHECK(w1.value == doctest::Approx(-2.0).epsilon(1e-12));
    const Decomposition d2 = Prefix(false, {{0, 0.0}, {1, -2.0}});
    const PlpResult y1 = solve_plp(inst, 2, d2, 2);
    REQUIRE(y1.feasible);
    CHECK(y1.value == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK_THROWS_AS(solve_plp(inst, 0, d1, 1), ValidationError);
    CHECK_THROWS_AS(solve_plp(inst, 2, d1, 2), ValidationError);
  }

  TEST_CASE("predictor clips at the last sorted value") {
    const ValidatedInstance inst = validate_instance(testing::FixtureA());
    const Decomposition d1 = Prefix(false, {{0, 0.0}});
    CHECK(predictor(inst, 1, d1, 1) == doctest::Approx(-2.0));
    CHECK(predictor(inst, 2, d1, 1) == doctest::Approx(-4.0));
    // Far above the sorted member, the program value is positive and clipped.
    Instance up;
    up.w0 = Prospect::Scalar(5.0);
    up.pairs.push_back({Prospect::Scalar(4.5), Prospect::Scalar(4.5)});
    const ValidatedInstance vi = validate_instance(up);
    CHECK(predictor(vi, 1, Prefix(false, {{0, 0.0}}), 1) <= 0.0);
  }

  TEST_CASE("sort on the scalar fixture") {
    const ValidatedInstance inst = validate_instance(testing::FixtureA());
    const Decomposition d = sort_value_problem(inst);
    REQUIRE(d.size() == 3);
    CHECK(d.prospect_at(1) == 0);
    CHECK(d.prospect_at(2) == 1);
    CHECK(d.prospect_at(3) == 2);
    CHECK(d.level(1) == doctest::Approx(0.0));
    CHECK(d.level(2) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(d.level(3) == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(d.is_sentinel(4));
    CHECK(d.lp_calls() <= 3 * 2);
    CHECK_NOTHROW(d.CheckAgainst(inst));
    CHECK_THROWS_AS(sort_value_problem_law(inst), ValidationError);
  }

  TEST_CASE("law-invariant programs on the two-scenario fixture") {
    const ValidatedInstance inst = validate_instance(testing::FixtureB());
    const PlpResult w1 = solve_plp_law(inst, 1, Prefix(true, {{0, 0.0}}), 1);
    REQUIRE(w1.feasible);
    CHECK(w1.value == doctest::Approx(-2.0).epsilon(1e-10));
    const PlpResult y1 = solve_plp_law(inst, 2, Prefix(true, {{0, 0.0}, {1, -2.0}}), 2);
    REQUIRE(y1.feasible);
    CHECK(y1.value == doctest::Approx(-4.0).epsilon(1e-10));

    const Decomposition d = sort_value_problem_law(inst);
    CHECK(d.law_invariant());
    CHECK(d.value_of(0) == doctest::Approx(0.0));
    CHECK(d.value_of(1) == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(d.value_of(2) == doctest::Approx(-4.0).epsilon(1e-10));
    CHECK_THROWS_AS(sort_value_problem(inst), ValidationError);
  }

  TEST_CASE("single scenario law sort matches the base sort") {
    Instance a = testing::FixtureA();
    const Decomposition base = sort_value_problem(validate_instance(a));
    a.law_invariant = true;
    const ValidatedInstance la = validate_instance(a);
    const PlpResult w1 = solve_plp_law(la, 1, Prefix(true, {{0, 0.0}}), 1);
    CHECK(w1.value == doctest::Approx(-2.0));
    const Decomposition law = sort_value_problem_law(la);
    for (std::size_t j = 1; j <= base.size(); ++j) {
      CHECK(law.prospect_at(j) == base.prospect_at(j));
      CHECK(law.level(j) == doctest::Approx(base.level(j)).epsilon(1e-10));
    }
  }

  TEST_CASE("decomposition invariants on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const Instance raw = testing::RandomInstance(rng, 5, 4, 2, 2, 1.0, false);
      const ValidatedInstance inst = validate_instance(raw);
      const Decomposition d = solve_value_problem(inst);
      CHECK(d.prospect_at(1) == 0);
      CHECK(d.level(1) == 0.0);
      for (std::size_t j = 2; j <= d.size(); ++j) CHECK(d.level(j) <= d.level(j - 1));
      for (const Edge& e : inst.edges()) {
        CHECK(d.value_of(e.preferred) >= d.value_of(e.dominated) - 1e-9);
      }
      const auto J = static_cast<long>(inst.size());
      CHECK(d.lp_calls() <= J * (J - 1));
    }
  }

  TEST_CASE("kinked majorant supports the sorted values") {
    const ValidatedInstance inst = validate_instance(testing::FixtureA());
    const Decomposition d = sort_value_problem(inst);
    for (std::size_t id = 0; id < inst.size(); ++id) {
      const KinkedMajorant km = kinked_majorant(inst, d, id);
      CHECK(km.value == doctest::Approx(d.value_of(id)));
      double l1 = 0.0;
      for (double s : km.subgradient) {
        CHECK(s >= -1e-12);
        l1 += s;
      }
      CHECK(l1 <= inst.lipschitz() + 1e-9);
    }
  }

  TEST_CASE("decomposition validation catches mismatches") {
    const ValidatedInstance inst = validate_instance(testing::FixtureA());
    CHECK_THROWS_AS(Prefix(false, {{0, 0.0}, {1, -2.0}}).CheckAgainst(inst), ValidationError);
    CHECK_THROWS_AS(Prefix(false, {{1, 0.0}, {0, -2.0}, {2, -4.0}}).CheckAgainst(inst),
                    ValidationError);
    CHECK_THROWS_AS(Prefix(false, {{0, 0.0}, {1, -5.0}, {2, -4.0}}).CheckAgainst(inst),
                    ValidationError);
    CHECK_THROWS_AS(Prefix(true, {{0, 0.0}, {1, -2.0}, {2, -4.0}}).CheckAgainst(inst),
                    ValidationError);
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("enumeration reproduces the fixture values") {
    const OracleResult a = oracle_value_problem(validate_instance(testing::FixtureA()));
    REQUIRE(a.values.size() == 3);
    CHECK(a.values[0] == doctest::Approx(0.0));
    CHECK(a.values[1] == doctest::Approx(-2.0));
    CHECK(a.values[2] == doctest::Approx(-4.0));
    const OracleResult b = oracle_value_problem_law(validate_instance(testing::FixtureB()));
    CHECK(b.values[1] == doctest::Approx(-2.0));
    CHECK(b.values[2] == doctest::Approx(-4.0));
  }

  TEST_CASE("enumeration agrees with sorting on small random instances") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      const ValidatedInstance inst =
          validate_instance(testing::RandomInstance(rng, 4, 3, 2, 1, 1.0, false, trial % 2 == 0));
      const Decomposition d = sort_value_problem(inst);
      const OracleResult o = oracle_value_problem(inst);
      for (std::size_t id = 0; id < inst.size(); ++id) {
        CHECK(d.value_of(id) == doctest::Approx(o.values[id]).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("size limits") {
    Instance big;
    big.w0 = Prospect::Scalar(100.0);
    for (int k = 0; k < 5; ++k) {
      big.pairs.push_back({Prospect::Scalar(2.0 * k + 1), Prospect::Scalar(2.0 * k + 0.5)});
    }
    CHECK_THROWS_AS(oracle_value_problem(validate_instance(big)), ValidationError);
  }
}
