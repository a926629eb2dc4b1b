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

#include "doctest.h"
#include "prorcf/core.hpp"
#include "support.hpp"

using namespace prorcf;

TEST_SUITE("core") {
  TEST_CASE("prospect construction checks shape and finiteness") {
    CHECK_THROWS_AS(Prospect(2, 2, {1.0, 2.0, 3.0}), ValidationError);
    CHECK_THROWS_AS(Prospect(1, 1, {std::nan("")}), ValidationError);
    const Prospect x(2, 2, {3, 7, 4, 8});
    CHECK(x(1, 0) == 4.0);
    CHECK(x.row(1)[1] == 8.0);
  }

  TEST_CASE("inf_norm_distance") {
    CHECK(inf_norm_distance(Prospect::Scalar(5), Prospect::Scalar(5)) == 0.0);
    CHECK(inf_norm_distance(Prospect::Scalar(5), Prospect::Scalar(3)) == 2.0);
    CHECK(inf_norm_distance(Prospect::Column({5, 5}), Prospect::Column({1, 3})) == 4.0);
    CHECK_THROWS_AS(inf_norm_distance(Prospect::Scalar(1), Prospect::Column({1, 2})),
                    ValidationError);
  }

  TEST_CASE("permute moves whole rows") {
    const Prospect x = Prospect::Column({3, 4});
    CHECK(permute(x, Permutation::Identity(2)) == x);
    CHECK(permute(x, Permutation({1, 0})) == Prospect::Column({4, 3}));
    const Prospect y(2, 2, {3, 7, 4, 8});
    CHECK(permute(y, Permutation({1, 0})) == Prospect(2, 2, {4, 8, 3, 7}));
    CHECK_THROWS_AS(Permutation({0, 0}), ValidationError);
    CHECK_THROWS_AS(permute(x, Permutation::Identity(3)), ValidationError);
  }

  TEST_CASE("permute is an isometry") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const Prospect x = testing::RandomProspect(rng, 3, 2);
      const Prospect y = testing::RandomProspect(rng, 3, 2);
      for (const Permutation& s : AllPermutations(3)) {
        CHECK(inf_norm_distance(permute(x, s), permute(y, s)) ==
              doctest::Approx(inf_norm_distance(x, y)));
      }
    }
    CHECK(AllPermutations(4).size() == 24);
  }

  TEST_CASE("tilde translates by v / C") {
    CHECK(tilde(Prospect::Scalar(5), 0, 1) == Prospect::Scalar(5));
    CHECK(tilde(Prospect::Scalar(3), -2, 1) == Prospect::Scalar(5));
    CHECK(tilde(Prospect::Scalar(1), -4, 2) == Prospect::Scalar(3));
    CHECK_THROWS_AS(tilde(Prospect::Scalar(1), -4, 0), ValidationError);
    const Prospect x = Prospect::Column({1.5, -2});
    CHECK(tilde(x, 0, 3.0) == x);
  }

  TEST_CASE("validate_instance on the scalar fixture") {
    const ValidatedInstance v = validate_instance(testing::FixtureA());
    CHECK(v.size() == 3);
    CHECK(v.theta(0) == Prospect::Scalar(5));
    CHECK(v.theta(1) == Prospect::Scalar(3));
    CHECK(v.theta(2) == Prospect::Scalar(1));
    REQUIRE(v.edges().size() == 1);
    CHECK(v.edges()[0] == Edge{1, 2});
  }

  TEST_CASE("validate_instance rejects bad input") {
    Instance inst = testing::FixtureA();
    inst.lipschitz = 0.0;
    CHECK_THROWS_AS(validate_instance(inst), ValidationError);
    inst = testing::FixtureA();
    inst.pairs[0].dominated = Prospect::Scalar(6.0);
    CHECK_THROWS_WITH_AS(validate_instance(inst), doctest::Contains("normalizing prospect"), ValidationError);
    inst = testing::FixtureA();
    inst.pairs[0].dominated = Prospect::Column({1, 1});
    CHECK_THROWS_AS(validate_instance(inst), ValidationError);
  }

  TEST_CASE("duplicates merge and validation is idempotent") {
    Instance inst = testing::FixtureA();
    inst.pairs.push_back({Prospect::Scalar(1.0), Prospect::Scalar(0.5)});
    inst.pairs.push_back({Prospect::Scalar(3.0), Prospect::Scalar(1.0)});
    const ValidatedInstance v = validate_instance(inst);
    CHECK(v.size() == 4);
    CHECK(v.edges().size() == 2);
    CHECK(v.Find(Prospect::Scalar(0.5)) == 3);
    CHECK(v.Find(Prospect::Scalar(7.0)) == v.size());
    CHECK(validate_instance(v.source()) == v);
  }
}
