#include <doctest.h>

#include "inddom/params.hpp"
#include "test_util.hpp"

using namespace inddom;

namespace {

const WeightVector kOnes4 = WeightVector::ones(4);

Partition p4_parts() { return Partition({{0, 3}, {1, 2}}, 4); }
Partition k3_singletons() { return Partition({{0}, {1}, {2}}, 3); }

}  // namespace

TEST_CASE("alpha_w") {
  Graph g1 = testutil::example1_g1();
  CHECK(alpha_w(g1, WeightVector::ones(8)).value == 4);
  CHECK(alpha_w(complement(g1), WeightVector::ones(8)).value == 4);
  CHECK(alpha_w(testutil::k3(), WeightVector({2, 5, 1})).value == 5);
  CHECK(alpha_w(testutil::p4(), kOnes4).value == 2);
}

TEST_CASE("gamma_w and gamma_tilde") {
  CHECK(gamma_w(testutil::k3(), WeightVector({2, 5, 1})).value == 5);
  ParamResult p4dom = gamma_w(testutil::p4(), kOnes4);
  CHECK(p4dom.value == 2);
  REQUIRE(p4dom.witness_f.has_value());

  CHECK(gamma_tilde(testutil::p4()).value == 2);
  // isolated vertex cannot be totally dominated
  CHECK(!gamma_tilde(build_graph(2, {})).feasible);
}

TEST_CASE("alpha_cap_w") {
  Graph p4 = testutil::p4();
  Graph h = complement(p4);
  CHECK(alpha_cap_w(p4, h, kOnes4).value == 1);
  CHECK(alpha_cap_w(p4, p4, kOnes4).value == alpha_w(p4, kOnes4).value);
  Graph e3 = build_graph(3, {});
  CHECK(alpha_cap_w(e3, e3, WeightVector::ones(3)).value == 3);
}

TEST_CASE("alpha_cap_star_w") {
  Graph p4 = testutil::p4();
  ParamResult res = alpha_cap_star_w(p4, complement(p4), kOnes4);
  CHECK(res.value == 2);
  REQUIRE(res.witness_vertex_vector.has_value());

  Graph g1 = testutil::example1_g1();
  CHECK(alpha_cap_star_w(g1, complement(g1), WeightVector::ones(8)).value == 2);

  Graph k2 = build_graph(2, {{0, 1}});
  CHECK(alpha_cap_star_w(k2, k2, WeightVector::ones(2)).value == 1);
}

TEST_CASE("gamma_cup_w") {
  Graph p4 = testutil::p4();
  CHECK(gamma_cup_w(p4, complement(p4), kOnes4).value == 2);
  CHECK(gamma_cup_w(p4, p4, kOnes4).value == gamma_w(p4, kOnes4).value);

  // two partition graphs agree with the joint independence number
  Graph a = partition_graph(Partition({{0, 1}, {2, 3}}, 4), 4);
  Graph b = partition_graph(Partition({{0, 2}, {1, 3}}, 4), 4);
  CHECK(gamma_cup_w(a, b, kOnes4).value == alpha_cap_w(a, b, kOnes4).value);
}

TEST_CASE("nu_w") {
  CHECK(nu_w(testutil::p4(), p4_parts(), kOnes4).value == 2);
  CHECK(nu_w(testutil::k3(), k3_singletons(), WeightVector::ones(3)).value == 1);
  CHECK(nu_w(testutil::p4(), p4_parts(), WeightVector({0, 0, 0, 0})).value == 0);
}

TEST_CASE("nu_star_w") {
  CHECK(nu_star_w(testutil::p4(), p4_parts(), kOnes4).value == 2);
  CHECK(nu_star_w(testutil::k3(), k3_singletons(), WeightVector::ones(3)).value == 1);
  Graph one(1);
  CHECK(nu_star_w(one, Partition({{0}}, 1), WeightVector({5})).value == 5);
}

TEST_CASE("nu_star convex form matches") {
  testutil::Rng rng{41};
  for (int iter = 0; iter < 15; ++iter) {
    int n = 1 + static_cast<int>(rng.below(6));
    Graph g = testutil::random_graph(rng, n);
    Partition p = testutil::random_partition(rng, n);
    WeightVector w(testutil::random_weights(rng, n, 4));
    NuStarData data = nu_star_w_full(g, p, w);
    CHECK(data.value() == data.eq1_value);
  }
}

TEST_CASE("gamma_w_partition") {
  CHECK(gamma_w_partition(testutil::k3(), k3_singletons(), WeightVector::ones(3)).value == 1);
  CHECK(gamma_w_partition(testutil::p4(), p4_parts(), kOnes4).value == 2);
}

TEST_CASE("gamma_w_partition equals collective domination against the partition graph") {
  testutil::Rng rng{42};
  for (int iter = 0; iter < 15; ++iter) {
    int n = 1 + static_cast<int>(rng.below(6));
    Graph g = testutil::random_graph(rng, n);
    Partition p = testutil::random_partition(rng, n);
    WeightVector w(testutil::random_weights(rng, n, 4));
    Graph h = partition_graph(p, n);
    CHECK(gamma_w_partition(g, p, w).value == gamma_cup_w(g, h, w).value);
  }
}

TEST_CASE("tau_w") {
  CHECK(tau_w(testutil::k3(), k3_singletons(), WeightVector::ones(3)).value ==
        Rational(1, 2));
  CHECK(tau_w(testutil::p4(), p4_parts(), WeightVector({0, 0, 0, 0})).value == 0);
  // g = 0 with f one unit on each inner vertex dominates all of P4
  CHECK(tau_w(testutil::p4(), p4_parts(), kOnes4).value == 1);
}

TEST_CASE("relaxation dominance and duality inequalities") {
  testutil::Rng rng{43};
  for (int iter = 0; iter < 12; ++iter) {
    int n = 1 + static_cast<int>(rng.below(6));
    Graph g = testutil::random_graph(rng, n);
    Graph h = testutil::random_graph(rng, n);
    WeightVector w(testutil::random_weights(rng, n, 3));
    WeightVector ones = WeightVector::ones(n);

    CHECK(alpha_cap_star_w(g, h, w).value >= alpha_cap_w(g, h, w).value);
    CHECK(alpha_cap_star_w(g, h, ones).value >= gamma_cup_w(g, h, ones).value);
    CHECK(alpha_w(g, w).value >= gamma_w(g, w).value);

    Partition p = testutil::random_partition(rng, n);
    CHECK(nu_w(g, p, w).value >= tau_w(g, p, w).value);
    CHECK(nu_star_w(g, p, w).value >= gamma_w_partition(g, p, w).value);
  }
}

TEST_CASE("theorem condition checker") {
  TheoremConditionReport p4rep =
      check_theorem_conditions(testutil::p4(), p4_parts());
  CHECK(p4rep.domination_hypothesis);
  CHECK(p4rep.fractional_it_exists);

  Graph k2 = build_graph(2, {{0, 1}});
  TheoremConditionReport k2rep =
      check_theorem_conditions(k2, Partition({{0, 1}}, 2));
  CHECK(k2rep.domination_hypothesis);
  CHECK(k2rep.it_exists);

  TheoremConditionReport k3rep =
      check_theorem_conditions(testutil::k3(), k3_singletons());
  CHECK(!k3rep.domination_hypothesis);
  CHECK(!k3rep.it_exists);
  CHECK(!k3rep.fractional_it_exists);
  CHECK(k3rep.tightest_domination == std::vector<int>{0, 1, 2});
}

TEST_CASE("domination hypothesis implies a fractional IT") {
  testutil::Rng rng{44};
  for (int iter = 0; iter < 15; ++iter) {
    int n = 1 + static_cast<int>(rng.below(6));
    Graph g = testutil::random_graph(rng, n, 30);
    Partition p = testutil::random_partition(rng, n);
    TheoremConditionReport rep = check_theorem_conditions(g, p);
    if (rep.domination_hypothesis) CHECK(rep.fractional_it_exists);
  }
}
