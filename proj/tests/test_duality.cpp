#include <doctest.h>

#include "inddom/duality.hpp"
#include "test_util.hpp"

using namespace inddom;

TEST_CASE("greedy certificate hand traces") {
  Graph one(1);
  GreedyCertificate c1 = greedy_alpha_ge_gamma(one, WeightVector({7}));
  CHECK(c1.f == std::vector<long>{7});
  CHECK(c1.independent == VertexSet{0});

  Graph k2 = build_graph(2, {{0, 1}});
  GreedyCertificate c2 = greedy_alpha_ge_gamma(k2, WeightVector({3, 7}));
  CHECK(c2.f == std::vector<long>{3, 4});
  CHECK(c2.independent == VertexSet{1});

  GreedyCertificate c3 =
      greedy_alpha_ge_gamma(testutil::k3(), WeightVector({1, 1, 1}));
  CHECK(c3.f == std::vector<long>{1, 0, 0});
  CHECK(c3.independent == VertexSet{0});
}

TEST_CASE("greedy certificate respects a custom order") {
  Graph k2 = build_graph(2, {{0, 1}});
  GreedyCertificate c =
      greedy_alpha_ge_gamma(k2, WeightVector({3, 7}), std::vector<Vertex>{1, 0});
  CHECK(c.f == std::vector<long>{0, 7});
  CHECK(c.independent == VertexSet{1});
  CHECK_THROWS_AS(
      greedy_alpha_ge_gamma(k2, WeightVector({1, 1}), std::vector<Vertex>{0, 0}),
      ModelError);
}

TEST_CASE("greedy sandwich on random graphs") {
  testutil::Rng rng{51};
  for (int iter = 0; iter < 30; ++iter) {
    int n = 1 + static_cast<int>(rng.below(8));
    Graph g = testutil::random_graph(rng, n);
    WeightVector w(testutil::random_weights(rng, n, 5));
    GreedyCertificate cert = greedy_alpha_ge_gamma(g, w);
    CHECK(gamma_w(g, w).value <= Rational(cert.f_size()));
    CHECK(cert.f_size() <= w.total(cert.independent));
    CHECK(Rational(w.total(cert.independent)) <= alpha_w(g, w).value);
  }
}

TEST_CASE("box decomposition worked example") {
  Partition p({{0, 1}, {2}}, 3);
  RationalVector x = {Rational(1, 2), Rational(1, 4), Rational(3, 4)};
  ConvexDecomposition dec = decompose_box_product(p, x);
  REQUIRE(dec.terms.size() == 3);
  std::map<VertexSet, Rational> terms;
  for (auto& [coeff, tr] : dec.terms) terms[tr] = coeff;
  CHECK(terms[VertexSet{0, 2}] == Rational(1, 2));
  CHECK(terms[VertexSet{1, 2}] == Rational(1, 4));
  CHECK(terms[VertexSet{}] == Rational(1, 4));
}

TEST_CASE("box decomposition degenerate inputs") {
  Partition p({{0, 1}, {2}}, 3);
  ConvexDecomposition ind =
      decompose_box_product(p, {Rational(1), Rational(0), Rational(1)});
  REQUIRE(ind.terms.size() == 1);
  CHECK(ind.terms[0].first == 1);
  CHECK(ind.terms[0].second == VertexSet{0, 2});

  ConvexDecomposition zero =
      decompose_box_product(p, {Rational(0), Rational(0), Rational(0)});
  REQUIRE(zero.terms.size() == 1);
  CHECK(zero.terms[0].second.empty());

  CHECK_THROWS_AS(
      decompose_box_product(p, {Rational(3, 4), Rational(1, 2), Rational(0)}),
      ModelError);
  CHECK_THROWS_AS(
      decompose_box_product(p, {Rational(-1, 2), Rational(0), Rational(0)}),
      ModelError);
}

TEST_CASE("box decomposition reconstructs random inputs") {
  testutil::Rng rng{52};
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + static_cast<int>(rng.below(8));
    Partition p = testutil::random_partition(rng, n);
    RationalVector x(static_cast<size_t>(n), Rational(0));
    for (const VertexSet& blk : p.blocks()) {
      long den = 1 + static_cast<long>(rng.below(12));
      long left = den;
      for (Vertex v : blk) {
        long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(left) + 1));
        x[static_cast<size_t>(v)] = Rational(num, den);
        x[static_cast<size_t>(v)].canonicalize();
        left -= num;
      }
    }
    ConvexDecomposition dec = decompose_box_product(p, x);
    Rational total(0);
    RationalVector rebuilt(static_cast<size_t>(n), Rational(0));
    size_t max_terms = 1;
    for (const VertexSet& blk : p.blocks()) max_terms += blk.size();
    CHECK(dec.terms.size() <= max_terms);
    for (auto& [coeff, tr] : dec.terms) {
      CHECK(coeff > 0);
      total += coeff;
      std::map<int, int> per_block;
      for (Vertex v : tr) CHECK(++per_block[p.block_of(v)] == 1);
      for (Vertex v : tr) rebuilt[static_cast<size_t>(v)] += coeff;
    }
    CHECK(total == 1);
    CHECK(rebuilt == x);
  }
}

TEST_CASE("unit mass normalization") {
  WeightVector w = WeightVector::ones(4);
  ColumnMass x{{VertexSet{0, 2}, Rational(3, 4)}};
  ColumnMass out = normalize_unit_mass(x, w);
  CHECK(out[VertexSet{0, 2}] == Rational(1, 2));
  CHECK(out[VertexSet{0}] == Rational(1, 4));
  CHECK(out[VertexSet{2}] == Rational(1, 4));

  ColumnMass already{{VertexSet{1}, Rational(1)}};
  CHECK(normalize_unit_mass(already, w) == already);

  ColumnMass empty;
  ColumnMass res = normalize_unit_mass(empty, w);
  CHECK(res[VertexSet{}] == 1);
}

TEST_CASE("normalization preserves value and block activity") {
  testutil::Rng rng{53};
  for (int iter = 0; iter < 20; ++iter) {
    int n = 1 + static_cast<int>(rng.below(6));
    Graph g = testutil::random_graph(rng, n);
    Partition p = testutil::random_partition(rng, n);
    WeightVector w(testutil::random_weights(rng, n, 4));
    NuStarData data = nu_star_w_full(g, p, w);

    ColumnMass mass;
    for (size_t i = 0; i < data.family.size(); ++i)
      if (data.outcome.primal[i] > 0) mass[data.family[i]] = data.outcome.primal[i];
    ColumnMass unit = normalize_unit_mass(mass, w);

    auto stats = [&](const ColumnMass& cm) {
      Rational total(0), value(0);
      RationalVector activity(static_cast<size_t>(p.block_count()), Rational(0));
      for (auto& [col, m] : cm) {
        total += m;
        value += m * Rational(w.total(col));
        for (Vertex v : col) activity[static_cast<size_t>(p.block_of(v))] += m;
      }
      return std::tuple{total, value, activity};
    };
    auto [t0, v0, a0] = stats(mass);
    auto [t1, v1, a1] = stats(unit);
    CHECK(t1 == 1);
    CHECK(v1 == v0);
    CHECK(a1 == a0);
    for (const Rational& act : a1) CHECK(act <= 1);
  }
}

TEST_CASE("domination certificate worked examples") {
  Graph k3 = testutil::k3();
  Partition singles({{0}, {1}, {2}}, 3);
  WeightVector ones3 = WeightVector::ones(3);
  DominationCertificate c = build_domination_certificate(k3, singles, ones3);
  CHECK(c.bound == 1);
  long gsum = 0, hsum = 0;
  for (long x : c.g) gsum += x;
  for (long x : c.h) hsum += x;
  CHECK(gsum + hsum == 1);
  CHECK(verify_certificate(k3, singles, ones3, c, c.bound).empty());

  Graph p4 = testutil::p4();
  Partition parts({{0, 3}, {1, 2}}, 4);
  WeightVector ones4 = WeightVector::ones(4);
  DominationCertificate cp = build_domination_certificate(p4, parts, ones4);
  CHECK(cp.bound == 2);
  CHECK(verify_certificate(p4, parts, ones4, cp, cp.bound).empty());

  WeightVector zeros(std::vector<long>{0, 0, 0, 0});
  DominationCertificate cz = build_domination_certificate(p4, parts, zeros);
  CHECK(cz.bound == 0);
  CHECK(cz.g == std::vector<long>{0, 0});
  CHECK(cz.h == std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("verifier catches a broken certificate") {
  Graph k3 = testutil::k3();
  Partition singles({{0}, {1}, {2}}, 3);
  WeightVector ones3 = WeightVector::ones(3);
  DominationCertificate c = build_domination_certificate(k3, singles, ones3);
  c.h.assign(3, 0);
  auto bad = verify_certificate(k3, singles, ones3, c, c.bound);
  CHECK(bad.size() == 3);  // every vertex under-dominated

  DominationCertificate hand;
  hand.g = {1, 1};
  hand.h = {0, 0, 0, 0};
  hand.bound = 2;
  Graph p4 = testutil::p4();
  Partition parts({{0, 3}, {1, 2}}, 4);
  CHECK(verify_certificate(p4, parts, WeightVector::ones(4), hand, Rational(2))
            .empty());
}

TEST_CASE("certificate pipeline on random instances") {
  testutil::Rng rng{54};
  for (int iter = 0; iter < 25; ++iter) {
    int n = 1 + static_cast<int>(rng.below(7));
    Graph g = testutil::random_graph(rng, n);
    Partition p = testutil::random_partition(rng, n);
    WeightVector w(testutil::random_weights(rng, n, 4));
    DominationCertificate cert = build_domination_certificate(g, p, w);
    CHECK(verify_certificate(g, p, w, cert, cert.bound).empty());
    long total = 0;
    for (long x : cert.g) total += x;
    for (long x : cert.h) total += x;
    CHECK(gamma_w_partition(g, p, w).value <= Rational(total));
    CHECK(Rational(total) <= nu_star_w(g, p, w).value);
  }
}

TEST_CASE("certificate json round trip") {
  Graph k3 = testutil::k3();
  Partition singles({{0}, {1}, {2}}, 3);
  WeightVector ones3 = WeightVector::ones(3);
  DominationCertificate c = build_domination_certificate(k3, singles, ones3);
  DominationCertificate back = certificate_from_json(certificate_to_json(c));
  CHECK(back.g == c.g);
  CHECK(back.h == c.h);
  CHECK(back.bound == c.bound);
  CHECK(back.audit.i0 == c.audit.i0);
  CHECK(verify_certificate(k3, singles, ones3, back, back.bound).empty());
}
