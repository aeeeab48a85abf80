#include <gtest/gtest.h>

#include <cmath>

#include "cliquemdl/clique_code.hpp"
#include "cliquemdl/clique_search.hpp"
#include "cliquemdl/errors.hpp"
#include "cliquemdl/verification.hpp"
#include "oracles.hpp"

using namespace cliquemdl;

TEST(KraftSum, Examples) {
  EXPECT_NEAR(kraft_sum_null(NullModel::uniform(), 3), 1.0, 1e-9);
  EXPECT_NEAR(kraft_sum_clique_code(NullModel::uniform(), 3).sum, 1.0, 1e-9);
  EXPECT_NEAR(kraft_sum_null(NullModel::gnp(0.3), 4), 1.0, 1e-9);
  EXPECT_THROW(kraft_sum_null(NullModel::uniform(), 5), GuardError);
  EXPECT_THROW(kraft_sum_clique_code(NullModel::gnm(), 3), ConfigError);
}

TEST(KraftSum, CliqueCodeCountsEveryCodeword) {
  // n=3, by clique size k: C(3,k) * 2^(3 - k(k-1)/2) = 8 + 24 + 12 + 1.
  EXPECT_EQ(kraft_sum_clique_code(NullModel::uniform(), 3).codewords, 45u);
}

TEST(KraftSum, AllModelsSmallN) {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    EXPECT_NEAR(kraft_sum_null(NullModel::uniform(), n), 1.0, 1e-9);
    for (double p : {0.1, 0.3, 0.5, 0.9}) {
      EXPECT_NEAR(kraft_sum_null(NullModel::gnp(p), n), 1.0, 1e-9);
      EXPECT_NEAR(kraft_sum_clique_code(NullModel::gnp(p), n).sum, 1.0, 1e-9);
    }
    for (double s : kraft_sum_gnm_by_edge_count(n)) EXPECT_NEAR(s, 1.0, 1e-9);
  }
}

TEST(CliqueStar, EmptyGraphHasSingleCodeword) {
  const Graph g;
  EXPECT_EQ(clique_star_codelength(g, NullModel::uniform()), clique_codelength(g, {}, NullModel::uniform()).total);
}

TEST(CliqueStar, TriangleBeatsEveryCodeword) {
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto cliques = enumerate_all_cliques(k3);
  ASSERT_EQ(cliques.size(), 8u);
  double mass = 0.0;
  double shortest = INFINITY;
  for (const auto& c : cliques) {
    const double l = clique_codelength(k3, c, NullModel::uniform()).total;
    mass += std::exp2(-l);
    shortest = std::min(shortest, l);
  }
  const Bits star = clique_star_codelength(k3, NullModel::uniform());
  EXPECT_NEAR(star, -std::log2(mass), 1e-12);
  EXPECT_LT(star, shortest);
}

TEST(CliqueStar, BoundedByEveryCliqueCodeword) {
  Rng rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::uint32_t>(uniform_below(rng, 7));
    const Graph g = oracle::random_graph(n, uniform_unit(rng), rng);
    for (auto model : {NullModel::uniform(), NullModel::gnm(), NullModel::gnp(0.3)}) {
      const Bits star = clique_star_codelength(g, model);
      for (const auto& c : enumerate_all_cliques(g))
        EXPECT_LE(star, clique_codelength(g, c, model).total + 1e-9);
    }
  }
}

TEST(CliqueStar, Guard) { EXPECT_THROW(clique_star_codelength(Graph(17, std::vector<Edge>{}), NullModel::uniform()), GuardError); }

TEST(TailCheck, ParameterValidation) {
  const std::vector<Bits> ks{1.0};
  EXPECT_THROW(mc_tail_check(NullModel::uniform(), 10, 999, ks, 0), DomainError);
  EXPECT_THROW(mc_tail_check(NullModel::uniform(), 10, 1000, std::vector<Bits>{}, 0), DomainError);
  EXPECT_THROW(mc_tail_check(NullModel::uniform(), 10, 1000, std::vector<Bits>{-1.0}, 0), DomainError);
}

TEST(TailCheck, ZeroThresholdIsTrivial) {
  const std::vector<Bits> ks{0.0};
  const auto rows = mc_tail_check(NullModel::uniform(), 10, 2000, ks, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].bound, 1.0);
  EXPECT_LE(rows[0].empirical, 1.0);
  EXPECT_TRUE(rows[0].within_bound());
}

TEST(TailCheck, StandardErrorInvariant) {
  const std::vector<Bits> ks{1, 2, 3, 4, 5, 6, 7, 8};
  for (const auto& row : mc_tail_check(NullModel::gnp(0.7), 12, 5000, ks, 2)) {
    EXPECT_GE(row.empirical, 0.0);
    EXPECT_LE(row.empirical, 1.0);
    EXPECT_EQ(row.samples, 5000u);
    EXPECT_DOUBLE_EQ(row.std_error, std::sqrt(row.empirical * (1 - row.empirical) / 5000));
    EXPECT_EQ(row.bound, std::exp2(-row.k));
  }
}

TEST(TailCheck, FairCoinGnpMatchesUniform) {
  const std::vector<Bits> ks{1, 2, 3, 4, 5, 6, 7, 8};
  const auto a = mc_tail_check(NullModel::uniform(), 20, 3000, ks, 77);
  const auto b = mc_tail_check(NullModel::gnp(0.5), 20, 3000, ks, 77);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].empirical, b[i].empirical);
    EXPECT_EQ(a[i].std_error, b[i].std_error);
  }
}

TEST(TailCheck, IndependentOfThreadCount) {
  const std::vector<Bits> ks{1, 3, 5, 7};
  TailCheckOptions one, many;
  one.threads = 1;
  many.threads = 7;
  for (auto model : {NullModel::uniform(), NullModel::gnm(), NullModel::gnp(0.8)}) {
    const auto a = mc_tail_check(model, 14, 4000, ks, 9, one);
    const auto b = mc_tail_check(model, 14, 4000, ks, 9, many);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].empirical, b[i].empirical) << model.to_string();
  }
}

TEST(TailCheck, DenseGnpProducesPositiveGainsWithinBound) {
  // At p = 0.8 large cliques are common, so the upper thresholds are actually
  // exercised rather than passing with zero hits.
  const std::vector<Bits> ks{1, 2, 3, 4, 5, 6, 7, 8};
  const auto rows = mc_tail_check(NullModel::gnp(0.8), 10, 20000, ks, 3);
  for (const auto& row : rows) EXPECT_TRUE(row.within_bound()) << "k=" << row.k;
}

TEST(TailEstimate, ThreeSigmaGate) {
  TailEstimate row{3.0, 0.2, 0.125, 1000, std::sqrt(0.2 * 0.8 / 1000)};
  EXPECT_FALSE(row.within_bound());
  row.empirical = 0.13;
  row.std_error = std::sqrt(0.13 * 0.87 / 1000);
  EXPECT_TRUE(row.within_bound());
}

TEST(PlantClique, AddsAllInternalPairs) {
  const Graph g(5, {{0, 4}});
  const Graph planted = plant_clique(g, {1, 2, 3});
  EXPECT_TRUE(is_clique(planted, {1, 2, 3}));
  EXPECT_EQ(planted.edge_count(), 4u);
  EXPECT_THROW(plant_clique(g, {4, 5}), RangeError);
}
