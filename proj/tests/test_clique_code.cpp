#include <gtest/gtest.h>

#include <cmath>

#include "cliquemdl/clique_code.hpp"
#include "cliquemdl/errors.hpp"
#include "cliquemdl/verification.hpp"
#include "oracles.hpp"

using namespace cliquemdl;

namespace {

Graph complete_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

VertexSubset first_k(std::uint32_t k) {
  std::vector<Node> m(k);
  for (Node i = 0; i < k; ++i) m[i] = i;
  return VertexSubset(m);
}

}  // namespace

TEST(CliqueCodelength, WholeK5) {
  const auto parts = clique_codelength(complete_graph(5), first_k(5), NullModel::uniform());
  EXPECT_NEAR(parts.size_bits, std::log2(6.0), 1e-12);
  EXPECT_EQ(parts.subset_bits, 0.0);
  EXPECT_EQ(parts.remainder_bits, 0.0);
  EXPECT_NEAR(parts.total, 2.584962500721156, 1e-12);
}

TEST(CliqueCodelength, EmptyCliqueIsPureOverhead) {
  const Graph g(5, {{0, 1}, {3, 4}});
  const auto parts = clique_codelength(g, {}, NullModel::uniform());
  EXPECT_NEAR(parts.total, std::log2(6.0) + 10.0, 1e-12);
  EXPECT_NEAR(delta(g, {}, NullModel::uniform()), -std::log2(6.0), 1e-12);
}

TEST(CliqueCodelength, TriangleWithPendant) {
  const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto parts = clique_codelength(g, {0, 1, 2}, NullModel::uniform());
  EXPECT_NEAR(parts.size_bits, std::log2(5.0), 1e-12);
  EXPECT_NEAR(parts.subset_bits, 2.0, 1e-12);
  EXPECT_EQ(parts.remainder_bits, 3.0);
  EXPECT_NEAR(parts.total, 7.321928094887362, 1e-12);
}

TEST(CliqueCodelength, PartsSumExactly) {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + uniform_below(rng, 30));
    const Graph g = oracle::random_graph(n, uniform_unit(rng), rng);
    for (auto model : {NullModel::uniform(), NullModel::gnm(), NullModel::gnp(0.2)}) {
      const auto parts = clique_codelength(g, {0}, model);
      EXPECT_EQ(parts.total, parts.size_bits + parts.subset_bits + parts.remainder_bits);
      EXPECT_GE(parts.size_bits, 0.0);
      EXPECT_GE(parts.subset_bits, 0.0);
      EXPECT_GE(parts.remainder_bits, 0.0);
    }
  }
}

TEST(CliqueCodelength, UniformClosedForm) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + uniform_below(rng, 30));
    const auto k = static_cast<std::uint32_t>(uniform_below(rng, n + 1));
    const Graph g = oracle::readd_pairs(oracle::random_graph(n, 0.4, rng), [&] {
      std::vector<Node> m(k);
      for (Node i = 0; i < k; ++i) m[i] = i;
      return m;
    }());
    const double expected = std::log2(n + 1.0) + oracle::log2_binomial_big(n, k) +
                            static_cast<double>(pair_count(n) - pair_count(k));
    EXPECT_NEAR(clique_codelength(g, first_k(k), NullModel::uniform()).total, expected, 1e-9);
  }
}

TEST(CliqueCodelength, GnpAndGnmRemainders) {
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
  const double p = 0.25;
  // q = 10 - 3 = 7 pairs remain, of which m' = 1 is an edge.
  const auto gnp = clique_codelength(g, {0, 1, 2}, NullModel::gnp(p));
  EXPECT_NEAR(gnp.remainder_bits, -std::log2(p) - 6 * std::log2(1 - p), 1e-12);
  const auto gnm = clique_codelength(g, {0, 1, 2}, NullModel::gnm());
  EXPECT_NEAR(gnm.remainder_bits, std::log2(7.0), 1e-12);
}

TEST(CliqueCodelength, AlternativeSizeCode) {
  const auto parts = clique_codelength(complete_graph(5), first_k(5), NullModel::uniform(), IntegerCode::elias_gamma());
  EXPECT_EQ(parts.size_bits, 5.0);  // gamma codeword of 6
}

TEST(CliqueCodelength, Errors) {
  const Graph path(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(clique_codelength(path, {0, 1, 2}, NullModel::uniform()), PreconditionError);
  EXPECT_THROW(clique_codelength(path, {0, 3}, NullModel::uniform()), RangeError);
  EXPECT_THROW(delta(path, {0, 2}, NullModel::uniform()), PreconditionError);
}

TEST(Delta, K5AndPlantedClique) {
  EXPECT_NEAR(delta(complete_graph(5), first_k(5), NullModel::uniform()), 7.415037499278844, 1e-12);

  Rng rng(2024);
  const Graph g = plant_clique(oracle::random_graph(50, 0.5, rng), first_k(12));
  EXPECT_NEAR(delta(g, first_k(12), NullModel::uniform()), 23.506601338942644, 1e-9);
  EXPECT_NEAR(delta(g, first_k(12), NullModel::uniform()), oracle::uniform_delta_formula(50, 12), 1e-9);
}

TEST(Delta, IncrementFormulaUniform) {
  const Graph k50 = complete_graph(50);
  for (std::uint32_t k = 2; k <= 49; ++k) {
    const double step = delta(k50, first_k(k + 1), NullModel::uniform()) - delta(k50, first_k(k), NullModel::uniform());
    EXPECT_NEAR(step, k - std::log2((50.0 - k) / (k + 1.0)), 1e-9) << "k=" << k;
  }
}

TEST(Delta, SubcliqueDominanceAboveBreakEven) {
  // Break-even: the smallest k whose clique has non-negative gain.
  const std::uint32_t n = 30;
  std::uint32_t break_even = 0;
  while (oracle::uniform_delta_formula(n, break_even) < 0) ++break_even;

  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t k = break_even + static_cast<std::uint32_t>(uniform_below(rng, n - break_even + 1));
    const Graph g = plant_clique(oracle::random_graph(n, 0.5, rng), first_k(k));
    const double full = delta(g, first_k(k), NullModel::uniform());
    // Every subclique of the planted one, enumerated by size via prefixes and
    // random subsets.
    for (std::uint32_t j = 0; j < k; ++j) {
      EXPECT_GE(full, delta(g, first_k(j), NullModel::uniform())) << "k=" << k << " j=" << j;
      std::vector<Node> members(k);
      for (Node i = 0; i < k; ++i) members[i] = i;
      for (std::uint32_t i = k - 1; i > 0; --i) std::swap(members[i], members[uniform_below(rng, i + 1)]);
      members.resize(j);
      EXPECT_GE(full, delta(g, VertexSubset(members), NullModel::uniform()));
    }
  }
}

TEST(CliqueCodeKraft, CompleteAndDecodable) {
  for (std::uint32_t n = 0; n <= 4; ++n) {
    for (auto model : {NullModel::uniform(), NullModel::gnp(0.1), NullModel::gnp(0.5), NullModel::gnp(0.9)}) {
      const auto kraft = kraft_sum_clique_code(model, n);
      EXPECT_NEAR(kraft.sum, 1.0, 1e-9) << model.to_string() << " n=" << n;
      EXPECT_TRUE(kraft.injective);
    }
  }
}

TEST(CliqueCodeKraft, GnmIsSubProbability) {
  for (std::uint32_t n = 0; n <= 4; ++n)
    for (std::uint64_t m = 0; m <= pair_count(n); ++m) {
      const auto kraft = kraft_sum_clique_code(NullModel::gnm(), n, m);
      EXPECT_LE(kraft.sum, 1.0 + 1e-12);
      EXPECT_GT(kraft.sum, 0.0);
      EXPECT_TRUE(kraft.injective);
    }
}
