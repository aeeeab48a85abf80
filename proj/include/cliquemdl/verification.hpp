#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cliquemdl/graph.hpp"
#include "cliquemdl/integer_codes.hpp"
#include "cliquemdl/null_models.hpp"

namespace cliquemdl {

inline constexpr std::uint32_t kMaxKraftNodes = 4;
inline constexpr std::uint64_t kMinTailSamples = 1000;

// Sum of 2^-L(G) over every graph on n nodes, n <= 4.
double kraft_sum(std::uint32_t n, const std::function<Bits(const Graph&)>& codelength);

// Kraft sum of the null bound over all graphs of size n. For GNM the bound
// is only a code once m is fixed; see kraft_sum_gnm_by_edge_count.
double kraft_sum_null(const NullModel& model, std::uint32_t n);

// Entry m is the Kraft sum of the GNM bound over graphs with exactly m edges.
std::vector<double> kraft_sum_gnm_by_edge_count(std::uint32_t n);

struct CliqueCodeKraft {
  double sum = 0.0;
  std::uint64_t codewords = 0;
  // Every (subset, remainder) codeword decodes to a distinct (graph, subset).
  bool injective = true;
};

// Kraft sum over the clique code's full codeword set on n nodes: every
// vertex subset C crossed with every remainder on the pairs outside C.
// For GNM the shared edge count m restricts the remainders.
CliqueCodeKraft kraft_sum_clique_code(const NullModel& model, std::uint32_t n,
                                      std::optional<std::uint64_t> m = std::nullopt);

// -log2 of the probability mass of all clique codewords for G, n <= 16.
Bits clique_star_codelength(const Graph& g, const NullModel& model);

struct TailEstimate {
  Bits k = 0.0;
  double empirical = 0.0;
  double bound = 1.0;
  std::uint64_t samples = 0;
  double std_error = 0.0;

  // One-sided: the empirical tail may exceed 2^-k by at most 3 standard errors.
  bool within_bound() const { return empirical <= bound + 3.0 * std_error; }
};

struct TailCheckOptions {
  // Greedy restarts per sample; 0 means one per node.
  std::uint32_t greedy_seeds = 0;
  // Edge count for GNM; defaults to half the pairs.
  std::optional<std::uint64_t> m;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Draws `samples` graphs from the null, runs greedy search plus the best-clique
// test on each and reports the empirical P(delta >= k) for each k. Sample i
// uses derive_seed(base_seed, i), so results do not depend on thread count.
std::vector<TailEstimate> mc_tail_check(const NullModel& model, std::uint32_t n, std::uint64_t samples,
                                        std::span<const Bits> ks, std::uint64_t base_seed,
                                        const TailCheckOptions& options = {});

// G with every pair inside `c` added.
Graph plant_clique(const Graph& g, const VertexSubset& c);

}  // namespace cliquemdl
