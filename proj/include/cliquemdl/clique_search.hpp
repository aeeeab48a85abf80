#pragma once

#include <cstdint>
#include <vector>

#include "cliquemdl/graph.hpp"

namespace cliquemdl {

// Search only affects the power of the test: a missed clique can never cause
// a false rejection.
struct SearchConfig {
  enum class Strategy { Greedy, Exact };
  Strategy strategy = Strategy::Greedy;
  std::uint32_t seeds = 1;
  std::uint32_t max_exact_n = 64;
};

inline constexpr std::uint32_t kMaxCliqueEnumerationNodes = 16;

// Grows one clique from each of `seeds` start vertices (highest degree first,
// ties by index; past n starts, seeded shuffles of the vertex set). Each step
// adds the common neighbour with the most neighbours among the remaining
// candidates, lowest index on ties. Returns distinct maximal cliques in order
// of discovery.
std::vector<VertexSubset> greedy_cliques(const Graph& g, std::uint32_t seeds, std::uint64_t seed);

// Maximum clique by Bron-Kerbosch with pivoting plus a size bound. Among
// maximum cliques the lexicographically smallest is returned. Throws
// GuardError when n exceeds max_exact_n.
VertexSubset exact_max_clique(const Graph& g, std::uint32_t max_exact_n = 64);

// Every clique including the empty set and singletons, each once. n <= 16.
std::vector<VertexSubset> enumerate_all_cliques(const Graph& g);

// Candidate list for a test according to `config`. Never empty.
std::vector<VertexSubset> find_cliques(const Graph& g, const SearchConfig& config, std::uint64_t seed);

}  // namespace cliquemdl
