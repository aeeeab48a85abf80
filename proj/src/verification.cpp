#include "cliquemdl/verification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>
#include <unordered_set>

#include "cliquemdl/clique_code.hpp"
#include "cliquemdl/clique_search.hpp"
#include "cliquemdl/errors.hpp"
#include "cliquemdl/mdl_test.hpp"
#include "cliquemdl/rng.hpp"

namespace cliquemdl {

namespace {

void guard_kraft(std::uint32_t n) {
  if (n > kMaxKraftNodes)
    throw GuardError("Kraft enumeration refused for n=" + std::to_string(n) + " (limit " +
                     std::to_string(kMaxKraftNodes) + ")");
}

std::vector<Edge> all_pairs(std::uint32_t n) {
  std::vector<Edge> pairs;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

}  // namespace

double kraft_sum(std::uint32_t n, const std::function<Bits(const Graph&)>& codelength) {
  guard_kraft(n);
  double sum = 0.0;
  for_each_graph(n, [&](const Graph& g) { sum += std::exp2(-codelength(g)); });
  return sum;
}

double kraft_sum_null(const NullModel& model, std::uint32_t n) {
  return kraft_sum(n, [&](const Graph& g) { return bound_codelength(model, g); });
}

std::vector<double> kraft_sum_gnm_by_edge_count(std::uint32_t n) {
  guard_kraft(n);
  std::vector<double> sums(pair_count(n) + 1, 0.0);
  const auto model = NullModel::gnm();
  for_each_graph(n, [&](const Graph& g) { sums[g.edge_count()] += std::exp2(-bound_codelength(model, g)); });
  return sums;
}

CliqueCodeKraft kraft_sum_clique_code(const NullModel& model, std::uint32_t n, std::optional<std::uint64_t> m) {
  guard_kraft(n);
  if (model.kind() == NullModel::Kind::GNM && !m)
    throw ConfigError("G(n,m) clique code is defined only for a shared edge count m");
  const auto pairs = all_pairs(n);
  auto pair_index = [&](const Edge& e) {
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), e) - pairs.begin());
  };

  CliqueCodeKraft result;
  std::unordered_set<std::uint64_t> decoded;
  for (std::uint32_t subset_mask = 0; subset_mask < (1u << n); ++subset_mask) {
    std::vector<Node> members;
    for (Node v = 0; v < n; ++v)
      if (subset_mask >> v & 1) members.push_back(v);
    const VertexSubset c(members);

    std::vector<Edge> inside, outside;
    for (const auto& e : pairs) (c.contains(e.u) && c.contains(e.v) ? inside : outside).push_back(e);

    std::optional<std::uint64_t> remainder_edges;
    if (m) {
      if (*m < inside.size() || *m - inside.size() > outside.size()) continue;
      remainder_edges = *m - inside.size();
    }

    for (std::uint64_t rem_mask = 0; rem_mask < (std::uint64_t{1} << outside.size()); ++rem_mask) {
      if (remainder_edges && static_cast<std::uint64_t>(std::popcount(rem_mask)) != *remainder_edges) continue;
      std::vector<Edge> edges = inside;
      for (std::size_t i = 0; i < outside.size(); ++i)
        if (rem_mask >> i & 1) edges.push_back(outside[i]);
      const Graph g(n, edges);

      result.sum += std::exp2(-clique_codelength(g, c, model).total);
      ++result.codewords;

      std::uint64_t graph_mask = 0;
      for (const auto& e : g.edges()) graph_mask |= std::uint64_t{1} << pair_index(e);
      if (!decoded.insert(graph_mask << n | subset_mask).second) result.injective = false;
    }
  }
  return result;
}

Bits clique_star_codelength(const Graph& g, const NullModel& model) {
  const auto cliques = enumerate_all_cliques(g);
  std::vector<Bits> lengths;
  lengths.reserve(cliques.size());
  for (const auto& c : cliques) lengths.push_back(clique_codelength(g, c, model).total);
  return codelength_mix(lengths);
}

std::vector<TailEstimate> mc_tail_check(const NullModel& model, std::uint32_t n, std::uint64_t samples,
                                        std::span<const Bits> ks, std::uint64_t base_seed,
                                        const TailCheckOptions& options) {
  if (samples < kMinTailSamples)
    throw DomainError("tail check needs at least " + std::to_string(kMinTailSamples) + " samples");
  if (ks.empty()) throw DomainError("tail check needs at least one threshold k");
  for (Bits k : ks)
    if (!(k >= 0.0) || std::isinf(k)) throw DomainError("thresholds k must be finite and non-negative");

  std::optional<std::uint64_t> m;
  if (model.kind() == NullModel::Kind::GNM) {
    m = options.m.value_or(pair_count(n) / 2);
    if (*m > pair_count(n)) throw DomainError("m exceeds pair count");
  }
  SearchConfig search;
  search.seeds = options.greedy_seeds ? options.greedy_seeds : std::max<std::uint32_t>(1, n);

  std::vector<Bits> deltas(samples);
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t seed = derive_seed(base_seed, i);
      const Graph g = sample(model, n, m, seed);
      const auto candidates = find_cliques(g, search, seed);
      deltas[i] = test_best_clique(g, candidates, model, 1.0).delta_bits;
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, samples));
  if (threads <= 1) {
    run_range(0, samples);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (samples + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(samples, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
  }

  std::vector<TailEstimate> out;
  out.reserve(ks.size());
  for (Bits k : ks) {
    const auto hits = static_cast<std::uint64_t>(
        std::count_if(deltas.begin(), deltas.end(), [k](Bits d) { return d >= k; }));
    TailEstimate est;
    est.k = k;
    est.samples = samples;
    est.empirical = static_cast<double>(hits) / static_cast<double>(samples);
    est.bound = std::exp2(-k);
    est.std_error = std::sqrt(est.empirical * (1.0 - est.empirical) / static_cast<double>(samples));
    out.push_back(est);
  }
  return out;
}

Graph plant_clique(const Graph& g, const VertexSubset& c) {
  for (Node v : c.members())
    if (v >= g.node_count()) throw RangeError("planted node " + std::to_string(v) + " out of range");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  auto members = c.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.push_back({members[i], members[j]});
  return Graph(g.node_count(), std::move(edges));
}

}  // namespace cliquemdl
