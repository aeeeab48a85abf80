#include "cliquemdl/clique_search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "cliquemdl/errors.hpp"
#include "cliquemdl/rng.hpp"

namespace cliquemdl {

namespace {

class NodeBits {
 public:
  explicit NodeBits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(Node v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(Node v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool test(Node v) const { return words_[v / 64] >> (v % 64) & 1; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  std::size_t count_and(const NodeBits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  NodeBits operator&(const NodeBits& o) const {
    NodeBits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  NodeBits without(const NodeBits& o) const {
    NodeBits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t w = words_[i]; w; w &= w - 1)
        f(static_cast<Node>(i * 64 + std::countr_zero(w)));
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<NodeBits> adjacency_bits(const Graph& g) {
  std::vector<NodeBits> adj(g.node_count(), NodeBits(g.node_count()));
  for (const auto& e : g.edges()) {
    adj[e.u].set(e.v);
    adj[e.v].set(e.u);
  }
  return adj;
}

VertexSubset checked(const Graph& g, std::vector<Node> members) {
  VertexSubset c(std::move(members));
  if (!is_clique(g, c)) throw std::logic_error("clique search produced a non-clique " + c.to_string());
  return c;
}

VertexSubset grow_clique(const Graph& g, Node start, std::vector<char>& in_candidates) {
  std::vector<Node> clique{start};
  auto first = g.neighbors(start);
  std::vector<Node> candidates(first.begin(), first.end());
  for (Node v : candidates) in_candidates[v] = 1;

  while (!candidates.empty()) {
    Node pick = candidates.front();
    std::size_t pick_score = 0;
    bool have = false;
    for (Node v : candidates) {
      std::size_t score = 0;
      for (Node w : g.neighbors(v)) score += in_candidates[w];
      if (!have || score > pick_score) {
        pick = v;
        pick_score = score;
        have = true;
      }
    }
    clique.push_back(pick);
    std::vector<Node> next;
    next.reserve(pick_score);
    for (Node v : candidates) {
      if (v != pick && g.has_edge(v, pick)) next.push_back(v); else in_candidates[v] = 0;
    }
    candidates = std::move(next);
  }
  return checked(g, std::move(clique));
}

struct ExactSearch {
  const std::vector<NodeBits>& adj;
  std::vector<Node> current;
  std::vector<Node> best;
  bool found = false;

  void offer() {
    std::vector<Node> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    if (!found || sorted.size() > best.size() || (sorted.size() == best.size() && sorted < best)) {
      best = std::move(sorted);
      found = true;
    }
  }

  void expand(NodeBits candidates, NodeBits excluded) {
    if (candidates.none() && excluded.none()) {
      offer();
      return;
    }
    // Strict bound: equal-size cliques are still visited for the tie-break.
    if (found && current.size() + candidates.count() < best.size()) return;

    Node pivot = 0;
    std::size_t pivot_score = 0;
    bool have = false;
    auto consider = [&](Node u) {
      std::size_t s = candidates.count_and(adj[u]);
      if (!have || s > pivot_score) {
        pivot = u;
        pivot_score = s;
        have = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    NodeBits branch = candidates.without(adj[pivot]);
    branch.for_each([&](Node v) {
      current.push_back(v);
      expand(candidates & adj[v], excluded & adj[v]);
      current.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  }
};

void list_cliques(const std::vector<NodeBits>& adj, std::vector<Node>& current, const NodeBits& extendable,
                  std::vector<VertexSubset>& out) {
  out.emplace_back(current);
  extendable.for_each([&](Node v) {
    NodeBits next = extendable & adj[v];
    // Only extend upwards so each subset is produced once.
    for (Node w = 0; w <= v; ++w) next.reset(w);
    current.push_back(v);
    list_cliques(adj, current, next, out);
    current.pop_back();
  });
}

}  // namespace

std::vector<VertexSubset> greedy_cliques(const Graph& g, std::uint32_t seeds, std::uint64_t seed) {
  const std::uint32_t n = g.node_count();
  if (n == 0 || seeds == 0) return {};

  std::vector<Node> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Node{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Node a, Node b) { return g.degree(a) > g.degree(b); });

  std::vector<Node> starts;
  starts.reserve(seeds);
  for (std::uint32_t i = 0; i < seeds && i < n; ++i) starts.push_back(by_degree[i]);
  if (seeds > n) {
    Rng rng(seed);
    std::vector<Node> perm(n);
    while (starts.size() < seeds) {
      std::iota(perm.begin(), perm.end(), Node{0});
      for (std::uint32_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
      for (Node v : perm) {
        if (starts.size() == seeds) break;
        starts.push_back(v);
      }
    }
  }

  std::vector<char> in_candidates(n, 0);
  std::vector<VertexSubset> found;
  std::set<VertexSubset> seen;
  for (Node s : starts) {
    VertexSubset c = grow_clique(g, s, in_candidates);
    if (seen.insert(c).second) found.push_back(std::move(c));
  }
  return found;
}

VertexSubset exact_max_clique(const Graph& g, std::uint32_t max_exact_n) {
  const std::uint32_t n = g.node_count();
  if (n > max_exact_n)
    throw GuardError("exact clique search refused for n=" + std::to_string(n) + " (limit " +
                     std::to_string(max_exact_n) + "); use greedy search");
  if (n == 0) return {};
  const auto adj = adjacency_bits(g);
  NodeBits all(n);
  for (Node v = 0; v < n; ++v) all.set(v);
  ExactSearch search{adj, {}, {}, false};
  search.expand(all, NodeBits(n));
  return checked(g, std::move(search.best));
}

std::vector<VertexSubset> enumerate_all_cliques(const Graph& g) {
  const std::uint32_t n = g.node_count();
  if (n > kMaxCliqueEnumerationNodes)
    throw GuardError("clique enumeration refused for n=" + std::to_string(n) + " (limit " +
                     std::to_string(kMaxCliqueEnumerationNodes) + ")");
  const auto adj = adjacency_bits(g);
  NodeBits all(n);
  for (Node v = 0; v < n; ++v) all.set(v);
  std::vector<VertexSubset> out;
  std::vector<Node> current;
  list_cliques(adj, current, all, out);
  for (const auto& c : out)
    if (!is_clique(g, c)) throw std::logic_error("clique enumeration produced a non-clique");
  return out;
}

std::vector<VertexSubset> find_cliques(const Graph& g, const SearchConfig& config, std::uint64_t seed) {
  if (config.strategy == SearchConfig::Strategy::Exact) return {exact_max_clique(g, config.max_exact_n)};
  if (config.seeds < 1) throw ConfigError("greedy search needs at least one seed");
  auto found = greedy_cliques(g, config.seeds, seed);
  // Only the node-free graph has no maximal clique to grow; its sole clique is empty.
  if (found.empty()) found.emplace_back();
  return found;
}

}  // namespace cliquemdl
