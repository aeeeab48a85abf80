#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cliquemdl {

using Node = std::uint32_t;

// Unordered node pair stored with first < second.
struct Edge {
  Node u;
  Node v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Number of unordered node pairs on n nodes, n(n-1)/2.
std::uint64_t pair_count(std::uint64_t n) noexcept;

// Strictly increasing list of distinct node indices.
class VertexSubset {
 public:
  VertexSubset() = default;
  // Sorts and validates; throws DomainError on duplicates.
  explicit VertexSubset(std::vector<Node> members);
  VertexSubset(std::initializer_list<Node> members);

  std::span<const Node> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Node v) const noexcept;
  // Number of pairs inside the subset, k(k-1)/2.
  std::uint64_t internal_pairs() const noexcept { return pair_count(members_.size()); }

  std::string to_string() const;  // "{0,1,2}"

  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;
  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<Node> members_;
};

// Simple undirected graph on nodes 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  // Self-loops and out-of-range endpoints throw; duplicates are merged.
  Graph(std::uint32_t n, std::vector<Edge> edges);
  Graph(std::uint32_t n, std::initializer_list<std::pair<Node, Node>> edges);

  std::uint32_t node_count() const noexcept { return n_; }
  std::uint64_t edge_count() const noexcept { return edges_.size(); }
  // Canonical order: lexicographic on (u, v) with u < v.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Node> neighbors(Node v) const;
  std::size_t degree(Node v) const { return neighbors(v).size(); }
  bool has_edge(Node a, Node b) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Node a, Node b) noexcept {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;
  std::unordered_set<std::uint64_t> index_;
};

// Edge-list text: "u v" per line, '#' comments, optional leading "n <count>".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Emits "n <count>" followed by sorted "u v" lines.
std::string to_edge_list(const Graph& g);

bool is_clique(const Graph& g, const VertexSubset& c);

// Drops every pair inside c. Throws PreconditionError if c is not a clique.
Graph remove_clique_edges(const Graph& g, const VertexSubset& c);

inline constexpr std::uint32_t kMaxEnumeratedNodes = 6;

// All 2^pair_count(n) labeled graphs on n nodes, n <= 6.
void for_each_graph(std::uint32_t n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_graphs(std::uint32_t n);

}  // namespace cliquemdl

template <>
struct std::hash<cliquemdl::Graph> {
  std::size_t operator()(const cliquemdl::Graph& g) const noexcept;
};
