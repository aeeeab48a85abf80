#include "cliquemdl/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>

#include "cliquemdl/errors.hpp"

namespace cliquemdl {

std::uint64_t pair_count(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

VertexSubset::VertexSubset(std::vector<Node> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw DomainError("vertex subset contains a repeated node");
}

VertexSubset::VertexSubset(std::initializer_list<Node> members)
    : VertexSubset(std::vector<Node>(members)) {}

bool VertexSubset::contains(Node v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

Graph::Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
  for (auto& e : edges) {
    if (e.u == e.v) throw DomainError("self-loop on node " + std::to_string(e.u));
    if (e.u >= n || e.v >= n)
      throw RangeError("edge endpoint out of range for n=" + std::to_string(n));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  index_.reserve(edges_.size());
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    index_.insert(key(e.u, e.v));
  }
  // Canonical edge order leaves every adjacency list sorted.
}

Graph::Graph(std::uint32_t n, std::initializer_list<std::pair<Node, Node>> edges)
    : Graph(n, [&] {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto [u, v] : edges) out.push_back({u, v});
        return out;
      }()) {}

std::span<const Node> Graph::neighbors(Node v) const {
  if (v >= n_) throw RangeError("node " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

bool Graph::has_edge(Node a, Node b) const noexcept {
  if (a == b || a >= n_ || b >= n_) return false;
  if (a > b) std::swap(a, b);
  return index_.contains(key(a, b));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint32_t> parse_index(std::string_view tok) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::optional<std::uint32_t> declared_n;
  std::vector<Edge> edges;
  std::uint64_t max_seen = 0;
  bool any_edge = false;
  bool seen_data = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "n") {
      if (seen_data) throw ParseError(line_no, "node-count directive must precede all edges");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      declared_n = parse_index(tokens[1]);
      if (!declared_n) throw ParseError(line_no, "malformed node count '" + std::string(tokens[1]) + "'");
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (tokens.size() != 2) throw ParseError(line_no, "expected two node indices");
    auto u = parse_index(tokens[0]);
    auto v = parse_index(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "malformed node index");
    if (*u == *v) throw ParseError(line_no, "self-loop " + std::to_string(*u) + " (simple graphs only)");
    if (declared_n && (*u >= *declared_n || *v >= *declared_n))
      throw RangeError("line " + std::to_string(line_no) + ": node index exceeds declared n=" +
                       std::to_string(*declared_n));
    max_seen = std::max<std::uint64_t>(max_seen, std::max(*u, *v));
    any_edge = true;
    edges.push_back({*u, *v});
  }
  std::uint64_t n = declared_n ? *declared_n : (any_edge ? max_seen + 1 : 0);
  if (n > UINT32_MAX) throw RangeError("node count exceeds 32-bit range");
  return Graph(static_cast<std::uint32_t>(n), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.node_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSubset& c) {
  auto members = c.members();
  for (Node v : members)
    if (v >= g.node_count())
      throw RangeError("clique member " + std::to_string(v) + " out of range for n=" +
                       std::to_string(g.node_count()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.has_edge(members[i], members[j])) return false;
  return true;
}

Graph remove_clique_edges(const Graph& g, const VertexSubset& c) {
  if (!is_clique(g, c)) throw PreconditionError("subset " + c.to_string() + " is not a clique");
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - c.internal_pairs());
  for (const auto& e : g.edges())
    if (!(c.contains(e.u) && c.contains(e.v))) kept.push_back(e);
  return Graph(g.node_count(), std::move(kept));
}

void for_each_graph(std::uint32_t n, const std::function<void(const Graph&)>& visit) {
  if (n > kMaxEnumeratedNodes)
    throw GuardError("graph enumeration refused for n=" + std::to_string(n) + " (limit " +
                     std::to_string(kMaxEnumeratedNodes) + ")");
  std::vector<Edge> pairs;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    visit(Graph(n, edges));
  }
}

std::vector<Graph> enumerate_graphs(std::uint32_t n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cliquemdl

std::size_t std::hash<cliquemdl::Graph>::operator()(const cliquemdl::Graph& g) const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(g.node_count());
  for (const auto& e : g.edges()) {
    std::uint64_t k = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    h ^= std::hash<std::uint64_t>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
