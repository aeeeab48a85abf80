#include "cliquemdl/null_models.hpp"

#include <charconv>
#include <cmath>
#include <unordered_set>

#include "cliquemdl/errors.hpp"
#include "cliquemdl/rng.hpp"

namespace cliquemdl {

NullModel NullModel::gnp(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("G(n,p) requires 0 < p < 1");
  return NullModel(Kind::GNP, p);
}

NullModel NullModel::parse(std::string_view spec) {
  if (spec == "uniform") return uniform();
  if (spec == "gnm") return gnm();
  if (spec.starts_with("gnp:")) {
    auto tail = spec.substr(4);
    double p = 0.0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty())
      throw ConfigError("malformed probability in model '" + std::string(spec) + "'");
    if (!(p > 0.0 && p < 1.0)) throw ConfigError("model '" + std::string(spec) + "': p must lie in (0,1)");
    return gnp(p);
  }
  throw ConfigError("unknown model '" + std::string(spec) + "' (expected uniform, gnm or gnp:<p>)");
}

double NullModel::p() const {
  if (!p_) throw ConfigError("model " + to_string() + " has no edge probability");
  return *p_;
}

std::string NullModel::to_string() const {
  switch (kind_) {
    case Kind::UniformGivenN:
      return "uniform";
    case Kind::GNM:
      return "gnm";
    case Kind::GNP: {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, *p_);
      return "gnp:" + std::string(buf, ptr);
    }
  }
  return "?";
}

Bits pairs_codelength(const NullModel& model, std::uint64_t pairs, std::uint64_t edges) {
  if (edges > pairs) throw DomainError("more edges than candidate pairs");
  switch (model.kind()) {
    case NullModel::Kind::UniformGivenN:
      return static_cast<Bits>(pairs);
    case NullModel::Kind::GNM:
      return log2_binomial(pairs, edges);
    case NullModel::Kind::GNP: {
      const double p = model.p();
      const double absent = static_cast<double>(pairs - edges);
      return -static_cast<double>(edges) * std::log2(p) - absent * std::log2(1.0 - p);
    }
  }
  return 0.0;
}

Bits bound_codelength(const NullModel& model, const Graph& g) {
  return pairs_codelength(model, pair_count(g.node_count()), g.edge_count());
}

Bits complete_codelength(const NullModel& model, const Graph& g, const IntegerCode& n_code,
                         const std::optional<IntegerCode>& m_code) {
  Bits total = integer_codelength(n_code, g.node_count());
  if (model.kind() == NullModel::Kind::GNM) {
    if (!m_code) throw ConfigError("G(n,m) completion requires a code for m");
    total += integer_codelength(*m_code, g.edge_count());
  }
  return total + bound_codelength(model, g);
}

namespace {

// Inverse of the canonical pair order (0,1), (0,2), ..., (0,n-1), (1,2), ...
Edge pair_at(std::uint32_t n, std::uint64_t index) {
  auto row_start = [n](std::uint64_t u) { return u * n - u * (u + 1) / 2; };
  std::uint64_t lo = 0, hi = n - 1;
  while (lo + 1 < hi) {
    const std::uint64_t mid = (lo + hi) / 2;
    if (row_start(mid) <= index) lo = mid; else hi = mid;
  }
  const std::uint64_t u = lo;
  const std::uint64_t v = u + 1 + (index - row_start(u));
  return {static_cast<Node>(u), static_cast<Node>(v)};
}

Graph bernoulli_graph(std::uint32_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace

Graph sample(const NullModel& model, std::uint32_t n, std::optional<std::uint64_t> m, std::uint64_t seed) {
  Rng rng(seed);
  switch (model.kind()) {
    case NullModel::Kind::UniformGivenN:
      if (m) throw ConfigError("uniform model takes no edge count");
      // Independent fair coins per pair are exactly uniform on all graphs of size n.
      return bernoulli_graph(n, 0.5, rng);
    case NullModel::Kind::GNP:
      if (m) throw ConfigError("G(n,p) model takes no edge count");
      return bernoulli_graph(n, model.p(), rng);
    case NullModel::Kind::GNM: {
      if (!m) throw ConfigError("G(n,m) sampling requires an edge count");
      const std::uint64_t pairs = pair_count(n);
      if (*m > pairs)
        throw DomainError("m=" + std::to_string(*m) + " exceeds pair count " + std::to_string(pairs));
      // Floyd's algorithm: a uniform m-subset of the pair indices in O(m).
      std::unordered_set<std::uint64_t> chosen;
      chosen.reserve(*m);
      for (std::uint64_t j = pairs - *m; j < pairs; ++j) {
        const std::uint64_t t = uniform_below(rng, j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
      }
      std::vector<Edge> edges;
      edges.reserve(*m);
      for (std::uint64_t idx : chosen) edges.push_back(pair_at(n, idx));
      return Graph(n, std::move(edges));
    }
  }
  return Graph();
}

}  // namespace cliquemdl
