#include "cliquemdl/mdl_test.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#include "cliquemdl/errors.hpp"

namespace cliquemdl {

Bits k_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  return -std::log2(alpha);
}

double significance_bound(Bits delta_bits) { return delta_bits > 0.0 ? std::exp2(-delta_bits) : 1.0; }

namespace {

TestResult make_result(const Graph& g, const VertexSubset& c, const NullModel& model, Bits alt, Bits threshold) {
  TestResult r;
  r.null_bound_bits = bound_codelength(model, g);
  r.alt_bits = alt;
  r.delta_bits = r.null_bound_bits - alt;
  r.k_alpha_bits = threshold;
  r.reject = r.delta_bits >= threshold;
  r.significance_bound = significance_bound(r.delta_bits);
  r.clique = c;
  r.model = model;
  return r;
}

bool better(Bits delta_a, const VertexSubset& a, Bits delta_b, const VertexSubset& b) {
  if (delta_a != delta_b) return delta_a > delta_b;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TestResult test_clique(const Graph& g, const VertexSubset& c, const NullModel& model, double alpha) {
  const Bits threshold = k_alpha(alpha);
  return make_result(g, c, model, clique_codelength(g, c, model).total, threshold);
}

TestResult test_best_clique(const Graph& g, std::span<const VertexSubset> candidates, const NullModel& model,
                            double alpha) {
  if (candidates.empty()) throw DomainError("test_best_clique: no candidates");
  const Bits threshold = k_alpha(alpha);
  const Bits bound = bound_codelength(model, g);
  std::size_t best = 0;
  Bits best_alt = clique_codelength(g, candidates[0], model).total;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Bits alt = clique_codelength(g, candidates[i], model).total;
    if (better(bound - alt, candidates[i], bound - best_alt, candidates[best])) {
      best = i;
      best_alt = alt;
    }
  }
  return make_result(g, candidates[best], model, best_alt, threshold);
}

std::vector<CompletionGain> completion_gains(const Graph& g, const NullModel& model, Bits alt_bits) {
  const std::pair<IntegerCode, IntegerCode> codes[] = {
      {IntegerCode::elias_gamma(), IntegerCode::elias_gamma()},
      {IntegerCode::elias_delta(), IntegerCode::elias_delta()},
      {IntegerCode::uniform_bounded(UINT32_MAX), IntegerCode::uniform_bounded(pair_count(g.node_count()))},
  };
  std::vector<CompletionGain> out;
  for (const auto& [n_code, m_code] : codes) {
    CompletionGain gain;
    gain.code = n_code.name();
    if (model.kind() == NullModel::Kind::GNM) gain.code += "+" + m_code.name();
    gain.complete_bits = complete_codelength(model, g, n_code, m_code);
    gain.gain_bits = gain.complete_bits - alt_bits;
    out.push_back(std::move(gain));
  }
  return out;
}

}  // namespace cliquemdl
