#include "cliquemdl/clique_code.hpp"

#include "cliquemdl/errors.hpp"

namespace cliquemdl {

CliqueCodeParts clique_codelength(const Graph& g, const VertexSubset& c, const NullModel& model,
                                  const std::optional<IntegerCode>& size_code) {
  if (!is_clique(g, c)) throw PreconditionError("subset " + c.to_string() + " is not a clique");
  const std::uint64_t n = g.node_count();
  const std::uint64_t k = c.size();
  const std::uint64_t inside = c.internal_pairs();

  CliqueCodeParts parts;
  parts.size_bits = integer_codelength(size_code.value_or(IntegerCode::uniform_bounded(n)), k);
  parts.subset_bits = log2_binomial(n, k);
  parts.remainder_bits = pairs_codelength(model, pair_count(n) - inside, g.edge_count() - inside);
  parts.total = parts.size_bits + parts.subset_bits + parts.remainder_bits;
  return parts;
}

Bits delta(const Graph& g, const VertexSubset& c, const NullModel& model) {
  return bound_codelength(model, g) - clique_codelength(g, c, model).total;
}

}  // namespace cliquemdl
