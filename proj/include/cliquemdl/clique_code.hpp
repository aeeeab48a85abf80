#pragma once

#include <optional>

#include "cliquemdl/graph.hpp"
#include "cliquemdl/integer_codes.hpp"
#include "cliquemdl/null_models.hpp"

namespace cliquemdl {

// Breakdown of one clique codeword: which k, which k nodes, then the rest
// of the graph under the null family with the clique's pairs left out.
struct CliqueCodeParts {
  Bits size_bits = 0.0;
  Bits subset_bits = 0.0;
  Bits remainder_bits = 0.0;
  Bits total = 0.0;
};

// Codelength of G under the clique code with codeword parameter C.
// n is shared context; for GNM so is m, from which the remainder edge count
// m - k(k-1)/2 is decoded. Throws PreconditionError if C is not a clique.
// k is coded uniformly on {0..n} unless another size code is supplied.
CliqueCodeParts clique_codelength(const Graph& g, const VertexSubset& c, const NullModel& model,
                                  const std::optional<IntegerCode>& size_code = std::nullopt);

// Compression gain of the clique code over the null bound B(G). Signed.
Bits delta(const Graph& g, const VertexSubset& c, const NullModel& model);

}  // namespace cliquemdl
