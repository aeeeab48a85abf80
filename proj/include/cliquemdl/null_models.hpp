#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cliquemdl/graph.hpp"
#include "cliquemdl/integer_codes.hpp"

namespace cliquemdl {

// Null-model descriptor. UniformGivenN and GNM read n (and m) from the graph
// being scored; GNP carries a fixed edge probability that is never encoded.
class NullModel {
 public:
  enum class Kind { UniformGivenN, GNM, GNP };

  static NullModel uniform() { return NullModel(Kind::UniformGivenN, std::nullopt); }
  static NullModel gnm() { return NullModel(Kind::GNM, std::nullopt); }
  // Throws DomainError unless 0 < p < 1.
  static NullModel gnp(double p);

  // "uniform", "gnm" or "gnp:<p>". Throws ConfigError on anything else.
  static NullModel parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  // Edge probability; only valid for GNP.
  double p() const;
  std::string to_string() const;

  friend bool operator==(const NullModel&, const NullModel&) = default;

 private:
  NullModel(Kind kind, std::optional<double> p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::optional<double> p_;
};

// Codelength of `edges` present among `pairs` candidate pairs under the
// model's data-given-parameters code. Shared by the null and remainder codes.
Bits pairs_codelength(const NullModel& model, std::uint64_t pairs, std::uint64_t edges);

// B(G): the null codelength with the discrete parameters (n, and m for GNM)
// given for free. Lower-bounds every two-part completion of the same family.
Bits bound_codelength(const NullModel& model, const Graph& g);

// Two-part code: L(n) [+ L(m) for GNM] + B(G). GNM requires m_code.
Bits complete_codelength(const NullModel& model, const Graph& g, const IntegerCode& n_code,
                         const std::optional<IntegerCode>& m_code = std::nullopt);

// Exact sampler. `m` is required for GNM and must be absent otherwise.
Graph sample(const NullModel& model, std::uint32_t n, std::optional<std::uint64_t> m, std::uint64_t seed);

}  // namespace cliquemdl
