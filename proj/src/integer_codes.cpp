#include "cliquemdl/integer_codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "cliquemdl/errors.hpp"

namespace cliquemdl {

namespace {

// floor(log2 x) for x >= 1.
std::uint64_t floor_log2(std::uint64_t x) { return std::bit_width(x) - 1; }

// Below this many factors the product form is summed directly; above it
// lgamma is accurate to well under 1e-9 relative.
constexpr std::uint64_t kDirectSumLimit = 64;

}  // namespace

std::string IntegerCode::name() const {
  switch (kind_) {
    case Kind::EliasGamma:
      return "elias-gamma";
    case Kind::EliasDelta:
      return "elias-delta";
    case Kind::UniformBounded:
      return "uniform-bounded(" + std::to_string(max_) + ")";
  }
  return "?";
}

Bits integer_codelength(const IntegerCode& code, std::uint64_t k) {
  switch (code.kind()) {
    case IntegerCode::Kind::EliasGamma: {
      if (k == std::numeric_limits<std::uint64_t>::max()) throw DomainError("value too large for Elias gamma");
      return static_cast<Bits>(2 * floor_log2(k + 1) + 1);
    }
    case IntegerCode::Kind::EliasDelta: {
      if (k == std::numeric_limits<std::uint64_t>::max()) throw DomainError("value too large for Elias delta");
      const std::uint64_t len = floor_log2(k + 1);
      return static_cast<Bits>(len + 2 * floor_log2(len + 1) + 1);
    }
    case IntegerCode::Kind::UniformBounded:
      if (k > code.max())
        throw DomainError("value " + std::to_string(k) + " exceeds uniform code maximum " +
                          std::to_string(code.max()));
      return std::log2(static_cast<double>(code.max()) + 1.0);
  }
  return 0.0;
}

Bits log2_binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) throw DomainError("log2_binomial: b > a");
  const std::uint64_t r = std::min(b, a - b);
  if (r == 0) return 0.0;
  if (r <= kDirectSumLimit) {
    // C(a, r) = prod_{i=1..r} (a - r + i) / i
    double sum = 0.0;
    for (std::uint64_t i = 1; i <= r; ++i)
      sum += std::log2(static_cast<double>(a - r + i) / static_cast<double>(i));
    return sum;
  }
  const double ln = std::lgamma(static_cast<double>(a) + 1.0) - std::lgamma(static_cast<double>(r) + 1.0) -
                    std::lgamma(static_cast<double>(a - r) + 1.0);
  return ln / std::numbers::ln2;
}

Bits codelength_mix(std::span<const Bits> lengths) {
  if (lengths.empty()) throw DomainError("codelength_mix: empty list");
  const Bits shortest = *std::min_element(lengths.begin(), lengths.end());
  if (std::isinf(shortest)) return shortest;
  double mass = 0.0;
  for (Bits l : lengths) mass += std::exp2(shortest - l);
  return shortest - std::log2(mass);
}

}  // namespace cliquemdl
