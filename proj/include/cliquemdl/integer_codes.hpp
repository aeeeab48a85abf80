#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace cliquemdl {

// Codelengths are real-valued bits (base 2). Never rounded to whole bits.
using Bits = double;

// Prefix-free code on the natural numbers, used to make parametrized
// models complete. Elias codes are applied to k+1 so that 0 is codable.
class IntegerCode {
 public:
  enum class Kind { EliasGamma, EliasDelta, UniformBounded };

  static IntegerCode elias_gamma() { return IntegerCode(Kind::EliasGamma, 0); }
  static IntegerCode elias_delta() { return IntegerCode(Kind::EliasDelta, 0); }
  static IntegerCode uniform_bounded(std::uint64_t max) { return IntegerCode(Kind::UniformBounded, max); }

  Kind kind() const noexcept { return kind_; }
  // Largest codable value; meaningful for UniformBounded only.
  std::uint64_t max() const noexcept { return max_; }
  std::string name() const;

  friend bool operator==(const IntegerCode&, const IntegerCode&) = default;

 private:
  IntegerCode(Kind kind, std::uint64_t max) : kind_(kind), max_(max) {}
  Kind kind_;
  std::uint64_t max_;
};

// Throws DomainError when k exceeds a UniformBounded maximum.
Bits integer_codelength(const IntegerCode& code, std::uint64_t k);

// log2 C(a, b). Throws DomainError when b > a.
Bits log2_binomial(std::uint64_t a, std::uint64_t b);

// -log2 sum_i 2^(-L_i), i.e. the length of the code that pools the
// probability mass of several codewords. Throws DomainError on empty input.
Bits codelength_mix(std::span<const Bits> lengths);

}  // namespace cliquemdl
