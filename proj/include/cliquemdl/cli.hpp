#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cliquemdl/clique_code.hpp"
#include "cliquemdl/clique_search.hpp"
#include "cliquemdl/mdl_test.hpp"
#include "cliquemdl/verification.hpp"

namespace cliquemdl::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kUsage = 2, kInput = 3, kGateFailure = 4 };

// Missing or unreadable input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- report building -------------------------------------------------------

std::string sha256_hex(std::string_view data);

json to_json(const TestResult& r);
json to_json(const TailEstimate& t);
json to_json(const CliqueCodeParts& parts);
json to_json(const CompletionGain& gain);

// Report envelope. `input_digest` is null for commands without an input file.
json make_report(std::string_view command, std::optional<std::string> input_digest, std::string_view model,
                 json parameters, json result);

// Aligned-column rendering of a report for --format text.
std::string render_text(const json& report);

// ---- argument helpers ------------------------------------------------------

// Decimal or 0x-prefixed hexadecimal 64-bit value.
std::uint64_t parse_seed(std::string_view text);
// "1..8" (inclusive integer range) or a comma list of reals.
std::vector<Bits> parse_thresholds(std::string_view text);
// "v1,v2,..."; the empty string is the empty subset.
VertexSubset parse_clique(std::string_view text);
// Comma-separated model list, e.g. "uniform,gnp:0.1".
std::vector<NullModel> parse_models(std::string_view text);

// ---- commands --------------------------------------------------------------
// Each returns a complete report; timing_ms is filled by the dispatcher.

struct CodelengthOptions {
  std::string model = "uniform";
  std::optional<std::string> clique;
};
json cmd_codelength(std::string_view edge_list, const CodelengthOptions& options);

struct TestOptions {
  std::string model = "uniform";
  double alpha = 0.001;
  SearchConfig::Strategy strategy = SearchConfig::Strategy::Greedy;
  // 0 means one restart per node.
  std::uint32_t seeds = 0;
  std::uint64_t seed = 0;
  std::uint32_t max_exact_n = 64;
};
// Writes the multiple-null-models warning to `diag` for a comma list.
json cmd_test(std::string_view edge_list, const TestOptions& options, std::ostream& diag);

struct McVerifyOptions {
  std::string model = "uniform";
  std::uint32_t n = 20;
  std::uint64_t samples = 100000;
  std::vector<Bits> ks{1, 2, 3, 4, 5, 6, 7, 8};
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> m;
  std::uint32_t greedy_seeds = 0;
  unsigned threads = 0;
};
// result.pass is false when any row exceeds its bound by more than 3 sigma.
json cmd_mc_verify(const McVerifyOptions& options);

struct SampleOptions {
  std::string model = "uniform";
  std::uint32_t n = 0;
  std::optional<std::uint64_t> m;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = ".";
  // Plant a clique on this many seeded-random nodes after sampling.
  std::optional<std::uint32_t> plant;
};
json cmd_sample(const SampleOptions& options);

// Full command-line entry point. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliquemdl::cli
