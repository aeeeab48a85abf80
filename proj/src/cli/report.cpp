#include <openssl/evp.h>

#include <charconv>
#include <iomanip>
#include <sstream>

#include "cliquemdl/cli.hpp"
#include "cliquemdl/errors.hpp"

namespace cliquemdl::cli {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return out.str();
}

json to_json(const TestResult& r) {
  json members = json::array();
  for (Node v : r.clique.members()) members.push_back(v);
  return {
      {"model", r.model.to_string()},
      {"null_bound_bits", r.null_bound_bits},
      {"alt_bits", r.alt_bits},
      {"delta_bits", r.delta_bits},
      {"k_alpha_bits", r.k_alpha_bits},
      {"reject", r.reject},
      {"significance_bound", r.significance_bound},
      {"clique", members},
      {"clique_size", r.clique.size()},
  };
}

json to_json(const TailEstimate& t) {
  return {{"k", t.k},
          {"empirical", t.empirical},
          {"bound", t.bound},
          {"samples", t.samples},
          {"std_error", t.std_error},
          {"pass", t.within_bound()}};
}

json to_json(const CliqueCodeParts& parts) {
  return {{"size_bits", parts.size_bits},
          {"subset_bits", parts.subset_bits},
          {"remainder_bits", parts.remainder_bits},
          {"total", parts.total}};
}

json to_json(const CompletionGain& gain) {
  return {{"code", gain.code}, {"complete_bits", gain.complete_bits}, {"gain_bits", gain.gain_bits}};
}

json make_report(std::string_view command, std::optional<std::string> input_digest, std::string_view model,
                 json parameters, json result) {
  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  report["input_digest"] = input_digest ? json("sha256:" + *input_digest) : json(nullptr);
  report["model"] = model;
  report["parameters"] = std::move(parameters);
  report["result"] = std::move(result);
  report["timing_ms"] = 0.0;
  return report;
}

namespace {

std::string fmt_num(const json& v) {
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(6) << v.get<double>();
    return s.str();
  }
  return v.dump();
}

void render_test_result(std::ostream& out, const json& r) {
  for (const char* key : {"model", "null_bound_bits", "alt_bits", "delta_bits", "k_alpha_bits", "reject",
                          "significance_bound", "clique_size"})
    out << "  " << std::left << std::setw(20) << key << (r[key].is_string() ? r[key].get<std::string>() : fmt_num(r[key]))
        << "\n";
  out << "  " << std::setw(20) << "clique" << r["clique"].dump() << "\n";
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  const std::string command = report["command"];
  out << "command: " << command << "\nmodel:   " << report["model"].get<std::string>() << "\n";
  if (!report["input_digest"].is_null()) out << "input:   " << report["input_digest"].get<std::string>() << "\n";
  const json& result = report["result"];
  if (command == "test") {
    if (result.is_array()) {
      for (const auto& r : result) render_test_result(out, r);
    } else {
      render_test_result(out, result);
    }
  } else if (command == "codelength") {
    out << "  n " << result["n"] << "  m " << result["m"] << "\n";
    out << "  null_bound_bits " << fmt_num(result["null_bound_bits"]) << "\n";
    for (const auto& c : result["complete"])
      out << "  complete[" << c["code"].get<std::string>() << "] " << fmt_num(c["complete_bits"]) << "\n";
    if (result.contains("clique")) {
      const auto& c = result["clique"];
      out << "  clique " << c["members"].dump() << "\n";
      for (const char* key : {"size_bits", "subset_bits", "remainder_bits", "total", "delta_bits"})
        out << "    " << std::left << std::setw(16) << key << fmt_num(c[key]) << "\n";
    }
  } else if (command == "mc-verify") {
    out << std::right << std::setw(8) << "k" << std::setw(14) << "empirical" << std::setw(14) << "bound"
        << std::setw(14) << "std_error" << std::setw(6) << "pass" << "\n";
    for (const auto& row : result["rows"])
      out << std::setw(8) << fmt_num(row["k"]) << std::setw(14) << fmt_num(row["empirical"]) << std::setw(14)
          << fmt_num(row["bound"]) << std::setw(14) << fmt_num(row["std_error"]) << std::setw(6)
          << (row["pass"].get<bool>() ? "yes" : "NO") << "\n";
    out << "overall: " << (result["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  } else if (command == "sample") {
    for (const auto& f : result["files"])
      out << "  " << f["file"].get<std::string>() << "  n=" << f["n"] << " m=" << f["m"] << "\n";
  }
  return out.str();
}

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("malformed seed '" + std::string(text) + "'");
  return value;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view tok, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ConfigError("malformed " + std::string(what) + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace

std::vector<Bits> parse_thresholds(std::string_view text) {
  std::vector<Bits> ks;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto lo = parse_number<std::uint32_t>(text.substr(0, dots), "threshold range");
    const auto hi = parse_number<std::uint32_t>(text.substr(dots + 2), "threshold range");
    if (hi < lo) throw ConfigError("empty threshold range '" + std::string(text) + "'");
    for (std::uint32_t k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
  }
  for (auto tok : split_commas(text)) ks.push_back(parse_number<double>(tok, "threshold"));
  return ks;
}

VertexSubset parse_clique(std::string_view text) {
  std::vector<Node> members;
  if (!text.empty())
    for (auto tok : split_commas(text)) members.push_back(parse_number<Node>(tok, "clique vertex"));
  return VertexSubset(std::move(members));
}

std::vector<NullModel> parse_models(std::string_view text) {
  std::vector<NullModel> models;
  for (auto tok : split_commas(text)) models.push_back(NullModel::parse(tok));
  return models;
}

}  // namespace cliquemdl::cli
