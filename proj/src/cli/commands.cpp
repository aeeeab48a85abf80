#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "cliquemdl/cli.hpp"
#include "cliquemdl/errors.hpp"
#include "cliquemdl/rng.hpp"

namespace cliquemdl::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NullModel single_model(const std::string& spec) {
  auto models = parse_models(spec);
  if (models.size() != 1) throw ConfigError("this command takes a single model");
  return models.front();
}

json test_result_json(const Graph& g, const TestResult& r) {
  json out = to_json(r);
  json completions = json::array();
  for (const auto& gain : completion_gains(g, r.model, r.alt_bits)) completions.push_back(to_json(gain));
  out["completions"] = std::move(completions);
  return out;
}

// Seeded uniform k-subset of {0..n-1}.
VertexSubset random_subset(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
  if (k > n) throw DomainError("cannot plant a " + std::to_string(k) + "-clique in " + std::to_string(n) + " nodes");
  Rng rng(seed);
  std::vector<Node> perm(n);
  std::iota(perm.begin(), perm.end(), Node{0});
  for (std::uint32_t i = 0; i < k; ++i) std::swap(perm[i], perm[i + uniform_below(rng, n - i)]);
  perm.resize(k);
  return VertexSubset(std::move(perm));
}

}  // namespace

json cmd_codelength(std::string_view edge_list, const CodelengthOptions& options) {
  const NullModel model = single_model(options.model);
  const Graph g = parse_edge_list(edge_list);

  json result;
  result["n"] = g.node_count();
  result["m"] = g.edge_count();
  result["null_bound_bits"] = bound_codelength(model, g);
  json complete = json::array();
  for (const auto& gain : completion_gains(g, model, 0.0))
    complete.push_back({{"code", gain.code}, {"complete_bits", gain.complete_bits}});
  result["complete"] = std::move(complete);

  json parameters = json::object();
  if (options.clique) {
    const VertexSubset c = parse_clique(*options.clique);
    json clique = to_json(clique_codelength(g, c, model));
    clique["members"] = json(std::vector<Node>(c.members().begin(), c.members().end()));
    clique["delta_bits"] = delta(g, c, model);
    result["clique"] = std::move(clique);
    parameters["clique"] = *options.clique;
  }
  return make_report("codelength", sha256_hex(edge_list), model.to_string(), std::move(parameters),
                     std::move(result));
}

json cmd_test(std::string_view edge_list, const TestOptions& options, std::ostream& diag) {
  const auto models = parse_models(options.model);
  k_alpha(options.alpha);  // validate before doing any work
  const Graph g = parse_edge_list(edge_list);
  if (models.size() > 1)
    diag << "warning: testing multiple null models requires multiple-testing correction; "
            "no correction is applied\n";

  SearchConfig search;
  search.strategy = options.strategy;
  search.seeds = options.seeds ? options.seeds : std::max<std::uint32_t>(1, g.node_count());
  search.max_exact_n = options.max_exact_n;
  const auto candidates = find_cliques(g, search, options.seed);

  json results = json::array();
  for (const auto& model : models) results.push_back(test_result_json(g, test_best_clique(g, candidates, model, options.alpha)));

  json parameters = {
      {"alpha", options.alpha},
      {"search", options.strategy == SearchConfig::Strategy::Exact ? "exact" : "greedy"},
      {"seeds", search.seeds},
      {"seed", options.seed},
      {"candidates", candidates.size()},
  };
  return make_report("test", sha256_hex(edge_list), options.model, std::move(parameters),
                     models.size() == 1 ? results.front() : results);
}

json cmd_mc_verify(const McVerifyOptions& options) {
  const NullModel model = single_model(options.model);
  if (options.m && model.kind() != NullModel::Kind::GNM) throw ConfigError("--m applies to the gnm model only");
  TailCheckOptions tail;
  tail.greedy_seeds = options.greedy_seeds;
  tail.m = options.m;
  tail.threads = options.threads;
  const auto rows = mc_tail_check(model, options.n, options.samples, options.ks, options.seed, tail);

  json result;
  json table = json::array();
  bool pass = true;
  for (const auto& row : rows) {
    table.push_back(to_json(row));
    pass = pass && row.within_bound();
  }
  result["rows"] = std::move(table);
  result["pass"] = pass;

  json parameters = {{"n", options.n}, {"samples", options.samples}, {"ks", options.ks}, {"seed", options.seed}};
  if (model.kind() == NullModel::Kind::GNM) parameters["m"] = options.m.value_or(pair_count(options.n) / 2);
  if (options.greedy_seeds) parameters["greedy_seeds"] = options.greedy_seeds;
  return make_report("mc-verify", std::nullopt, model.to_string(), std::move(parameters), std::move(result));
}

json cmd_sample(const SampleOptions& options) {
  const NullModel model = single_model(options.model);
  if (options.plant && *options.plant > options.n)
    throw DomainError("cannot plant a " + std::to_string(*options.plant) + "-clique in " +
                      std::to_string(options.n) + " nodes");
  std::filesystem::create_directories(options.out_dir);

  const std::size_t width = std::max<std::size_t>(6, std::to_string(options.count).size());
  json files = json::array();
  for (std::uint64_t i = 0; i < options.count; ++i) {
    const std::uint64_t seed = derive_seed(options.seed, i);
    Graph g = sample(model, options.n, options.m, seed);
    json entry;
    if (options.plant) {
      const VertexSubset c = random_subset(options.n, *options.plant, derive_seed(seed, 1));
      g = plant_clique(g, c);
      entry["planted"] = std::vector<Node>(c.members().begin(), c.members().end());
    }
    std::ostringstream name;
    name << "sample_" << std::setw(static_cast<int>(width)) << std::setfill('0') << i << ".txt";
    const auto path = options.out_dir / name.str();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << to_edge_list(g);
    entry["file"] = name.str();
    entry["n"] = g.node_count();
    entry["m"] = g.edge_count();
    files.push_back(std::move(entry));
  }

  json parameters = {{"n", options.n}, {"count", options.count}, {"seed", options.seed}};
  if (options.m) parameters["m"] = *options.m;
  if (options.plant) parameters["plant"] = *options.plant;
  return make_report("sample", std::nullopt, model.to_string(), std::move(parameters), {{"files", files}});
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"MDL significance testing for cliques in undirected graphs", "cliquemdl"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string seed_text = "0";
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_text, "64-bit seed, decimal or 0x-hex");
  };

  std::string file;
  CodelengthOptions cl;
  std::string clique_text;
  auto* codelength = app.add_subcommand("codelength", "Null bound, two-part completions, clique code breakdown");
  codelength->add_option("file", file, "Edge-list file")->required();
  codelength->add_option("--model", cl.model, "uniform | gnm | gnp:<p>");
  auto* clique_opt = codelength->add_option("--clique", clique_text, "Comma-separated clique vertices");

  TestOptions to;
  std::string search = "greedy";
  auto* test = app.add_subcommand("test", "Best-clique no-hypercompression test");
  test->add_option("file", file, "Edge-list file")->required();
  test->add_option("--model", to.model, "Model, or comma list of models");
  test->add_option("--alpha", to.alpha, "Significance level in (0, 1]");
  test->add_option("--search", search, "Clique search")->check(CLI::IsMember({"greedy", "exact"}));
  test->add_option("--seeds", to.seeds, "Greedy restarts (default: one per node)");
  test->add_option("--max-exact-n", to.max_exact_n, "Node limit for exact search");
  add_seed(test);

  McVerifyOptions mo;
  std::string ks_text = "1..8";
  std::uint64_t mc_m = 0;
  auto* mc = app.add_subcommand("mc-verify", "Monte Carlo check of P(delta >= k) <= 2^-k");
  mc->add_option("--model", mo.model, "uniform | gnm | gnp:<p>");
  mc->add_option("--n", mo.n, "Nodes per sample");
  mc->add_option("--samples", mo.samples, "Number of samples (>= 1000)");
  mc->add_option("--ks", ks_text, "Thresholds: 'a..b' or comma list");
  auto* mc_m_opt = mc->add_option("--m", mc_m, "Edge count for gnm (default: half the pairs)");
  mc->add_option("--greedy-seeds", mo.greedy_seeds, "Greedy restarts per sample (default: one per node)");
  mc->add_option("--threads", mo.threads, "Worker threads (default: all cores)");
  add_seed(mc);

  SampleOptions so;
  std::uint64_t sample_m = 0;
  std::uint32_t plant = 0;
  std::string out_dir = ".";
  auto* smp = app.add_subcommand("sample", "Write seeded null-model samples as edge lists");
  smp->add_option("--model", so.model, "uniform | gnm | gnp:<p>");
  smp->add_option("--n", so.n, "Nodes per sample")->required();
  auto* sample_m_opt = smp->add_option("--m", sample_m, "Edge count (gnm only)");
  smp->add_option("--count", so.count, "Number of files");
  smp->add_option("--out-dir", out_dir, "Output directory");
  auto* plant_opt = smp->add_option("--plant", plant, "Plant a clique of this size on random nodes");
  add_seed(smp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  int code = kOk;
  try {
    const std::uint64_t seed = parse_seed(seed_text);
    if (codelength->parsed()) {
      if (*clique_opt) cl.clique = clique_text;
      report = cmd_codelength(read_file(file), cl);
    } else if (test->parsed()) {
      to.strategy = search == "exact" ? SearchConfig::Strategy::Exact : SearchConfig::Strategy::Greedy;
      to.seed = seed;
      report = cmd_test(read_file(file), to, err);
    } else if (mc->parsed()) {
      mo.ks = parse_thresholds(ks_text);
      mo.seed = seed;
      if (*mc_m_opt) mo.m = mc_m;
      report = cmd_mc_verify(mo);
      if (!report["result"]["pass"].get<bool>()) code = kGateFailure;
    } else if (smp->parsed()) {
      so.seed = seed;
      so.out_dir = out_dir;
      if (*sample_m_opt) so.m = sample_m;
      if (*plant_opt) so.plant = plant;
      report = cmd_sample(so);
    }
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return kInput;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (format == "text") out << render_text(report); else out << report.dump(2) << "\n";
  if (code == kGateFailure) err << "verification gate failed: empirical tail exceeds 2^-k + 3 sigma\n";
  return code;
}

}  // namespace cliquemdl::cli
