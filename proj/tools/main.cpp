#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dgwalk/cli_commands.hpp"
#include "dgwalk/version.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
  return out;
}

std::vector<int32_t> parse_sum_list(const std::string& s) {
  std::vector<int32_t> out;
  for (int v : parse_int_list(s)) out.push_back(static_cast<int32_t>(v));
  return out;
}

// JSON config mirroring the flags; explicit flags override file values.
void load_config_file(const std::string& path, dgw::ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open config file " + path);
  nlohmann::json j;
  in >> j;
  auto opt = [&](const char* key) { return j.contains(key); };
  if (opt("n")) cfg.n_list = j["n"].is_array() ? j["n"].get<std::vector<int>>()
                                               : std::vector<int>{j["n"].get<int>()};
  if (opt("q")) cfg.q_list = j["q"].is_array() ? j["q"].get<std::vector<int>>()
                                               : std::vector<int>{j["q"].get<int>()};
  if (opt("c")) cfg.c = j["c"].get<double>();
  if (opt("eps")) cfg.eps = j["eps"].get<double>();
  if (opt("t_min")) cfg.t_min = j["t_min"].get<int64_t>();
  if (opt("t_max")) cfg.t_max = j["t_max"].get<int64_t>();
  if (opt("t_step")) cfg.t_step = j["t_step"].get<int64_t>();
  if (opt("trials")) cfg.trials = j["trials"].get<uint64_t>();
  if (opt("seed")) cfg.seed = j["seed"].get<uint64_t>();
  if (opt("max_group_size")) cfg.max_group_size = j["max_group_size"].get<uint64_t>();
  if (opt("steps")) cfg.steps = j["steps"].get<uint64_t>();
  if (opt("lazy")) cfg.lazy = j["lazy"].get<bool>();
  if (opt("format")) cfg.format = j["format"].get<std::string>();
  if (opt("suite")) cfg.suite = j["suite"].get<std::string>();
  if (opt("exhaustive")) cfg.exhaustive = j["exhaustive"].get<bool>();
  if (opt("row_sums")) cfg.row_sums = j["row_sums"].get<std::vector<int32_t>>();
  if (opt("col_sums")) cfg.col_sums = j["col_sums"].get<std::vector<int32_t>>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diaconis-Gangolli walk on contingency tables over Z/qZ: "
               "sampling, exact spectra and TV curves, lemma verification"};
  app.set_version_flag("--version", dgw::kVersion);
  app.require_subcommand(1);

  dgw::ExperimentConfig cfg;
  std::string config_path, out_path, n_arg, q_arg, row_arg, col_arg;

  // The config file is applied before flag parsing so flags win.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  }
  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dgw::kExitInvalidParams;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config mirroring the flags");
    sub->add_option("--n", n_arg, "table dimension (comma list for sweeps)");
    sub->add_option("--q", q_arg, "modulus (comma list for sweeps)");
    sub->add_option("--c", cfg.c, "quality exponent in the time constants");
    sub->add_option("--eps", cfg.eps, "target distance parameter");
    sub->add_option("--t-min", cfg.t_min, "first time step");
    sub->add_option("--t-max", cfg.t_max, "last time step");
    sub->add_option("--t-step", cfg.t_step, "time stride");
    sub->add_option("--trials", cfg.trials, "Monte Carlo trial count");
    sub->add_option("--seed", cfg.seed, "master RNG seed");
    sub->add_option("--max-group-size", cfg.max_group_size,
                    "cap on q^((n-1)^2) for exact computations");
    sub->add_option("--steps", [&cfg](const std::vector<std::string>& vals) {
      cfg.steps = std::stoull(vals.front());
      return true;
    }, "walk step budget (overrides the default)");
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--lazy", cfg.lazy, "hold with probability 1/2 each step");
    return sub;
  };

  auto* sample = add_common(app.add_subcommand("sample", "run the walk and emit the final table"));
  sample->add_option("--row-sums", row_arg, "comma list of row sum targets");
  sample->add_option("--col-sums", col_arg, "comma list of column sum targets");
  sample->add_option("--trajectory", cfg.trajectory_path, "NDJSON trajectory stream path");
  sample->add_flag("--with-f", cfg.with_f, "include the F statistic in trajectory records");

  auto* tv = add_common(app.add_subcommand("tv-curve", "exact TV / l2 bound / MC lower bound per t"));
  auto* wilson = add_common(app.add_subcommand("wilson", "MC lower-bound estimates against the certified time"));
  auto* cutoff = add_common(app.add_subcommand("cutoff-table", "time constants and exact mixing times per (n,q)"));
  auto* verify = add_common(app.add_subcommand("verify", "run the lemma and oracle property suites"));
  verify->add_option("--suite", cfg.suite,
                     "all, lemma3_2, lemma3_3, lemma3_5, boxes_lower, oracles, spectral, negative");
  verify->add_flag("--exhaustive", cfg.exhaustive, "full-scale sweeps");
  auto* spectrum = add_common(app.add_subcommand("spectrum", "eigenvalue multiset as CSV"));
  auto* dist = add_common(app.add_subcommand("dist", "exact distribution at time --steps as CSV"));

  CLI11_PARSE(app, argc, argv);

  try {
    if (!n_arg.empty()) {
      cfg.n_list = parse_int_list(n_arg);
      cfg.n_given = true;
    }
    if (!q_arg.empty()) cfg.q_list = parse_int_list(q_arg);
    if (!row_arg.empty()) cfg.row_sums = parse_sum_list(row_arg);
    if (!col_arg.empty()) cfg.col_sums = parse_sum_list(col_arg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dgw::kExitInvalidParams;
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return dgw::kExitInvalidParams;
    }
    out = &file_out;
  }

  if (sample->parsed()) return dgw::cmd_sample(cfg, *out, std::cerr);
  if (tv->parsed()) return dgw::cmd_tv_curve(cfg, *out, std::cerr);
  if (wilson->parsed()) return dgw::cmd_wilson(cfg, *out, std::cerr);
  if (cutoff->parsed()) return dgw::cmd_cutoff_table(cfg, *out, std::cerr);
  if (verify->parsed()) return dgw::cmd_verify(cfg, *out, std::cerr);
  if (spectrum->parsed()) return dgw::cmd_spectrum(cfg, *out, std::cerr);
  if (dist->parsed()) return dgw::cmd_dist(cfg, *out, std::cerr);
  return dgw::kExitInvalidParams;
}
