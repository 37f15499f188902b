#include "dgwalk/cli_commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dgwalk/combinatorics.hpp"
#include "dgwalk/io.hpp"
#include "dgwalk/spectral.hpp"
#include "dgwalk/verify.hpp"
#include "dgwalk/version.hpp"
#include "dgwalk/walk.hpp"
#include "dgwalk/wilson.hpp"

namespace dgw {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string join_ints(const std::vector<int32_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

bool fits_cap(int n, int q, uint64_t cap) {
  return checked_pow(q, static_cast<uint32_t>(n - 1) * (n - 1), cap).has_value();
}

// First t with d(t) <= 1/4, scanning the exact curve; nullopt when the scan
// limit is hit first.
std::optional<uint64_t> t_mix_quarter(const Spectrum& s, uint64_t scan_limit) {
  for (uint64_t t = 0; t <= scan_limit; ++t) {
    if (tv_to_uniform(exact_distribution_from_spectrum(s, t)) <= 0.25) return t;
  }
  return std::nullopt;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }
}

}  // namespace

int cmd_sample(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const int n = cfg.n();
    const int q = cfg.q();
    std::vector<int32_t> row_sums = cfg.row_sums.empty()
                                        ? std::vector<int32_t>(n, 0)
                                        : cfg.row_sums;
    std::vector<int32_t> col_sums = cfg.col_sums.empty()
                                        ? std::vector<int32_t>(n, 0)
                                        : cfg.col_sums;
    TableState start = canonical_table(n, q, row_sums, col_sums);

    if (n == 2) {
      err << "warning: n=2 reduces to the lazy walk on Z/" << q
          << "Z, which is known to not have cutoff; the time constants assume n >= 4\n";
    } else if (n == 3) {
      err << "warning: the time constants assume n >= 4\n";
    }

    const double c = cfg.c.value_or(min_upper_c(n));
    const TheoremTimes times = theorem_times(n, q, c);
    const uint64_t steps =
        cfg.steps.value_or(static_cast<uint64_t>(std::ceil(times.t_upper)));

    WalkConfig wcfg;
    wcfg.n = n;
    wcfg.q = q;
    wcfg.row_sums = row_sums;
    wcfg.col_sums = col_sums;
    wcfg.seed = cfg.seed;
    wcfg.steps = steps;
    wcfg.lazy = cfg.lazy;

    std::ofstream traj;
    TrajectorySink sink;
    if (!cfg.trajectory_path.empty()) {
      traj.open(cfg.trajectory_path);
      if (!traj) throw std::invalid_argument("cannot open " + cfg.trajectory_path);
      const TableState origin = start;
      const WilsonStatistic w = make_wilson_statistic(n, q);
      const bool with_f = cfg.with_f;
      sink = [&traj, origin, w, with_f](uint64_t t, const TableState& state) {
        nlohmann::json rec{{"t", t}, {"state_digest", state_digest(state)}};
        if (with_f) {
          Grid diff(state.n, state.n);
          for (size_t i = 0; i < diff.v.size(); ++i) {
            diff.v[i] = mod_norm(
                static_cast<int64_t>(state.entries.v[i]) - origin.entries.v[i],
                state.q);
          }
          rec["F_value"] = statistic_F(to_coordinates(diff, state.q), w);
        }
        traj << rec.dump() << "\n";
      };
    }

    TableState final_state = run_walk(wcfg, start, sink);

    Params prov{{"version", kVersion},
                {"command", "sample"},
                {"seed", std::to_string(cfg.seed)},
                {"n", std::to_string(n)},
                {"q", std::to_string(q)},
                {"steps", std::to_string(steps)},
                {"lazy", cfg.lazy ? "1" : "0"},
                {"c", format_double(c)},
                {"t_nq", format_double(times.t_nq)},
                {"t_upper", format_double(times.t_upper)},
                {"row_sums", join_ints(row_sums)},
                {"col_sums", join_ints(col_sums)}};

    if (cfg.format == "json") {
      nlohmann::json provenance;
      for (const auto& [k, v] : prov) provenance[k] = v;
      out << nlohmann::json{{"provenance", provenance},
                            {"table", table_to_json(final_state)}}
                 .dump(2)
          << "\n";
    } else {
      write_csv_header(out, prov);
      for (int r = 0; r < n; ++r) {
        for (int c2 = 0; c2 < n; ++c2) {
          out << final_state.entries.at(r, c2) << (c2 + 1 < n ? "," : "\n");
        }
      }
    }
    return kExitOk;
  });
}

int cmd_tv_curve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const int n = cfg.n();
    const int q = cfg.q();
    if (cfg.t_min < 0 || cfg.t_step <= 0 || cfg.t_max < cfg.t_min) {
      throw std::invalid_argument("invalid t range");
    }
    const bool exact_ok = fits_cap(n, q, cfg.max_group_size);

    std::optional<Spectrum> spectrum;
    std::optional<uint64_t> tmix;
    if (exact_ok) {
      spectrum = enumerate_spectrum(n, q, cfg.max_group_size);
      tmix = t_mix_quarter(*spectrum, static_cast<uint64_t>(cfg.t_max));
    }

    Params prov{{"version", kVersion},
                {"command", "tv-curve"},
                {"seed", std::to_string(cfg.seed)},
                {"n", std::to_string(n)},
                {"q", std::to_string(q)},
                {"t_min", std::to_string(cfg.t_min)},
                {"t_max", std::to_string(cfg.t_max)},
                {"t_step", std::to_string(cfg.t_step)},
                {"trials", std::to_string(cfg.trials)},
                {"max_group_size", std::to_string(cfg.max_group_size)}};
    if (tmix) prov.emplace_back("t_mix_quarter", std::to_string(*tmix));
    write_csv_header(out, prov);
    out << "t,exact_tv,l2_bound,mc_lower,reason\n";

    WalkConfig wcfg;
    wcfg.n = n;
    wcfg.q = q;
    wcfg.seed = cfg.seed;
    for (int64_t t = cfg.t_min; t <= cfg.t_max; t += cfg.t_step) {
      out << t << ",";
      if (exact_ok) {
        const auto dist =
            exact_distribution_from_spectrum(*spectrum, static_cast<uint64_t>(t));
        out << format_double(tv_to_uniform(dist)) << ","
            << format_double(l2_bound(*spectrum, static_cast<uint64_t>(t))) << ",";
      } else {
        out << ",,";
      }
      if (cfg.trials > 0) {
        out << format_double(
            mc_tv_lower_bound(wcfg, static_cast<uint64_t>(t), cfg.trials));
      }
      out << "," << (exact_ok ? "" : "group too large") << "\n";
    }
    return kExitOk;
  });
}

int cmd_wilson(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const int n = cfg.n();
    const int q = cfg.q();
    if (cfg.t_min < 0 || cfg.t_step <= 0 || cfg.t_max < cfg.t_min) {
      throw std::invalid_argument("invalid t range");
    }
    const double certified = wilson_time(n, q, cfg.eps);
    write_csv_header(out, {{"version", kVersion},
                           {"command", "wilson"},
                           {"seed", std::to_string(cfg.seed)},
                           {"n", std::to_string(n)},
                           {"q", std::to_string(q)},
                           {"eps", format_double(cfg.eps)},
                           {"wilson_time", format_double(certified)},
                           {"t_min", std::to_string(cfg.t_min)},
                           {"t_max", std::to_string(cfg.t_max)},
                           {"t_step", std::to_string(cfg.t_step)},
                           {"trials", std::to_string(cfg.trials)}});
    out << "t,tv_lower_estimate,wilson_guarantee,trials\n";
    WalkConfig wcfg;
    wcfg.n = n;
    wcfg.q = q;
    wcfg.seed = cfg.seed;
    for (int64_t t = cfg.t_min; t <= cfg.t_max; t += cfg.t_step) {
      const double estimate =
          mc_tv_lower_bound(wcfg, static_cast<uint64_t>(t), cfg.trials);
      // d(t) >= 1 - eps is certified up to wilson_time.
      const double guarantee =
          static_cast<double>(t) <= certified ? 1.0 - cfg.eps : 0.0;
      out << t << "," << format_double(estimate) << "," << format_double(guarantee)
          << "," << cfg.trials << "\n";
    }
    return kExitOk;
  });
}

int cmd_cutoff_table(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    auto join_list = [](const std::vector<int>& v) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
      }
      return s;
    };
    Params prov{{"version", kVersion},
                {"command", "cutoff-table"},
                {"seed", std::to_string(cfg.seed)},
                {"n_list", join_list(cfg.n_list)},
                {"q_list", join_list(cfg.q_list)},
                {"max_group_size", std::to_string(cfg.max_group_size)}};
    if (cfg.c) prov.emplace_back("c", format_double(*cfg.c));
    write_csv_header(out, prov);
    out << "n,q,c,t_nq,delta_nq,t_lower,t_upper,t_mix_quarter,delta_over_t,bracket_ok\n";

    for (int n : cfg.n_list) {
      for (int q : cfg.q_list) {
        const double c = cfg.c.value_or(min_upper_c(n));
        const TheoremTimes times = theorem_times(n, q, c);
        std::optional<uint64_t> tmix;
        if (fits_cap(n, q, cfg.max_group_size)) {
          tmix = t_mix_quarter(enumerate_spectrum(n, q, cfg.max_group_size), 100000);
        }
        out << n << "," << q << "," << format_double(c) << ","
            << format_double(times.t_nq) << "," << format_double(times.delta_nq)
            << "," << format_double(times.t_lower) << ","
            << format_double(times.t_upper) << ",";
        if (tmix) out << *tmix;
        out << "," << format_double(times.delta_nq / times.t_nq) << ",";
        // The lower-bound bracket is meaningful only when the guarantee
        // 1 - q^{-c} clears the 1/4 threshold and the bound time is positive.
        if (tmix && times.t_lower > 0 && std::pow(q, -c) <= 0.75) {
          out << (times.t_lower <= static_cast<double>(*tmix) ? "1" : "0");
        }
        out << "\n";
      }
    }
    return kExitOk;
  });
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const std::vector<std::pair<int, int>> tiny{{3, 2}, {4, 2}, {3, 3}};
    const bool full = cfg.exhaustive;
    std::vector<SuiteReport> reports;
    auto want = [&](const std::string& name) {
      return cfg.suite == "all" || cfg.suite == name;
    };

    if (want("lemma3_2")) {
      if (cfg.exhaustive && cfg.n_given && cfg.suite == "lemma3_2") {
        // Single-instance exhaustive run over (Z/qZ)^(n-1).
        reports.push_back(lemma_3_2_exhaustive(cfg.n(), cfg.q()));
      } else {
        reports.push_back(lemma_3_2_exhaustive_sweep(
            full ? (uint64_t{1} << 20) : (uint64_t{1} << 14), full ? 101 : 11));
        reports.push_back(
            lemma_3_2_random(full ? 100000 : 5000, 64, 101, cfg.seed));
      }
    }
    if (want("lemma3_3")) {
      reports.push_back(lemma_3_3_suite(tiny, full ? 10000 : 1000, cfg.seed));
    }
    if (want("lemma3_5")) {
      reports.push_back(lemma_3_5_suite(tiny, full ? 10000 : 1000, cfg.seed));
    }
    if (want("boxes_lower")) {
      reports.push_back(box_lower_bound_suite(tiny, full ? 10000 : 1000, cfg.seed));
    }
    if (want("oracles")) {
      reports.push_back(prefix_oracle_suite(tiny, full ? 10000 : 1000, cfg.seed));
    }
    if (want("spectral")) {
      reports.push_back(spectral_equivalence_suite(tiny));
    }
    if (want("negative")) {
      reports.push_back(negative_eigenvalue_suite(
          full ? (uint64_t{1} << 20) : (uint64_t{1} << 16), full ? 101 : 16));
    }
    if (reports.empty()) {
      throw std::invalid_argument("unknown suite: " + cfg.suite);
    }

    bool all_passed = true;
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : reports) {
      suites.push_back(r.to_json());
      all_passed = all_passed && r.passed();
    }
    out << nlohmann::json{{"version", kVersion},
                          {"seed", cfg.seed},
                          {"suites", suites},
                          {"all_passed", all_passed}}
               .dump(2)
        << "\n";
    return all_passed ? kExitOk : kExitCounterexample;
  });
}

int cmd_spectrum(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const int n = cfg.n();
    const int q = cfg.q();
    const Spectrum s = enumerate_spectrum(n, q, cfg.max_group_size);
    write_csv_header(out, {{"version", kVersion},
                           {"command", "spectrum"},
                           {"n", std::to_string(n)},
                           {"q", std::to_string(q)},
                           {"max_group_size", std::to_string(cfg.max_group_size)}});
    out << "lambda,multiplicity\n";
    for (const auto& [value, mult] : spectrum_multiplicities(s)) {
      out << format_double(value) << "," << mult << "\n";
    }
    return kExitOk;
  });
}

int cmd_dist(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const int n = cfg.n();
    const int q = cfg.q();
    const uint64_t t = cfg.steps.value_or(static_cast<uint64_t>(cfg.t_min));
    const auto dist = exact_distribution(n, q, t, cfg.max_group_size);
    write_csv_header(out, {{"version", kVersion},
                           {"command", "dist"},
                           {"n", std::to_string(n)},
                           {"q", std::to_string(q)},
                           {"t", std::to_string(t)},
                           {"max_group_size", std::to_string(cfg.max_group_size)}});
    out << "element_index,probability\n";
    for (size_t g = 0; g < dist.size(); ++g) {
      out << g << "," << format_double(dist[g]) << "\n";
    }
    return kExitOk;
  });
}

}  // namespace dgw
