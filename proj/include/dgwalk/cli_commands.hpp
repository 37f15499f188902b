#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dgwalk/common.hpp"

namespace dgw {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitCapExceeded = 3;

struct ExperimentConfig {
  std::vector<int> n_list{3};
  std::vector<int> q_list{2};
  std::optional<double> c;      // defaults to min_upper_c(n) where needed
  double eps = 0.75;
  int64_t t_min = 0;
  int64_t t_max = 60;
  int64_t t_step = 1;
  uint64_t trials = 10000;
  uint64_t seed = 1;
  uint64_t max_group_size = uint64_t{1} << 24;
  std::optional<uint64_t> steps;
  bool lazy = false;
  std::string format = "csv";  // csv | json
  std::string suite = "all";
  bool exhaustive = false;
  std::vector<int32_t> row_sums;  // empty = all zero
  std::vector<int32_t> col_sums;
  std::string trajectory_path;  // NDJSON trajectory stream when set
  bool with_f = false;          // include F in trajectory records
  bool n_given = false;         // --n was passed explicitly

  int n() const { return n_list.empty() ? 3 : n_list.front(); }
  int q() const { return q_list.empty() ? 2 : q_list.front(); }
};

// Each command writes its payload to `out` and diagnostics to `err`, and
// returns an exit code. Keeping them stream-based lets tests replay a run
// into a buffer and compare bytes.
int cmd_sample(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tv_curve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_wilson(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_cutoff_table(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dist(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dgw
