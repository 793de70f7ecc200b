#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sclab/betti.hpp"
#include "sclab/schedule.hpp"
#include "sclab/stats.hpp"

namespace sclab {

enum class Observable { N, M, FVector, Betti, LinkStats, Garland };

std::string observable_name(Observable o);
Observable observable_from_name(const std::string& name);

struct ExperimentConfig {
  std::string name = "experiment";
  std::vector<int> n_values;
  ProbabilitySchedule schedule;
  int k = 2;  // analysis dimension: N_{k-1}, M_{k-1}, beta^{k-1}, links of (k-2)-faces
  int trials = 1;
  std::uint64_t master_seed = 0;
  std::set<Observable> observables;
  std::string output_dir;  // empty: results stay in memory, nothing is written
  // Per-trial complex dumps under <output_dir>/complexes. Unset: enabled
  // exactly for groups with n <= 60.
  std::optional<bool> save_complexes;
  // Reference mean for the Poisson fit of N. Unset: taken from a critical
  // schedule when there is one, otherwise no fit is run.
  std::optional<double> gof_mu;
  double gof_threshold = 0.1;
  RankMethod rank_method = RankMethod::Auto;
};

std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json_text(const std::string& text);

struct ExperimentRecord {
  int trial = 0;
  std::uint64_t seed = 0;  // = mix(mix(master_seed, n), trial)
  int n = 0;
  std::optional<std::int64_t> free_count;      // N_{k-1}
  std::optional<std::int64_t> boundary_count;  // M_{k-1}
  std::vector<std::int64_t> f;      // length d_max+1 when tracked, else empty
  std::vector<std::int64_t> betti;  // full Betti vector when tracked, else empty
  bool link_tracked = false;
  std::int64_t link_faces = 0;       // number of (k-2)-faces
  std::int64_t link_vertex_sum = 0;  // sum of link vertex counts
  std::int64_t link_pair_sum = 0;    // sum of C(link vertices, 2)
  std::int64_t link_edge_sum = 0;    // sum of link edge counts
  std::optional<bool> garland_certified;
  double wall_ms = 0.0;  // informational only; never serialized
};

struct StatLine {
  double mean = 0.0;
  double variance = 0.0;
  double se = 0.0;
  std::optional<double> theory;
  std::optional<double> z;  // (mean - theory) / se, when both are defined
};

struct FactorialMomentLine {
  int order = 1;
  double value = 0.0;
  double se = 0.0;
  std::optional<double> theory;
};

struct GroupSummary {
  int n = 0;
  int trials = 0;
  // Keys: "N", "M", "betti_km1", "f0".."fD".
  std::map<std::string, StatLine> scalars;
  std::optional<double> gof_mu;
  std::optional<GofReport> gof;
  std::vector<FactorialMomentLine> factorial_moments;
  std::optional<StatLine> link_mean_L;     // per-trial mean link vertex count
  std::optional<StatLine> link_edge_freq;  // per-trial link edges / pairs
  std::int64_t garland_certified = 0;
  std::int64_t certified_with_nonzero_betti = 0;
  std::int64_t betti_km1_positive = 0;
  std::int64_t betti_k_positive = 0;
  std::int64_t betti_both_positive = 0;
};

struct RunResult {
  ExperimentConfig config;
  std::vector<ExperimentRecord> records;  // group order, then trial order
  std::vector<GroupSummary> groups;
  // Certified trials whose beta^{k-1} came out nonzero. Always 0 unless the
  // certificate is broken; the CLI turns this into a nonzero exit code.
  std::int64_t hard_violations = 0;
  std::string csv_path;
  std::string summary_path;
};

// Runs trials on a worker pool (SCLAB_WORKERS, default: hardware threads).
// Records are a pure function of the config; parallel and serial runs write
// byte-identical files. Failing trials abort the run with the seed in the
// error message.
RunResult run(const ExperimentConfig& config);

int worker_count();

std::string records_to_csv(const ExperimentConfig& config,
                           const std::vector<ExperimentRecord>& records);
std::string summary_to_json(const RunResult& result);

// Built-in experiment configs; `preset` throws on unknown names.
std::map<std::string, ExperimentConfig> presets();
ExperimentConfig preset(const std::string& name);

}  // namespace sclab
