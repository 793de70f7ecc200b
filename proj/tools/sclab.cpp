// Command-line front end: sampling, Betti numbers, vanishing certificates,
// closed-form expectations, regime classification, and seeded experiments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sclab/betti.hpp"
#include "sclab/complex_io.hpp"
#include "sclab/experiment.hpp"
#include "sclab/sampler.hpp"
#include "sclab/schedule.hpp"
#include "sclab/spectral.hpp"
#include "sclab/theory.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  out << text << '\n';
}

sclab::SimplicialComplex load_input_complex(const std::string& path) {
  return sclab::complex_from_json_text(read_file(path));
}

int run_sample(const std::string& config_path, int n, std::uint64_t seed, int d_max,
               const std::vector<double>& p, const std::vector<double>& alpha,
               const std::string& out_path) {
  sclab::SampleSpec spec;
  if (!config_path.empty()) {
    spec = sclab::sample_spec_from_json_text(read_file(config_path));
  } else {
    if (n <= 0) throw CLI::ValidationError("--n is required without --config");
    if (!p.empty() && !alpha.empty()) {
      throw CLI::ValidationError("give either --p or --alpha, not both");
    }
    if (p.empty() && alpha.empty()) {
      throw CLI::ValidationError("give a probability list --p or exponent list --alpha");
    }
    spec.n = n;
    spec.seed = seed;
    const int dims = d_max > 0 ? d_max : static_cast<int>(std::max(p.size(), alpha.size()));
    spec.schedule = p.empty() ? sclab::ProbabilitySchedule::power_law(alpha, dims)
                              : sclab::ProbabilitySchedule::explicit_probs(p, dims);
  }
  const sclab::SimplicialComplex complex = sclab::sample(spec);
  write_output(sclab::complex_to_json(complex, sclab::sample_spec_to_json(spec)), out_path);
  return 0;
}

int run_betti(const std::string& in_path, const std::string& method_name,
              std::uint64_t prime_seed, const std::string& out_path) {
  sclab::RankMethod method = sclab::RankMethod::Auto;
  if (method_name == "exact") {
    method = sclab::RankMethod::Exact;
  } else if (method_name == "mod-prime") {
    method = sclab::RankMethod::ModPrime;
  } else if (method_name != "auto") {
    throw CLI::ValidationError("--method must be auto, exact, or mod-prime");
  }
  const sclab::BettiReport report = sclab::betti(load_input_complex(in_path), method, prime_seed);
  write_output(sclab::betti_report_to_json(report), out_path);
  return 0;
}

int run_garland(const std::string& in_path, int k, const std::string& out_path) {
  const sclab::GarlandCertificate cert = sclab::garland_certificate(load_input_complex(in_path), k);
  write_output(sclab::garland_to_json(cert), out_path);
  return 0;
}

int run_expect(int n, int k, const std::vector<double>& p, const std::string& out_path) {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["p"] = p;
  j["free_faces"] = sclab::theory::expected_free_faces(n, k, p);
  j["boundaries"] = sclab::theory::expected_boundaries(n, k, p);
  nlohmann::json faces;
  for (int d = 0; d <= static_cast<int>(p.size()); ++d) {
    faces["f" + std::to_string(d)] = sclab::theory::expected_face_count(n, d, p);
  }
  j["faces"] = std::move(faces);
  const auto eg = sclab::theory::eta_gamma(k, p);
  j["eta"] = eg.eta;
  j["gamma"] = eg.gamma;
  if (k >= 2) {
    const auto lp = sclab::theory::link_params(k, p);
    j["link"] = {{"p_bar", lp.p_bar}, {"p_prime", lp.p_prime}};
  }
  write_output(j.dump(2), out_path);
  return 0;
}

int run_classify(const std::vector<double>& alpha, int k_min, int k_max, bool pk_one,
                 bool as_json, const std::string& out_path) {
  if (k_min < 1 || k_max < k_min) throw CLI::ValidationError("need 1 <= k-min <= k-max");
  if (static_cast<int>(alpha.size()) < k_max) {
    throw CLI::ValidationError("need alpha values up to k-max");
  }
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  table << "  k  sum(1.2)     sum(1.3)     sum(1.4)     label\n";
  for (int k = k_min; k <= k_max; ++k) {
    sclab::theory::RegimeInput in;
    in.k = k;
    in.alpha = alpha;
    in.pk_is_one = pk_one;
    const auto verdict = sclab::theory::classify_regime(in);
    nlohmann::json row;
    row["k"] = k;
    row["vanishing_sum"] = verdict.sums.vanishing;
    row["betti_sum"] = verdict.sums.betti;
    row["boundary_sum"] = verdict.sums.boundaries;
    row["label"] = sclab::theory::to_string(verdict.label);
    rows.push_back(std::move(row));
    char line[160];
    std::snprintf(line, sizeof(line), "%3d  %-11.6g  %-11.6g  %-11.6g  %s\n", k,
                  verdict.sums.vanishing, verdict.sums.betti, verdict.sums.boundaries,
                  sclab::theory::to_string(verdict.label).c_str());
    table << line;
  }
  write_output(as_json ? rows.dump(2) : table.str(), out_path);
  return 0;
}

int run_experiment(const std::string& config_path, const std::string& preset_name,
                   std::optional<std::uint64_t> seed, std::optional<int> trials,
                   const std::string& out_dir) {
  if (config_path.empty() == preset_name.empty()) {
    throw CLI::ValidationError("give exactly one of --config or --preset");
  }
  sclab::ExperimentConfig config = config_path.empty()
                                       ? sclab::preset(preset_name)
                                       : sclab::config_from_json_text(read_file(config_path));
  if (seed) config.master_seed = *seed;
  if (trials) config.trials = *trials;
  if (!out_dir.empty()) config.output_dir = out_dir;
  if (config.output_dir.empty()) config.output_dir = "out/" + config.name;

  const sclab::RunResult result = sclab::run(config);
  std::cout << sclab::summary_to_json(result) << '\n';
  std::cerr << "records: " << result.csv_path << "\nsummary: " << result.summary_path << '\n';
  if (result.hard_violations > 0) {
    std::cerr << "hard invariant violated: " << result.hard_violations
              << " certified trial(s) with nonzero betti\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random multi-parameter simplicial complexes: sampling, Betti numbers, "
               "certificates, and seeded experiments"};
  app.require_subcommand(1);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "sample one complex, emit its JSON");
  std::string sample_config;
  int sample_n = 0;
  std::uint64_t sample_seed = 0;
  int sample_dmax = 0;
  std::vector<double> sample_p;
  std::vector<double> sample_alpha;
  std::string sample_out;
  sample_cmd->add_option("--config", sample_config, "sample spec JSON file");
  sample_cmd->add_option("--n", sample_n, "vertex count");
  sample_cmd->add_option("--seed", sample_seed, "sampling seed");
  sample_cmd->add_option("--d-max", sample_dmax, "highest dimension (default: list length)");
  sample_cmd->add_option("--p", sample_p, "explicit probabilities p1 p2 ...");
  sample_cmd->add_option("--alpha", sample_alpha, "power-law exponents a1 a2 ...");
  sample_cmd->add_option("--out", sample_out, "output file (default: stdout)");

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a complex JSON");
  std::string betti_in;
  std::string betti_method = "auto";
  std::uint64_t betti_prime_seed = sclab::kDefaultPrimeSeed;
  std::string betti_out;
  betti_cmd->add_option("input", betti_in, "complex JSON file")->required();
  betti_cmd->add_option("--method", betti_method, "auto | exact | mod-prime");
  betti_cmd->add_option("--prime-seed", betti_prime_seed, "seed for the rank prime");
  betti_cmd->add_option("--out", betti_out, "output file (default: stdout)");

  // garland
  auto* garland_cmd = app.add_subcommand("garland", "vanishing certificate for beta^{k-1}");
  std::string garland_in;
  int garland_k = 2;
  std::string garland_out;
  garland_cmd->add_option("input", garland_in, "complex JSON file")->required();
  garland_cmd->add_option("--k", garland_k, "dimension (certificate for beta^{k-1})");
  garland_cmd->add_option("--out", garland_out, "output file (default: stdout)");

  // expect
  auto* expect_cmd = app.add_subcommand("expect", "closed-form expectations");
  int expect_n = 0;
  int expect_k = 2;
  std::vector<double> expect_p;
  std::string expect_out;
  expect_cmd->add_option("--n", expect_n, "vertex count")->required();
  expect_cmd->add_option("--k", expect_k, "dimension");
  expect_cmd->add_option("--p", expect_p, "probabilities p1 p2 ...")->required();
  expect_cmd->add_option("--out", expect_out, "output file (default: stdout)");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "regime labels for exponent vectors");
  std::vector<double> classify_alpha;
  int classify_kmin = 2;
  int classify_kmax = 2;
  bool classify_pk_one = false;
  bool classify_json = false;
  std::string classify_out;
  classify_cmd->add_option("--alpha", classify_alpha, "exponents a1 a2 ...")->required();
  classify_cmd->add_option("--k-min", classify_kmin, "first dimension");
  classify_cmd->add_option("--k-max", classify_kmax, "last dimension");
  classify_cmd->add_flag("--pk-one", classify_pk_one, "treat p_k as exactly 1");
  classify_cmd->add_flag("--json", classify_json, "JSON output instead of a table");
  classify_cmd->add_option("--out", classify_out, "output file (default: stdout)");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "run a seeded Monte Carlo experiment");
  std::string exp_config;
  std::string exp_preset;
  std::optional<std::uint64_t> exp_seed;
  std::optional<int> exp_trials;
  std::string exp_out;
  exp_cmd->add_option("--config", exp_config, "experiment config JSON file");
  exp_cmd->add_option("--preset", exp_preset, "built-in config name");
  exp_cmd->add_option("--seed", exp_seed, "master seed override");
  exp_cmd->add_option("--trials", exp_trials, "trial count override");
  exp_cmd->add_option("--out", exp_out, "output directory (default: out/<name>)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample_cmd) {
      return run_sample(sample_config, sample_n, sample_seed, sample_dmax, sample_p, sample_alpha,
                        sample_out);
    }
    if (*betti_cmd) return run_betti(betti_in, betti_method, betti_prime_seed, betti_out);
    if (*garland_cmd) return run_garland(garland_in, garland_k, garland_out);
    if (*expect_cmd) return run_expect(expect_n, expect_k, expect_p, expect_out);
    if (*classify_cmd) {
      return run_classify(classify_alpha, classify_kmin, classify_kmax, classify_pk_one,
                          classify_json, classify_out);
    }
    if (*exp_cmd) return run_experiment(exp_config, exp_preset, exp_seed, exp_trials, exp_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
