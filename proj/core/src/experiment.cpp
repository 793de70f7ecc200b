#include "sclab/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "sclab/complex_io.hpp"
#include "sclab/rank.hpp"
#include "sclab/rng.hpp"
#include "sclab/sampler.hpp"
#include "sclab/spectral.hpp"
#include "sclab/theory.hpp"

namespace sclab {

namespace {

bool tracked(const ExperimentConfig& config, Observable o) {
  return config.observables.count(o) > 0;
}

bool saves_complexes(const ExperimentConfig& config, int n) {
  return config.save_complexes.value_or(n <= 60);
}

std::vector<std::int64_t> padded(std::vector<std::int64_t> xs, std::size_t size) {
  if (xs.size() < size) xs.resize(size, 0);
  return xs;
}

// Poisson reference mean for the N distribution, when one is known.
std::optional<double> gof_mu_for(const ExperimentConfig& config) {
  if (config.gof_mu) return config.gof_mu;
  if (config.schedule.kind == ScheduleKind::Critical && config.schedule.k == config.k) {
    return theory::critical_params(config.schedule.k, config.schedule.alpha, config.schedule.b,
                                   config.schedule.c)
        .mu;
  }
  return std::nullopt;
}

void fill_observables(const ExperimentConfig& config, const SimplicialComplex& complex,
                      ExperimentRecord& rec) {
  const int k = config.k;
  const auto width = static_cast<std::size_t>(config.schedule.d_max) + 1;
  if (tracked(config, Observable::N)) rec.free_count = complex.count_free_faces(k);
  if (tracked(config, Observable::M)) rec.boundary_count = complex.unfilled_boundaries(k);
  if (tracked(config, Observable::FVector) || tracked(config, Observable::Betti)) {
    rec.f = padded(complex.f_vector(), width);
  }
  if (tracked(config, Observable::Betti)) {
    rec.betti = padded(betti(complex, config.rank_method, config.master_seed).betti, width);
  }
  if (tracked(config, Observable::LinkStats)) {
    rec.link_tracked = true;
    rec.link_faces = 0;
    rec.link_vertex_sum = 0;
    rec.link_pair_sum = 0;
    rec.link_edge_sum = 0;
    for (const LinkStat& s : link_statistics(complex, k)) {
      ++rec.link_faces;
      rec.link_vertex_sum += s.link_vertices;
      rec.link_pair_sum += s.link_vertices * (s.link_vertices - 1) / 2;
      rec.link_edge_sum += s.link_edges;
    }
  }
  if (tracked(config, Observable::Garland)) {
    const GarlandCertificate cert = garland_certificate(complex, k);
    rec.garland_certified = cert.certified;
    // the certificate promises beta^{k-1} = 0; keep the value for the check
    if (cert.certified && rec.betti.empty()) {
      rec.betti = padded(betti(complex, config.rank_method, config.master_seed).betti, width);
    }
  }
}

bool same_observables(const ExperimentRecord& a, const ExperimentRecord& b) {
  return a.free_count == b.free_count && a.boundary_count == b.boundary_count && a.f == b.f &&
         a.betti == b.betti && a.link_faces == b.link_faces &&
         a.link_vertex_sum == b.link_vertex_sum && a.link_pair_sum == b.link_pair_sum &&
         a.link_edge_sum == b.link_edge_sum && a.garland_certified == b.garland_certified;
}

ExperimentRecord compute_record(const ExperimentConfig& config, int n, int trial,
                                int roundtrip_stride, const std::string& complex_dir) {
  ExperimentRecord rec;
  rec.trial = trial;
  rec.n = n;
  rec.seed = rng::mix(rng::mix(config.master_seed, static_cast<std::uint64_t>(n)),
                      static_cast<std::uint64_t>(trial));

  const auto start = std::chrono::steady_clock::now();
  SampleSpec spec;
  spec.n = n;
  spec.schedule = config.schedule;
  spec.seed = rec.seed;
  const SimplicialComplex complex = sample(spec);
  fill_observables(config, complex, rec);

  if (trial % roundtrip_stride == 0) {
    // serialize, reload, recompute: the record must be reproducible from disk
    const SimplicialComplex reloaded = complex_from_json_text(complex_to_json(complex));
    if (reloaded != complex) {
      throw std::runtime_error("round-trip reload mismatch, seed=" + std::to_string(rec.seed));
    }
    ExperimentRecord check;
    fill_observables(config, reloaded, check);
    if (!same_observables(rec, check)) {
      throw std::runtime_error("round-trip observable mismatch, seed=" + std::to_string(rec.seed));
    }
  }

  if (!complex_dir.empty() && saves_complexes(config, n)) {
    std::ostringstream name;
    name << config.name << "_n" << n << "_t";
    const std::string digits = std::to_string(trial);
    for (std::size_t i = digits.size(); i < 5; ++i) name << '0';
    name << digits << ".json";
    save_complex(complex, complex_dir + "/" + name.str(), sample_spec_to_json(spec));
  }

  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

StatLine make_stat(const std::vector<double>& xs, std::optional<double> theory) {
  StatLine s;
  s.mean = mean(xs);
  s.variance = sample_variance(xs);
  s.se = standard_error(xs);
  s.theory = theory;
  if (theory && s.se > 0.0) s.z = (s.mean - *theory) / s.se;
  return s;
}

GroupSummary summarize_group(const ExperimentConfig& config, int n,
                             std::span<const ExperimentRecord> records) {
  GroupSummary g;
  g.n = n;
  g.trials = static_cast<int>(records.size());
  const int k = config.k;
  const int d_max = config.schedule.d_max;
  const std::vector<double> probs = config.schedule.probs_up_to(std::max(k, d_max), n);

  if (tracked(config, Observable::N)) {
    std::vector<std::int64_t> values;
    values.reserve(records.size());
    for (const auto& r : records) values.push_back(*r.free_count);
    g.scalars["N"] = make_stat(to_doubles(values), theory::expected_free_faces(n, k, probs));

    const std::optional<double> mu = gof_mu_for(config);
    if (mu) {
      g.gof_mu = mu;
      g.gof = poisson_gof(values, *mu, config.gof_threshold);
      for (int order = 1; order <= 2; ++order) {
        FactorialMomentLine line;
        line.order = order;
        line.value = factorial_moment(values, order);
        std::vector<double> terms;
        terms.reserve(values.size());
        for (std::int64_t x : values) {
          double t = 1.0;
          for (int i = 0; i < order; ++i) t *= static_cast<double>(x - i);
          terms.push_back(t);
        }
        line.se = standard_error(terms);
        line.theory = std::pow(*mu, order);
        g.factorial_moments.push_back(line);
      }
    }
  }
  if (tracked(config, Observable::M)) {
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& r : records) values.push_back(static_cast<double>(*r.boundary_count));
    g.scalars["M"] = make_stat(values, theory::expected_boundaries(n, k, probs));
  }
  if (tracked(config, Observable::FVector) || tracked(config, Observable::Betti)) {
    for (int d = 0; d <= d_max; ++d) {
      std::vector<double> values;
      values.reserve(records.size());
      for (const auto& r : records) values.push_back(static_cast<double>(r.f[static_cast<std::size_t>(d)]));
      g.scalars["f" + std::to_string(d)] =
          make_stat(values, theory::expected_face_count(n, d, probs));
    }
  }
  if (tracked(config, Observable::Betti)) {
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& r : records) {
      const auto km1 = static_cast<std::size_t>(k - 1);
      const std::int64_t beta = km1 < r.betti.size() ? r.betti[km1] : 0;
      values.push_back(static_cast<double>(beta));
      if (beta > 0) ++g.betti_km1_positive;
      const std::int64_t beta_k =
          static_cast<std::size_t>(k) < r.betti.size() ? r.betti[static_cast<std::size_t>(k)] : 0;
      if (beta_k > 0) ++g.betti_k_positive;
      if (beta > 0 && beta_k > 0) ++g.betti_both_positive;
    }
    g.scalars["betti_km1"] = make_stat(values, std::nullopt);
  }
  if (tracked(config, Observable::LinkStats)) {
    const theory::LinkParams lp = theory::link_params(k, probs);
    std::vector<double> mean_L;
    std::vector<double> freq;
    for (const auto& r : records) {
      if (r.link_faces > 0) {
        mean_L.push_back(static_cast<double>(r.link_vertex_sum) /
                         static_cast<double>(r.link_faces));
      }
      if (r.link_pair_sum > 0) {
        freq.push_back(static_cast<double>(r.link_edge_sum) /
                       static_cast<double>(r.link_pair_sum));
      }
    }
    if (!mean_L.empty()) {
      g.link_mean_L = make_stat(mean_L, static_cast<double>(n - k + 1) * lp.p_bar);
    }
    if (!freq.empty()) g.link_edge_freq = make_stat(freq, lp.p_prime);
  }
  if (tracked(config, Observable::Garland)) {
    for (const auto& r : records) {
      if (!r.garland_certified.value_or(false)) continue;
      ++g.garland_certified;
      const auto km1 = static_cast<std::size_t>(k - 1);
      const std::int64_t beta = km1 < r.betti.size() ? r.betti[km1] : 0;
      if (beta != 0) ++g.certified_with_nonzero_betti;
    }
  }
  return g;
}

nlohmann::json stat_to_json(const StatLine& s) {
  nlohmann::json j;
  j["mean"] = s.mean;
  j["variance"] = s.variance;
  j["se"] = s.se;
  if (s.theory) j["theory"] = *s.theory;
  if (s.z) j["z"] = *s.z;
  return j;
}

}  // namespace

std::string observable_name(Observable o) {
  switch (o) {
    case Observable::N: return "N";
    case Observable::M: return "M";
    case Observable::FVector: return "f_vector";
    case Observable::Betti: return "betti";
    case Observable::LinkStats: return "link_stats";
    case Observable::Garland: return "garland";
  }
  throw std::logic_error("observable_name: bad enum value");
}

Observable observable_from_name(const std::string& name) {
  if (name == "N") return Observable::N;
  if (name == "M") return Observable::M;
  if (name == "f_vector") return Observable::FVector;
  if (name == "betti") return Observable::Betti;
  if (name == "link_stats") return Observable::LinkStats;
  if (name == "garland") return Observable::Garland;
  throw std::invalid_argument("unknown observable: " + name);
}

int worker_count() {
  if (const char* env = std::getenv("SCLAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
    std::cerr << "SCLAB_WORKERS ignored (want an integer in [1,256]): " << env << "\n";
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

RunResult run(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("run: trials must be >= 1");
  if (config.observables.empty()) throw std::invalid_argument("run: observables must be non-empty");
  if (config.n_values.empty()) throw std::invalid_argument("run: n list must be non-empty");
  if (config.k < 1) throw std::invalid_argument("run: k must be >= 1");
  if ((tracked(config, Observable::LinkStats) || tracked(config, Observable::Garland)) &&
      config.k < 2) {
    throw std::invalid_argument("run: link and certificate observables need k >= 2");
  }

  std::string complex_dir;
  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    bool any_saves = false;
    for (int n : config.n_values) any_saves = any_saves || saves_complexes(config, n);
    if (any_saves) {
      complex_dir = config.output_dir + "/complexes";
      std::filesystem::create_directories(complex_dir);
    }
  }

  RunResult result;
  result.config = config;
  const auto trials = static_cast<std::size_t>(config.trials);
  const std::size_t total = config.n_values.size() * trials;
  result.records.resize(total);
  const int roundtrip_stride = std::max(1, config.trials / 8);

  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr error;

  const int workers = std::min<int>(worker_count(), static_cast<int>(total));
  auto work = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t index = next.fetch_add(1, std::memory_order_relaxed);
      if (index >= total) return;
      const int group = static_cast<int>(index / trials);
      const int trial = static_cast<int>(index % trials);
      const int n = config.n_values[static_cast<std::size_t>(group)];
      try {
        result.records[index] = compute_record(config, n, trial, roundtrip_stride, complex_dir);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) {
    std::cerr << config.name << ": trial failed, aborting run\n";
    std::rethrow_exception(error);
  }

  for (std::size_t group = 0; group < config.n_values.size(); ++group) {
    const std::span<const ExperimentRecord> slice(result.records.data() + group * trials, trials);
    result.groups.push_back(summarize_group(config, config.n_values[group], slice));
  }
  for (const GroupSummary& g : result.groups) {
    result.hard_violations += g.certified_with_nonzero_betti;
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << config.name << ": " << config.n_values.size() << " group(s) x " << config.trials
            << " trial(s), " << workers << " worker(s), " << seconds << " s\n";

  if (!config.output_dir.empty()) {
    result.csv_path = config.output_dir + "/" + config.name + "_records.csv";
    std::ofstream csv(result.csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open for writing: " + result.csv_path);
    csv << records_to_csv(config, result.records);

    result.summary_path = config.output_dir + "/" + config.name + "_summary.json";
    std::ofstream summary(result.summary_path, std::ios::binary);
    if (!summary) throw std::runtime_error("cannot open for writing: " + result.summary_path);
    summary << summary_to_json(result) << '\n';
  }
  return result;
}

std::string records_to_csv(const ExperimentConfig& config,
                           const std::vector<ExperimentRecord>& records) {
  const int d_max = config.schedule.d_max;
  const bool has_f = tracked(config, Observable::FVector) || tracked(config, Observable::Betti);
  const bool has_betti = tracked(config, Observable::Betti);

  std::ostringstream out;
  out << "trial,seed,n,N,M,betti_km1";
  for (int d = 0; d <= d_max; ++d) out << ",f" << d;
  out << ",garland,tv_na\n";

  for (const ExperimentRecord& r : records) {
    out << r.trial << ',' << r.seed << ',' << r.n << ',';
    if (r.free_count) {
      out << *r.free_count;
    } else {
      out << "na";
    }
    out << ',';
    if (r.boundary_count) {
      out << *r.boundary_count;
    } else {
      out << "na";
    }
    out << ',';
    if (has_betti) {
      const auto km1 = static_cast<std::size_t>(config.k - 1);
      out << (km1 < r.betti.size() ? r.betti[km1] : 0);
    } else {
      out << "na";
    }
    for (int d = 0; d <= d_max; ++d) {
      out << ',';
      if (has_f) {
        out << r.f[static_cast<std::size_t>(d)];
      } else {
        out << "na";
      }
    }
    out << ',';
    if (r.garland_certified) {
      out << (*r.garland_certified ? 1 : 0);
    } else {
      out << "na";
    }
    out << ",na\n";
  }
  return out.str();
}

std::string summary_to_json(const RunResult& result) {
  const ExperimentConfig& config = result.config;
  nlohmann::json j;
  j["name"] = config.name;
  j["k"] = config.k;
  j["trials"] = config.trials;
  j["master_seed"] = config.master_seed;
  j["schedule"] = nlohmann::json::parse(schedule_to_json(config.schedule));
  if (tracked(config, Observable::Betti) || tracked(config, Observable::Garland)) {
    j["rank_prime"] = derive_rank_prime(config.master_seed);
  }
  j["hard_violations"] = result.hard_violations;

  nlohmann::json groups = nlohmann::json::array();
  for (const GroupSummary& g : result.groups) {
    nlohmann::json gj;
    gj["n"] = g.n;
    gj["trials"] = g.trials;
    nlohmann::json scalars;
    for (const auto& [key, stat] : g.scalars) scalars[key] = stat_to_json(stat);
    gj["scalars"] = std::move(scalars);
    if (g.gof) {
      gj["gof"] = {{"mu", *g.gof_mu},
                   {"tv", g.gof->tv_distance},
                   {"chi2", g.gof->chi2_stat},
                   {"pass", g.gof->pass}};
    }
    if (!g.factorial_moments.empty()) {
      nlohmann::json moments = nlohmann::json::array();
      for (const auto& line : g.factorial_moments) {
        nlohmann::json lj;
        lj["order"] = line.order;
        lj["value"] = line.value;
        lj["se"] = line.se;
        if (line.theory) lj["theory"] = *line.theory;
        moments.push_back(std::move(lj));
      }
      gj["factorial_moments"] = std::move(moments);
    }
    if (g.link_mean_L) gj["link_mean_L"] = stat_to_json(*g.link_mean_L);
    if (g.link_edge_freq) gj["link_edge_freq"] = stat_to_json(*g.link_edge_freq);
    if (tracked(config, Observable::Garland)) {
      gj["garland"] = {{"certified", g.garland_certified},
                       {"rate", static_cast<double>(g.garland_certified) /
                                    static_cast<double>(g.trials)},
                       {"certified_with_nonzero_betti", g.certified_with_nonzero_betti}};
    }
    if (tracked(config, Observable::Betti)) {
      gj["betti_positive"] = {{"km1", g.betti_km1_positive},
                              {"k", g.betti_k_positive},
                              {"both", g.betti_both_positive}};
    }
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  return j.dump(2);
}

std::string config_to_json(const ExperimentConfig& config) {
  nlohmann::json j;
  j["name"] = config.name;
  j["n"] = config.n_values;
  j["k"] = config.k;
  j["trials"] = config.trials;
  j["master_seed"] = config.master_seed;
  j["schedule"] = nlohmann::json::parse(schedule_to_json(config.schedule));
  std::vector<std::string> names;
  for (Observable o : config.observables) names.push_back(observable_name(o));
  j["observables"] = names;
  if (!config.output_dir.empty()) j["out"] = config.output_dir;
  if (config.save_complexes) j["save_complexes"] = *config.save_complexes;
  if (config.gof_mu) j["gof_mu"] = *config.gof_mu;
  j["gof_threshold"] = config.gof_threshold;
  switch (config.rank_method) {
    case RankMethod::Auto: j["rank_method"] = "auto"; break;
    case RankMethod::Exact: j["rank_method"] = "exact"; break;
    case RankMethod::ModPrime: j["rank_method"] = "mod_prime"; break;
  }
  return j.dump(2);
}

ExperimentConfig config_from_json_text(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ExperimentConfig config;
  if (j.contains("name")) config.name = j.at("name").get<std::string>();
  config.n_values = j.at("n").get<std::vector<int>>();
  if (j.contains("k")) config.k = j.at("k").get<int>();
  if (j.contains("trials")) config.trials = j.at("trials").get<int>();
  if (j.contains("master_seed")) config.master_seed = j.at("master_seed").get<std::uint64_t>();
  config.schedule = schedule_from_json_text(j.at("schedule").dump());
  config.observables.clear();
  for (const auto& name : j.at("observables")) {
    config.observables.insert(observable_from_name(name.get<std::string>()));
  }
  if (j.contains("out")) config.output_dir = j.at("out").get<std::string>();
  if (j.contains("save_complexes")) config.save_complexes = j.at("save_complexes").get<bool>();
  if (j.contains("gof_mu")) config.gof_mu = j.at("gof_mu").get<double>();
  if (j.contains("gof_threshold")) config.gof_threshold = j.at("gof_threshold").get<double>();
  if (j.contains("rank_method")) {
    const std::string m = j.at("rank_method").get<std::string>();
    if (m == "auto") {
      config.rank_method = RankMethod::Auto;
    } else if (m == "exact") {
      config.rank_method = RankMethod::Exact;
    } else if (m == "mod_prime") {
      config.rank_method = RankMethod::ModPrime;
    } else {
      throw std::invalid_argument("unknown rank_method: " + m);
    }
  }
  return config;
}

std::map<std::string, ExperimentConfig> presets() {
  std::map<std::string, ExperimentConfig> out;
  {
    ExperimentConfig c;
    c.name = "prop11";
    c.n_values = {40, 80};
    c.schedule = ProbabilitySchedule::power_law({3.0 / 8.0, 3.0 / 8.0, 3.0 / 8.0}, 3);
    c.k = 2;
    c.trials = 200;
    c.master_seed = 42;
    c.observables = {Observable::FVector, Observable::Betti};
    out.emplace(c.name, std::move(c));
  }
  {
    ExperimentConfig c;
    c.name = "critical-poisson";
    c.n_values = {50, 100, 200};
    c.schedule = ProbabilitySchedule::critical(2, {0.5, 0.0}, {0.5, 0.0}, 0.0, 2);
    c.k = 2;
    c.trials = 2000;
    c.master_seed = 42;
    c.observables = {Observable::N};
    c.save_complexes = false;
    c.gof_threshold = 0.1;
    out.emplace(c.name, std::move(c));
  }
  {
    ExperimentConfig c;
    c.name = "betti-dominant";
    c.n_values = {60};
    c.schedule = ProbabilitySchedule::power_law({0.4, 0.4}, 2);
    c.k = 2;
    c.trials = 200;
    c.master_seed = 42;
    c.observables = {Observable::Betti};
    out.emplace(c.name, std::move(c));
  }
  {
    ExperimentConfig c;
    c.name = "link-law";
    c.n_values = {50};
    c.schedule = ProbabilitySchedule::explicit_probs({0.7, 0.7}, 2);
    c.k = 2;
    c.trials = 500;
    c.master_seed = 42;
    c.observables = {Observable::LinkStats};
    out.emplace(c.name, std::move(c));
  }
  {
    ExperimentConfig c;
    c.name = "variance-ratio";
    c.n_values = {30, 60, 120};
    c.schedule = ProbabilitySchedule::power_law({0.4, 0.4}, 2);
    c.k = 2;
    c.trials = 2000;
    c.master_seed = 42;
    c.observables = {Observable::M};
    c.save_complexes = false;
    out.emplace(c.name, std::move(c));
  }
  {
    ExperimentConfig c;
    c.name = "garland-regime";
    c.n_values = {40};
    c.schedule = ProbabilitySchedule::power_law({0.2, 0.1}, 2);
    c.k = 2;
    c.trials = 500;
    c.master_seed = 42;
    c.observables = {Observable::Garland, Observable::Betti};
    out.emplace(c.name, std::move(c));
  }
  return out;
}

ExperimentConfig preset(const std::string& name) {
  auto all = presets();
  auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown preset: " + name);
  return it->second;
}

}  // namespace sclab
