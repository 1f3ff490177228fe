#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "rainbow/brute_rc.hpp"
#include "rainbow/cycle_classes.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/greedy_power.hpp"
#include "rainbow/pairing.hpp"
#include "rainbow/params.hpp"
#include "rainbow/thm1_coloring.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

enum class ExperimentMode { Thm1, Regular, Brute, LemcolStress };

inline std::string_view to_string(ExperimentMode m) {
  switch (m) {
    case ExperimentMode::Thm1: return "thm1";
    case ExperimentMode::Regular: return "regular";
    case ExperimentMode::Brute: return "brute";
    case ExperimentMode::LemcolStress: return "lemcol_stress";
  }
  return "thm1";
}

inline ExperimentMode parse_experiment_mode(std::string_view s) {
  for (auto m : {ExperimentMode::Thm1, ExperimentMode::Regular, ExperimentMode::Brute, ExperimentMode::LemcolStress})
    if (to_string(m) == s) return m;
  throw Error(ErrorCode::InvalidArgument, "unknown experiment mode '" + std::string(s) + "'");
}

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::Thm1;
  std::vector<std::size_t> n_values;
  std::optional<double> omega;  // thm1/brute; default log log n
  std::optional<double> p;
  std::size_t r = 3;
  std::optional<double> epsilon;
  std::size_t trials = 1;
  std::size_t sampled_pairs = 200;
  std::uint64_t seed = 0;
  std::string output;
  std::uint64_t budget = 1'000'000;
  std::size_t max_attempts = 1000;
  std::size_t d = 3;    // lemcol_stress arity; 2 selects the binary variant
  std::size_t ell = 2;  // lemcol_stress depth
  bool timing = false;

  void validate() const {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
    if (mode != ExperimentMode::LemcolStress && n_values.empty())
      throw Error(ErrorCode::InvalidArgument, "no n values given");
    if (p && (*p < 0.0 || *p > 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
    if (mode == ExperimentMode::Regular && r < 3) throw Error(ErrorCode::InvalidArgument, "r must be >= 3");
    if (mode == ExperimentMode::Brute)
      for (auto n : n_values)
        if (n > 8) throw Error(ErrorCode::InvalidArgument, "brute mode is limited to n <= 8");
    if (mode == ExperimentMode::LemcolStress) {
      if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be >= 2");
      if (ell < 1 || (d == 2 && ell < 2)) throw Error(ErrorCode::InvalidArgument, "ell too small for this arity");
    }
  }
};

namespace detail {

inline std::vector<std::size_t> parse_size_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const auto v = std::stoull(item, &pos);
    if (pos != item.size()) throw std::invalid_argument(item);
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace detail

/// Sets one configuration key. Throws Parse on unknown keys or bad values.
inline void apply_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  auto fail = [&] { return Error(ErrorCode::Parse, "bad value '" + value + "' for key " + key); };
  try {
    if (key == "mode") cfg.mode = parse_experiment_mode(value);
    else if (key == "n" || key == "n_values") cfg.n_values = detail::parse_size_list(value);
    else if (key == "omega") cfg.omega = std::stod(value);
    else if (key == "p") cfg.p = std::stod(value);
    else if (key == "r") cfg.r = std::stoull(value);
    else if (key == "epsilon") cfg.epsilon = std::stod(value);
    else if (key == "trials") cfg.trials = std::stoull(value);
    else if (key == "sampled_pairs" || key == "pairs") cfg.sampled_pairs = std::stoull(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "output" || key == "out") cfg.output = value;
    else if (key == "budget") cfg.budget = std::stoull(value);
    else if (key == "max_attempts") cfg.max_attempts = std::stoull(value);
    else if (key == "d") cfg.d = std::stoull(value);
    else if (key == "ell") cfg.ell = std::stoull(value);
    else if (key == "timing") {
      if (value != "true" && value != "false" && value != "1" && value != "0") throw fail();
      cfg.timing = value == "true" || value == "1";
    } else {
      throw Error(ErrorCode::Parse, "unknown config key '" + key + "'");
    }
  } catch (const std::logic_error&) {
    throw fail();
  }
}

/// Flat key=value file; blank lines and '#' comments are skipped.
inline void read_experiment_config(std::istream& in, ExperimentConfig& cfg) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::Parse, "config line " + std::to_string(line_no) + ": expected key=value");
    apply_config_value(cfg, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
}

/// One CSV row per (n, trial). Absent values print as NA.
struct ExperimentRecord {
  std::string mode;
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<double> p, omega, epsilon, L, p0, theta_r;
  std::optional<std::size_t> r, m, k, gamma, d;
  std::optional<std::uint64_t> q, Q, sigma;
  std::optional<std::size_t> z1, diameter;
  std::size_t pairs_tried = 0;
  std::size_t pairs_connected = 0;
  std::optional<double> mean_witness_length;
  std::optional<std::size_t> fresh_colors, rc;
  std::optional<std::size_t> pairs_found;  // lemcol_stress: pairs returned (sigma holds the guarantee)
  std::vector<std::string> flags;
  std::optional<double> elapsed_ms;

  std::optional<double> success_rate() const {
    if (!pairs_tried) return std::nullopt;
    return static_cast<double>(pairs_connected) / static_cast<double>(pairs_tried);
  }
};

inline constexpr std::string_view kExperimentCsvHeader =
    "schema,mode,n,trial,seed,p,omega,r,d,epsilon,m,L,k,gamma,q,Q,p0,theta_r,sigma,z1,diameter,"
    "pairs_tried,pairs_connected,success_rate,mean_witness_length,fresh_colors,rc,pairs_found,flags,elapsed_ms";
inline constexpr std::string_view kExperimentSchema = "v1";

namespace detail {

template <class T>
void csv_field(std::ostream& out, const std::optional<T>& v) {
  out << ',';
  if (!v) {
    out << "NA";
  } else if constexpr (std::is_floating_point_v<T>) {
    std::ostringstream s;
    s.precision(6);
    s << *v;
    out << s.str();
  } else {
    out << *v;
  }
}

}  // namespace detail

inline void write_record_csv(std::ostream& out, const ExperimentRecord& r) {
  using detail::csv_field;
  out << kExperimentSchema << ',' << r.mode << ',' << r.n << ',' << r.trial << ',' << r.seed;
  csv_field(out, r.p);
  csv_field(out, r.omega);
  csv_field(out, r.r);
  csv_field(out, r.d);
  csv_field(out, r.epsilon);
  csv_field(out, r.m);
  csv_field(out, r.L);
  csv_field(out, r.k);
  csv_field(out, r.gamma);
  csv_field(out, r.q);
  csv_field(out, r.Q);
  csv_field(out, r.p0);
  csv_field(out, r.theta_r);
  csv_field(out, r.sigma);
  csv_field(out, r.z1);
  csv_field(out, r.diameter);
  out << ',' << r.pairs_tried << ',' << r.pairs_connected;
  csv_field(out, r.success_rate());
  csv_field(out, r.mean_witness_length);
  csv_field(out, r.fresh_colors);
  csv_field(out, r.rc);
  csv_field(out, r.pairs_found);
  out << ',';
  for (std::size_t i = 0; i < r.flags.size(); ++i) out << (i ? ";" : "") << r.flags[i];
  csv_field(out, r.elapsed_ms);
  out << '\n';
}

/// Two vertex-disjoint complete d-ary trees of depth ell (vertices
/// 0..t-1 and t..2t-1 in BFS numbering), each rainbow under a random
/// injective coloring. Both draw from one palette of between t-1 and
/// 2(t-1) colors, so their color sets overlap heavily.
struct LemcolInstance {
  Graph graph;
  RootedTree t1;
  RootedTree t2;
  EdgeColoring coloring;
};

inline LemcolInstance make_lemcol_instance(std::size_t d, std::size_t ell, std::uint64_t seed) {
  LemcolInstance inst;
  const Graph one = graphs::complete_tree(d, ell);
  inst.graph = graphs::disjoint_union(one, one);
  const auto t = static_cast<Vertex>(one.num_vertices());
  const auto depth = static_cast<std::uint32_t>(ell);
  inst.t1 = grow_bfs_tree(inst.graph, 0, depth, 0.0);
  inst.t2 = grow_bfs_tree(inst.graph, t, depth, 0.0);
  Rng rng(derive_seed(seed, "lemcol_instance"));
  const std::size_t per_tree = one.num_edges();
  const std::size_t palette = per_tree + rng.below(per_tree + 1);
  std::vector<Color> colors(inst.graph.num_edges());
  for (const auto* tree : {&inst.t1, &inst.t2}) {
    std::vector<Color> pool(palette);
    for (std::size_t i = 0; i < palette; ++i) pool[i] = static_cast<Color>(i);
    rng.shuffle(pool.begin(), pool.end());
    const auto edges = tree->edges();
    for (std::size_t i = 0; i < edges.size(); ++i) colors[edges[i]] = pool[i];
  }
  inst.coloring = EdgeColoring::from_colors(std::move(colors), palette);
  return inst;
}

/// Seed of trial `trial` at size n; independent of the other sizes and trials.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  return derive_seed(derive_seed(seed, "experiment_n", n), "experiment_trial", trial);
}

namespace detail {

inline void add_diameter(ExperimentRecord& rec, const Graph& g) {
  const bool exact = g.num_vertices() <= 20000;
  rec.diameter = diameter(g, exact ? DiameterMode::Exact : DiameterMode::DoubleSweep);
  if (!exact) rec.flags.emplace_back("diameter_lower_bound");
}

inline void add_verification(ExperimentRecord& rec, const Graph& g, const EdgeColoring& c,
                             const ExperimentConfig& cfg, std::uint64_t seed) {
  const std::size_t max_len = 4 * std::max<std::size_t>(1, *rec.diameter);
  const auto rep = verify_sampled(g, c, cfg.sampled_pairs, derive_seed(seed, "experiment_pairs"), max_len, cfg.budget);
  rec.pairs_tried = rep.pairs_checked;
  rec.pairs_connected = rep.pairs_connected;
  rec.mean_witness_length = rep.mean_witness_length();
}

inline void run_thm1_trial(ExperimentRecord& rec, const ExperimentConfig& cfg, std::uint64_t seed) {
  GenParams gp;
  gp.n = rec.n;
  gp.seed = seed;
  gp.p = cfg.p;
  if (!cfg.p) gp.omega = cfg.omega.value_or(std::log(std::log(static_cast<double>(std::max<std::size_t>(rec.n, 3)))));
  const auto gen = gen_gnp(gp);
  rec.p = gen.p;
  rec.omega = gp.omega;
  if (gen.p_clamped) rec.flags.emplace_back("p_clamped");
  const Graph& g = gen.graph;
  rec.m = g.num_edges();
  const auto params = thm1_params(std::max<std::size_t>(rec.n, 16), cfg.epsilon);
  rec.epsilon = params.epsilon;
  rec.L = params.L;
  rec.k = params.k;
  rec.gamma = params.gamma;
  rec.q = params.q;
  rec.p0 = params.p0;
  for (const auto& c : params.clamps) rec.flags.push_back("clamp_" + c);
  rec.z1 = count_pendant_vertices(g);
  add_diameter(rec, g);
  if (!rec.diameter) {
    rec.flags.emplace_back("NOT_CONNECTED");
    return;
  }
  const auto col = color_thm1(g, params, derive_seed(seed, "experiment_color"));
  rec.Q = col.coloring.palette_size;
  if (!col.flagged_v2.empty()) rec.flags.emplace_back("v2_fallback");
  add_verification(rec, g, col.coloring, cfg, seed);
}

inline void run_regular_trial(ExperimentRecord& rec, const ExperimentConfig& cfg, std::uint64_t seed) {
  rec.r = cfg.r;
  const auto params = regular_params(rec.n, cfg.r, cfg.epsilon.value_or(0.1));
  rec.epsilon = params.epsilon;
  rec.k = params.k;
  rec.gamma = params.gamma;
  rec.q = params.q;
  rec.theta_r = params.theta_r;
  rec.sigma = params.sigma;
  for (const auto& c : params.clamps) rec.flags.push_back("clamp_" + c);
  GenParams gp;
  gp.n = rec.n;
  gp.r = cfg.r;
  gp.seed = seed;
  gp.max_attempts = cfg.max_attempts;
  GenResult gen;
  try {
    gen = gen_regular_config(gp);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Exhausted) throw;
    rec.flags.emplace_back("EXHAUSTED");
    return;
  }
  const Graph& g = gen.graph;
  rec.m = g.num_edges();
  rec.z1 = count_pendant_vertices(g);
  add_diameter(rec, g);
  if (!rec.diameter) {
    rec.flags.emplace_back("NOT_CONNECTED");
    return;
  }
  EdgeColoring c;
  try {
    c = color_greedy_power(g, static_cast<std::uint32_t>(2 * params.k), params.q, derive_seed(seed, "experiment_color"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PaletteExhausted) throw;
    rec.flags.emplace_back("PALETTE_EXHAUSTED");
    return;
  }
  if (cfg.r == 3) {
    auto rc = recolor_cycle_classes(g, c, static_cast<std::uint32_t>(params.k));
    rec.fresh_colors = rc.fresh_colors;
    if (rc.ambiguous_roots) rec.flags.emplace_back("ambiguous_roots");
    if (rc.shape_mismatches) rec.flags.emplace_back("shape_mismatch");
    c = std::move(rc.coloring);
  }
  rec.Q = c.palette_size;
  add_verification(rec, g, c, cfg, seed);
}

inline void run_brute_trial(ExperimentRecord& rec, const ExperimentConfig& cfg, std::uint64_t seed) {
  // Redraw until connected; the attempt count is part of the seed stream.
  GenParams gp;
  gp.n = rec.n;
  gp.p = cfg.p;
  if (!cfg.p) gp.omega = cfg.omega.value_or(std::log(std::log(static_cast<double>(std::max<std::size_t>(rec.n, 3)))));
  std::optional<GenResult> gen;
  for (std::size_t a = 0; a < cfg.max_attempts && !gen; ++a) {
    gp.seed = derive_seed(seed, "experiment_brute", a);
    auto g = gen_gnp(gp);
    if (is_connected(g.graph)) gen = std::move(g);
  }
  if (!gen) {
    rec.flags.emplace_back("NOT_CONNECTED");
    return;
  }
  rec.p = gen->p;
  rec.omega = gp.omega;
  const Graph& g = gen->graph;
  rec.m = g.num_edges();
  rec.z1 = count_pendant_vertices(g);
  add_diameter(rec, g);
  const auto res = brute_force_rc(g, std::max<std::size_t>(1, g.num_edges()));
  rec.rc = res.rc;
  rec.Q = res.rc;
  if (res.rc < std::max(*rec.z1, *rec.diameter)) rec.flags.emplace_back("LOWER_BOUND_VIOLATION");
}

inline void run_lemcol_trial(ExperimentRecord& rec, const ExperimentConfig& cfg, std::uint64_t seed) {
  rec.d = cfg.d;
  rec.k = cfg.ell;
  const auto inst = make_lemcol_instance(cfg.d, cfg.ell, seed);
  rec.Q = inst.coloring.palette_size;
  rec.m = inst.graph.num_edges();
  try {
    const auto res = cfg.d == 2 ? pair_paths_depth2(inst.t1, inst.t2, inst.coloring)
                                : pair_paths_lemcol(inst.t1, inst.t2, inst.coloring, cfg.d);
    rec.sigma = res.guaranteed;
    rec.pairs_found = res.pairs.size();
    // The displayed expansion bounds can fail on valid input while the
    // matching guarantee holds; recorded, not fatal.
    if (res.bound_violations) rec.flags.emplace_back("expansion_bound_violation");
    if (res.fallback_used) rec.flags.emplace_back("matching_fallback");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GuaranteeViolation) throw;
    rec.flags.emplace_back("GUARANTEE_VIOLATION");
  }
}

}  // namespace detail

struct ExperimentSummary {
  std::size_t rows = 0;
  std::size_t flagged_rows = 0;
  std::vector<double> success_rates;  // sorted, rows with pairs only

  double quantile(double qq) const {
    if (success_rates.empty()) return std::nan("");
    const double pos = qq * static_cast<double>(success_rates.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    return success_rates[lo] + (pos - static_cast<double>(lo)) * (success_rates[hi] - success_rates[lo]);
  }
};

inline void write_summary(std::ostream& out, const ExperimentSummary& s) {
  out << "rows=" << s.rows << '\n' << "flagged_rows=" << s.flagged_rows << '\n';
  if (s.success_rates.empty()) return;
  for (auto [name, qq] : {std::pair{"min", 0.0}, {"q25", 0.25}, {"median", 0.5}, {"q75", 0.75}, {"max", 1.0}})
    out << "success_rate_" << name << '=' << s.quantile(qq) << '\n';
}

/// Runs the sweep in (n, trial) order, writing and flushing one CSV row per
/// trial. Domain flags are recorded per row; only I/O and configuration
/// errors abort the sweep.
inline ExperimentSummary run_experiment(const ExperimentConfig& cfg, std::ostream& csv) {
  cfg.validate();
  ExperimentSummary summary;
  csv << kExperimentCsvHeader << '\n';
  csv.flush();
  std::vector<std::size_t> sizes = cfg.n_values;
  if (cfg.mode == ExperimentMode::LemcolStress) sizes = {0};
  for (auto n : sizes) {
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      ExperimentRecord rec;
      rec.mode = std::string(to_string(cfg.mode));
      rec.n = n;
      rec.trial = trial;
      rec.seed = trial_seed(cfg.seed, n, trial);
      try {
        switch (cfg.mode) {
          case ExperimentMode::Thm1: detail::run_thm1_trial(rec, cfg, rec.seed); break;
          case ExperimentMode::Regular: detail::run_regular_trial(rec, cfg, rec.seed); break;
          case ExperimentMode::Brute: detail::run_brute_trial(rec, cfg, rec.seed); break;
          case ExperimentMode::LemcolStress: detail::run_lemcol_trial(rec, cfg, rec.seed); break;
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Io) throw;
        rec.flags.emplace_back(std::string(to_string(e.code())));
      }
      if (cfg.timing)
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      write_record_csv(csv, rec);
      csv.flush();
      if (!csv) throw Error(ErrorCode::Io, "failed writing experiment output");
      ++summary.rows;
      if (!rec.flags.empty()) ++summary.flagged_rows;
      if (auto sr = rec.success_rate()) summary.success_rates.push_back(*sr);
    }
  }
  std::sort(summary.success_rates.begin(), summary.success_rates.end());
  return summary;
}

}  // namespace rainbow
