#pragma once

#include <cstdlib>
#include <functional>
#include <tuple>
#include <unordered_set>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rainbow.hpp"

namespace rainbow::cli {

/// Thrown for bad flag combinations found after parsing; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t env_seed() {
  const char* s = std::getenv("RAINBOW_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos == std::string(s).size()) return v;
  } catch (const std::logic_error&) {
  }
  throw UsageError(std::string("RAINBOW_SEED is not an unsigned integer: ") + s);
}

/// Writes to the named file, or to `fallback` when the name is empty.
inline void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + path);
  body(f);
  if (!f.flush()) throw Error(ErrorCode::Io, "failed writing " + path);
}

inline void check_vertex(const Graph& g, Vertex v, const char* flag) {
  if (v >= g.num_vertices())
    throw UsageError(std::string(flag) + " " + std::to_string(v) + " is not a vertex (n=" +
                     std::to_string(g.num_vertices()) + ")");
}

inline void write_path(std::ostream& out, const std::vector<Vertex>& p) {
  out << "path=";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  out << '\n';
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
  return d;
}

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 domain error, 2 usage error.
inline int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow colorings of random graphs: generate, color, verify.", "rainbow"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random graph")->require_subcommand(1);
  struct {
    std::size_t n = 0, r = 3, max_attempts = 1000;
    std::optional<double> p, omega;
    std::string out;
  } g_opt;
  auto* gnp = gen->add_subcommand("gnp", "Binomial random graph G(n, p)");
  gnp->add_option("--n", g_opt.n, "Vertex count")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 31));
  auto* p_flag = gnp->add_option("--p", g_opt.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gnp->add_option("--omega", g_opt.omega, "p = (log n + omega) / n")->excludes(p_flag);
  gnp->add_option("--seed", seed, "RNG seed (default $RAINBOW_SEED or 0)");
  gnp->add_option("--out", g_opt.out, "Graph file (default stdout)");
  gnp->callback([&] {
    action = [&] {
      if (!g_opt.p && !g_opt.omega) throw UsageError("gen gnp needs --p or --omega");
      GenParams gp;
      gp.n = g_opt.n;
      gp.p = g_opt.p;
      gp.omega = g_opt.omega;
      gp.seed = seed;
      const auto res = gen_gnp(gp);
      emit(g_opt.out, out, [&](std::ostream& o) { write_graph(o, res.graph); });
      if (!g_opt.out.empty())
        out << "n=" << res.graph.num_vertices() << "\nm=" << res.graph.num_edges() << "\np=" << res.p
            << "\np_clamped=" << (res.p_clamped ? "true" : "false") << '\n';
    };
  });
  auto* reg = gen->add_subcommand("regular", "Random r-regular graph (configuration model)");
  reg->add_option("--n", g_opt.n, "Vertex count")->required();
  reg->add_option("--r", g_opt.r, "Degree")->required();
  reg->add_option("--max-attempts", g_opt.max_attempts, "Rejection cap")->check(CLI::PositiveNumber);
  reg->add_option("--seed", seed, "RNG seed (default $RAINBOW_SEED or 0)");
  reg->add_option("--out", g_opt.out, "Graph file (default stdout)");
  reg->callback([&] {
    action = [&] {
      GenParams gp;
      gp.n = g_opt.n;
      gp.r = g_opt.r;
      gp.seed = seed;
      gp.max_attempts = g_opt.max_attempts;
      const auto res = gen_regular_config(gp);
      emit(g_opt.out, out, [&](std::ostream& o) { write_graph(o, res.graph); });
      if (!g_opt.out.empty())
        out << "n=" << res.graph.num_vertices() << "\nm=" << res.graph.num_edges() << "\nattempts=" << res.attempts
            << '\n';
    };
  });

  // stats
  std::string in_path, coloring_path, out_path;
  std::optional<double> small_threshold;
  std::optional<std::uint32_t> sep_bound, density_radius;
  long long density_excess = 1;
  auto* stats = app.add_subcommand("stats", "Structural statistics of a graph");
  stats->add_option("--in", in_path, "Graph file")->required();
  stats->add_option("--small-threshold", small_threshold, "Degree threshold for small vertices (default log n / 100)");
  stats->add_option("--separation-bound", sep_bound, "Report small-vertex pairs within this distance");
  stats->add_option("--density-radius", density_radius, "Report balls with e[S] >= |S| + excess");
  stats->add_option("--density-excess", density_excess, "Excess t for the density check");
  stats->callback([&] {
    action = [&] {
      const Graph g = load_graph(in_path);
      const std::size_t n = g.num_vertices();
      const double thr = small_threshold.value_or(n >= 2 ? default_small_threshold(n) : 0.0);
      const auto ds = degree_stats(g, thr);
      out << "n=" << n << "\nm=" << g.num_edges() << "\nz1=" << ds.z1 << '\n';
      const bool exact = n <= 20000;
      const auto dia = diameter(g, exact ? DiameterMode::Exact : DiameterMode::DoubleSweep);
      out << "connected=" << (dia ? "true" : "false") << '\n';
      if (dia) out << "diameter=" << *dia << "\ndiameter_mode=" << (exact ? "exact" : "double_sweep") << '\n';
      else out << "diameter=disconnected\n";
      if (n >= 16) out << "L=" << scale_L(n) << '\n';
      out << "small_threshold=" << thr << "\nsmall_vertices=" << ds.small_vertices.size() << '\n';
      out << "degree_histogram=";
      bool first = true;
      for (const auto& [deg, cnt] : ds.histogram) {
        out << (first ? "" : ",") << deg << ':' << cnt;
        first = false;
      }
      out << '\n';
      if (sep_bound) out << "separation_violations=" << check_small_separation(g, thr, *sep_bound).size() << '\n';
      if (density_radius)
        out << "density_violations=" << check_local_density(g, *density_radius, density_excess).size() << '\n';
    };
  });

  // color
  auto* color = app.add_subcommand("color", "Color the edges of a graph")->require_subcommand(1);
  std::optional<double> epsilon;
  std::optional<std::size_t> r_opt, k_opt, radius_opt;
  std::optional<std::uint64_t> q_opt;
  auto* thm1 = color->add_subcommand("thm1", "Near-optimal coloring for G(n, p)");
  thm1->add_option("--in", in_path, "Graph file")->required();
  thm1->add_option("--epsilon", epsilon, "Default 1/sqrt(log log n)");
  thm1->add_option("--small-threshold", small_threshold, "Default log n / 100");
  thm1->add_option("--seed", seed, "RNG seed (default $RAINBOW_SEED or 0)");
  thm1->add_option("--out", out_path, "Coloring file (default stdout)");
  thm1->callback([&] {
    action = [&] {
      const Graph g = load_graph(in_path);
      const auto params = thm1_params(std::max<std::size_t>(g.num_vertices(), 16), epsilon);
      const auto res = color_thm1(g, params, seed, small_threshold);
      emit(out_path, out, [&](std::ostream& o) { write_coloring(o, res.coloring); });
      if (!out_path.empty()) {
        out << "L=" << params.L << "\nepsilon=" << params.epsilon << "\nk=" << params.k << "\ngamma=" << params.gamma
            << "\nq=" << params.q << "\np0=" << params.p0 << "\nQ=" << res.coloring.palette_size << "\nz1=" << res.z1
            << "\nv2=" << res.v2_count << "\nv2_flagged=" << res.flagged_v2.size() << '\n';
      }
    };
  });
  auto* greedy = color->add_subcommand("greedy", "Greedy proper coloring of the line graph's power");
  greedy->add_option("--in", in_path, "Graph file")->required();
  greedy->add_option("--r", r_opt, "Degree used for the parameters (default max degree)");
  greedy->add_option("--k", k_opt, "Tree depth (default from the regular parameters)");
  greedy->add_option("--radius", radius_opt, "Line-graph radius (default 2k)");
  greedy->add_option("--q", q_opt, "Palette size (default 10 (r-1)^(2k))");
  greedy->add_option("--epsilon", epsilon, "Default 0.1");
  greedy->add_option("--seed", seed, "RNG seed (default $RAINBOW_SEED or 0)");
  greedy->add_option("--out", out_path, "Coloring file (default stdout)");
  greedy->callback([&] {
    action = [&] {
      const Graph g = load_graph(in_path);
      std::size_t k = k_opt.value_or(0);
      std::uint64_t q = q_opt.value_or(0);
      if (!k || !q) {
        const std::size_t r = r_opt.value_or(max_degree(g));
        if (r < 3) throw UsageError("cannot derive parameters for degree " + std::to_string(r) + "; pass --k and --q");
        const auto params = regular_params(std::max<std::size_t>(g.num_vertices(), 16), r, epsilon.value_or(0.1));
        if (!k) k = params.k;
        if (!q) q = params.q;
      }
      const auto radius = static_cast<std::uint32_t>(radius_opt.value_or(2 * k));
      if (radius < 1) throw UsageError("--radius must be >= 1");
      const auto c = color_greedy_power(g, radius, q, seed);
      emit(out_path, out, [&](std::ostream& o) { write_coloring(o, c); });
      if (!out_path.empty())
        out << "k=" << k << "\nradius=" << radius << "\nq=" << q << "\ncolors_used=" << c.colors_used() << '\n';
    };
  });

  // recolor
  auto* recolor = app.add_subcommand("recolor", "Recolor a coloring")->require_subcommand(1);
  auto* cycles = recolor->add_subcommand("cycles", "Cycle-class recoloring for cubic graphs");
  cycles->add_option("--in", in_path, "Graph file")->required();
  cycles->add_option("--coloring", coloring_path, "Base coloring")->required();
  cycles->add_option("--k", k_opt, "Neighborhood depth (default from the regular parameters)");
  cycles->add_option("--out", out_path, "Coloring file (default stdout)");
  cycles->callback([&] {
    action = [&] {
      const Graph g = load_graph(in_path);
      const auto base = load_coloring(coloring_path);
      base.check(g.num_edges());
      const std::size_t k =
          k_opt.value_or(regular_params(std::max<std::size_t>(g.num_vertices(), 16), std::max<std::size_t>(3, max_degree(g))).k);
      const auto res = recolor_cycle_classes(g, base, static_cast<std::uint32_t>(k));
      emit(out_path, out, [&](std::ostream& o) { write_coloring(o, res.coloring); });
      if (!out_path.empty())
        out << "k=" << k << "\nclasses=" << res.classes.size() << "\nfresh_colors=" << res.fresh_colors
            << "\nambiguous_roots=" << res.ambiguous_roots << "\nshape_mismatches=" << res.shape_mismatches << '\n';
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check rainbow connectivity")->require_subcommand(1);
  struct {
    std::optional<std::size_t> max_len;
    std::uint64_t budget = 1'000'000;
    std::size_t pairs = 200;
    std::optional<Vertex> x, y;
    std::string witnesses, csv;
    bool timing = false;
  } v_opt;
  auto add_verify = [&](const char* name, const char* help, VerifyMode mode) {
    auto* sub = verify->add_subcommand(name, help);
    sub->add_option("--in", in_path, "Graph file")->required();
    sub->add_option("--coloring", coloring_path, "Coloring file")->required();
    sub->add_option("--max-len", v_opt.max_len, "Path length bound");
    sub->add_option("--witnesses", v_opt.witnesses, "Write witness paths here, one per line");
    sub->add_option("--csv", v_opt.csv, "Write the report as a CSV row here");
    sub->add_flag("--timing", v_opt.timing, "Include elapsed time (output no longer reproducible)");
    if (mode != VerifyMode::Exact) {
      sub->add_option("--budget", v_opt.budget, "Node expansions per pair");
      sub->add_option("--seed", seed, "RNG seed (default $RAINBOW_SEED or 0)");
    }
    if (mode == VerifyMode::Sampled) sub->add_option("--pairs", v_opt.pairs, "Number of sampled pairs");
    if (mode != VerifyMode::Sampled) {
      auto* xo = sub->add_option("--x", v_opt.x, "Check only the pair (x, y)");
      auto* yo = sub->add_option("--y", v_opt.y, "Check only the pair (x, y)");
      xo->needs(yo);
      yo->needs(xo);
    }
    sub->callback([&, mode] {
      action = [&, mode] {
        const Graph g = load_graph(in_path);
        const auto c = load_coloring(coloring_path);
        c.check(g.num_edges());
        const std::size_t n = g.num_vertices();
        const std::size_t max_len =
            v_opt.max_len.value_or(mode == VerifyMode::Exact ? (n ? n - 1 : 0) : default_search_max_len(g));
        if (v_opt.x) {
          check_vertex(g, *v_opt.x, "--x");
          check_vertex(g, *v_opt.y, "--y");
          const auto w = mode == VerifyMode::Exact
                             ? rainbow_path_exact(g, c, *v_opt.x, *v_opt.y, max_len)
                             : rainbow_path_search(g, c, *v_opt.x, *v_opt.y, max_len, v_opt.budget, seed);
          out << "found=" << (w ? "true" : "false") << '\n';
          if (w) {
            out << "length=" << w->length() << '\n';
            write_path(out, w->vertices);
          }
          return;
        }
        const bool keep = !v_opt.witnesses.empty();
        VerifyReport rep;
        if (mode == VerifyMode::Sampled) {
          rep = verify_sampled(g, c, v_opt.pairs, seed, max_len, v_opt.budget, keep);
        } else {
          VerifyOptions opt;
          opt.max_len = max_len;
          opt.budget = v_opt.budget;
          opt.seed = seed;
          opt.keep_witnesses = keep;
          rep = verify_all_pairs(g, c, mode, opt);
        }
        write_report(out, rep, v_opt.timing);
        if (keep) emit(v_opt.witnesses, out, [&](std::ostream& o) { write_witnesses(o, rep); });
        if (!v_opt.csv.empty())
          emit(v_opt.csv, out, [&](std::ostream& o) {
            o << kReportCsvHeader << '\n';
            write_report_csv_row(o, rep);
          });
      };
    });
  };
  add_verify("exact", "Exact check of every pair", VerifyMode::Exact);
  add_verify("search", "Budgeted search over every pair", VerifyMode::Search);
  add_verify("sample", "Budgeted search over sampled pairs", VerifyMode::Sampled);

  // rc
  auto* rc = app.add_subcommand("rc", "Rainbow connection number")->require_subcommand(1);
  std::optional<std::size_t> q_max;
  auto* brute = rc->add_subcommand("brute", "Exhaustive search (small graphs)");
  brute->add_option("--in", in_path, "Graph file")->required();
  brute->add_option("--q-max", q_max, "Give up above this many colors (default m)");
  brute->add_option("--out", out_path, "Write an optimal coloring here");
  brute->callback([&] {
    action = [&] {
      const Graph g = load_graph(in_path);
      const auto res = brute_force_rc(g, q_max.value_or(std::max<std::size_t>(1, g.num_edges())));
      out << res.rc << '\n';
      if (!out_path.empty()) save_coloring(out_path, res.witness);
    };
  });

  // pair
  auto* pair = app.add_subcommand("pair", "Pair root-to-leaf paths of two rainbow trees")->require_subcommand(1);
  struct {
    std::size_t d = 3, depth = 2;
    std::optional<Vertex> x, y;
  } p_opt;
  auto* lemcol = pair->add_subcommand("lemcol", "Recursive matching pairing (binary variant when d = 2)");
  lemcol->add_option("--d", p_opt.d, "Arity")->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  lemcol->add_option("--depth", p_opt.depth, "Tree depth")->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  lemcol->add_option("--in", in_path, "Graph file; omit for a random instance");
  lemcol->add_option("--coloring", coloring_path, "Coloring file (with --in)");
  lemcol->add_option("--x", p_opt.x, "Root of the first tree (with --in)");
  lemcol->add_option("--y", p_opt.y, "Root of the second tree (with --in)");
  lemcol->add_option("--seed", seed, "Seed of the random instance (default $RAINBOW_SEED or 0)");
  lemcol->callback([&] {
    action = [&] {
      if (p_opt.d == 2 && p_opt.depth < 2) throw UsageError("--d 2 needs --depth >= 2");
      LemcolInstance inst;
      if (in_path.empty()) {
        inst = make_lemcol_instance(p_opt.d, p_opt.depth, seed);
      } else {
        if (coloring_path.empty() || !p_opt.x || !p_opt.y) throw UsageError("--in needs --coloring, --x and --y");
        inst.graph = load_graph(in_path);
        inst.coloring = load_coloring(coloring_path);
        inst.coloring.check(inst.graph.num_edges());
        check_vertex(inst.graph, *p_opt.x, "--x");
        check_vertex(inst.graph, *p_opt.y, "--y");
        const auto depth = static_cast<std::uint32_t>(p_opt.depth);
        const auto d = static_cast<double>(p_opt.d);
        inst.t1 = prune_to_arity(grow_bfs_tree(inst.graph, *p_opt.x, depth, d), p_opt.d);
        std::unordered_set<Vertex> taken;
        for (const auto& nd : inst.t1.nodes) taken.insert(nd.vertex);
        if (taken.count(*p_opt.y)) throw Error(ErrorCode::InvalidArgument, "y lies in the tree of x");
        inst.t2 = prune_to_arity(grow_bfs_tree(inst.graph, *p_opt.y, depth, d, taken), p_opt.d);
      }
      const auto res = p_opt.d == 2 ? pair_paths_depth2(inst.t1, inst.t2, inst.coloring)
                                    : pair_paths_lemcol(inst.t1, inst.t2, inst.coloring, p_opt.d);
      out << "guaranteed=" << res.guaranteed << "\npairs=" << res.pairs.size() << "\nmatchings=" << res.matchings_built
          << "\nbound_violations=" << res.bound_violations
          << "\nfallback=" << (res.fallback_used ? "true" : "false") << '\n';
      for (const auto& pp : res.pairs)
        out << "pair=" << inst.t1.nodes[pp.leaf1].vertex << ' ' << inst.t2.nodes[pp.leaf2].vertex << '\n';
    };
  });

  // witness
  struct {
    Vertex x = 0, y = 0;
    std::optional<std::size_t> k, gamma, d;
    std::uint32_t bad_levels = 1;
    std::string diagnostics;
  } w_opt;
  auto* witness = app.add_subcommand("witness", "Build the two-tree witness structure for one pair");
  witness->add_option("--in", in_path, "Graph file")->required();
  witness->add_option("--coloring", coloring_path, "Coloring file")->required();
  witness->add_option("--x", w_opt.x, "First vertex")->required();
  witness->add_option("--y", w_opt.y, "Second vertex")->required();
  witness->add_option("--k", w_opt.k, "Tree depth (default from the regular parameters)");
  witness->add_option("--gamma", w_opt.gamma, "Extension depth (default from the regular parameters)");
  witness->add_option("--d", w_opt.d, "Pruned arity (default max degree - 1)");
  witness->add_option("--bad-levels", w_opt.bad_levels, "Levels in which a skipped edge makes a leaf bad");
  witness->add_option("--diagnostics", w_opt.diagnostics, "Write bundle diagnostics here");
  witness->callback([&] {
    action = [&] {
      const Graph g = load_graph(in_path);
      const auto c = load_coloring(coloring_path);
      c.check(g.num_edges());
      check_vertex(g, w_opt.x, "--x");
      check_vertex(g, w_opt.y, "--y");
      if (w_opt.x == w_opt.y) throw UsageError("--x and --y must differ");
      const std::size_t r = max_degree(g);
      std::size_t k = w_opt.k.value_or(0), gamma = w_opt.gamma.value_or(0);
      if (!k || !gamma) {
        if (r < 3) throw UsageError("cannot derive parameters for degree " + std::to_string(r) + "; pass --k and --gamma");
        const auto params = regular_params(std::max<std::size_t>(g.num_vertices(), 16), r);
        if (!k) k = params.k;
        if (!gamma) gamma = params.gamma;
      }
      const std::size_t d = w_opt.d.value_or(std::max<std::size_t>(2, r ? r - 1 : 2));
      WitnessOptions opt;
      opt.bad_levels = w_opt.bad_levels;
      const auto k32 = static_cast<std::uint32_t>(k);
      auto report = [&](const char* method, const std::optional<PathWitness>& w) {
        out << "method=" << method << "\nfound=" << (w ? "true" : "false") << '\n';
        if (w) {
          out << "length=" << w->length() << '\n';
          write_path(out, w->vertices);
        }
      };
      const auto direct = direct_tree_path(g, w_opt.x, w_opt.y, k32);
      if (!direct.empty()) {
        auto w = make_witness(g, c, direct);
        report("direct", is_valid_rainbow_witness(g, c, w, w_opt.x, w_opt.y) ? std::optional(w) : std::nullopt);
        return;
      }
      WitnessBundle b;
      try {
        b = build_witness_paths(g, w_opt.x, w_opt.y, k32, static_cast<std::uint32_t>(gamma), d, opt);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoStructure) throw;
        out << "structure=" << e.what() << '\n';
        report("search", rainbow_path_search(g, c, w_opt.x, w_opt.y, default_search_max_len(g), 1'000'000, 0));
        return;
      }
      if (!w_opt.diagnostics.empty())
        emit(w_opt.diagnostics, out, [&](std::ostream& o) { write_bundle_diagnostics(o, b); });
      const auto res = rainbow_witness_detailed(g, c, b);
      out << "k=" << k << "\ngamma=" << gamma << "\nd=" << d << "\nexcluded_leaves=" << b.excluded_leaves()
          << "\nfull_paths=" << b.full_paths.size() << "\ncandidates_tried=" << res.candidates_tried << '\n';
      report("bundle", res.witness);
    };
  });

  // experiment
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  auto* exp = app.add_subcommand("experiment", "Seeded parameter sweep writing one CSV row per trial");
  exp->add_option("--config", config_path, "key=value configuration file");
  struct {
    std::string mode, n, omega, p, r, epsilon, trials, pairs, seed, out, budget, max_attempts, d, ell;
    bool timing = false;
  } e_opt;
  const std::vector<std::tuple<const char*, std::string*, const char*>> exp_flags = {
      {"--mode", &e_opt.mode, "mode"},       {"--n", &e_opt.n, "n"},
      {"--omega", &e_opt.omega, "omega"},    {"--p", &e_opt.p, "p"},
      {"--r", &e_opt.r, "r"},                {"--epsilon", &e_opt.epsilon, "epsilon"},
      {"--trials", &e_opt.trials, "trials"}, {"--pairs", &e_opt.pairs, "sampled_pairs"},
      {"--seed", &e_opt.seed, "seed"},       {"--out", &e_opt.out, "output"},
      {"--budget", &e_opt.budget, "budget"}, {"--max-attempts", &e_opt.max_attempts, "max_attempts"},
      {"--d", &e_opt.d, "d"},                {"--ell", &e_opt.ell, "ell"},
  };
  std::vector<std::pair<CLI::Option*, std::pair<std::string*, std::string>>> exp_bound;
  for (auto [flag, target, key] : exp_flags)
    exp_bound.push_back({exp->add_option(flag, *target, std::string("Config key ") + key), {target, key}});
  exp->add_flag("--timing", e_opt.timing, "Record elapsed time (output no longer reproducible)");
  exp->callback([&] {
    action = [&] {
      ExperimentConfig cfg;
      cfg.seed = env_seed();
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw Error(ErrorCode::Io, "cannot open " + config_path);
        read_experiment_config(f, cfg);
      }
      try {
        for (auto& [opt, bound] : exp_bound)
          if (opt->count()) apply_config_value(cfg, bound.second, *bound.first);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      if (e_opt.timing) cfg.timing = true;
      try {
        cfg.validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      ExperimentSummary summary;
      emit(cfg.output, out, [&](std::ostream& o) { summary = run_experiment(cfg, o); });
      write_summary(cfg.output.empty() ? err : out, summary);
    };
  });

  try {
    seed = env_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    action();
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rainbow::cli
