#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "qk/bounds.hpp"
#include "qk/io.hpp"
#include "qk/linearization.hpp"
#include "qk/random.hpp"
#include "qk/solutions.hpp"
#include "qk/spectra.hpp"
#include "qk/verify.hpp"
#include "run_config.hpp"

namespace fs = std::filesystem;
using namespace qk;
using cli::RunConfig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  int threads = 1;
  std::string compare;  // "oracle" for spectrum
  std::string suite;    // verify positional
};

std::ofstream open_out(const Options& opt, const std::string& name) {
  fs::create_directories(opt.out_dir);
  const fs::path p = fs::path(opt.out_dir) / name;
  std::ofstream os(p);
  if (!os) throw DomainError("cannot open output file " + p.string());
  return os;
}

void write_json(const Options& opt, const std::string& name, const json& j) {
  auto os = open_out(opt, name);
  os << j.dump(2) << "\n";
}

// ---- simulate ---------------------------------------------------------------

int cmd_simulate(const Options& opt) {
  const RunConfig cfg = cli::load_run_config(opt.config_path, opt.seed);
  if (!cfg.graph) throw DomainError("simulate: config needs a graph");
  const int n = cfg.graph->size();
  const Configuration X0 = cfg.initial();
  const Flow flow{*cfg.graph, cfg.f, cfg.forcing(n), cfg.frustration};

  const auto twist = cfg.initial_twist();
  const std::optional<GroupElement> generator =
      twist ? std::optional<GroupElement>(twist_generator(*twist)) : std::nullopt;
  const double initial_distance =
      generator ? twist_orbit_distance(X0, *generator)
                : (cfg.tag == GroupTag::Generic ? 0.0 : sync_class_distance(X0));

  Trajectory traj;
  try {
    traj = integrate(X0, flow, cfg.t_end, cfg.integrate_opts);
  } catch (const BlowUpError& e) {
    write_json(opt, "summary.json",
               json{{"seed", cfg.seed}, {"status", "blow-up"}, {"blowup_time", e.time}});
    std::cerr << "blow-up at t=" << e.time << "\n";
    return kExitRuntime;
  }

  {
    auto os = open_out(opt, "trajectory.csv");
    write_trajectory_csv(os, traj, cfg.seed);
  }
  const Configuration& Xf = traj.final_state();
  Mat mean = Mat::Zero(Xf.dim(), Xf.dim());
  for (const auto& e : Xf.elements()) mean += e.entries();
  mean /= static_cast<double>(Xf.size());

  json summary{{"seed", cfg.seed},
               {"status", "ok"},
               {"t_end", traj.final_time()},
               {"final_residual", flow.rhs(Xf).max_norm()},
               {"max_drift", traj.max_drift()},
               {"order_parameter", mean.norm()}};
  if (cfg.tag != GroupTag::Generic) {
    summary["initial_distance"] = initial_distance;
    summary["final_distance"] =
        generator ? twist_orbit_distance(Xf, *generator) : sync_class_distance(Xf);
  }
  write_json(opt, "summary.json", summary);
  return kExitOk;
}

// ---- spectrum ---------------------------------------------------------------

int cmd_spectrum(const Options& opt) {
  const RunConfig cfg = cli::load_run_config(opt.config_path, opt.seed);
  if (!cfg.graph) throw DomainError("spectrum: config needs a graph");
  if (cfg.tag != GroupTag::SOd) throw DomainError("spectrum: requires the so group tag");
  const int n = cfg.graph->size();
  const Configuration Y = cfg.initial();
  const SoBasis basis = so_basis(cfg.d);
  const ForcingVector omega = cfg.forcing(n);

  const JacobianMatrix J =
      cfg.frustration
          ? frustrated_linearization(Y, *cfg.graph, cfg.f, *cfg.frustration, basis, omega)
          : jacobian_matrix(Y, *cfg.graph, cfg.f, basis, omega);
  const Eigen::VectorXcd ev = jacobian_eigenvalues(J);

  // closed forms apply to plain twists on circulant graphs with f(x) = a1 x
  std::optional<TwistSpectrum> closed;
  const auto twist = cfg.initial_twist();
  if (!cfg.frustration && twist && cfg.circulant_bands && cfg.f.order() == 1 &&
      cfg.perturbation == 0.0) {
    int nonzero = 0, l1 = 0, l2 = 0;
    for (int w : twist->winding)
      if (w != 0) {
        if (nonzero == 0) l1 = w;
        else if (nonzero == 1) l2 = w;
        ++nonzero;
      }
    std::vector<double> bands = *cfg.circulant_bands;
    for (auto& b : bands) b *= cfg.f.coefficients()[0];
    if (nonzero <= 1) closed = single_twist_eigs(bands, n, cfg.d, l1);
    else if (nonzero == 2 && cfg.d >= 4) closed = double_twist_eigs(bands, n, cfg.d, l1, l2);
  }

  std::optional<JacobianMatrix> Jfd;
  double max_disc = 0.0;
  if (opt.compare == "oracle") {
    const Flow flow{*cfg.graph, cfg.f, omega, cfg.frustration};
    Jfd = fd_jacobian_oracle(Y, flow, 1e-5);
    max_disc = (J.matrix - Jfd->matrix).cwiseAbs().maxCoeff();
  } else if (!opt.compare.empty()) {
    throw DomainError("spectrum: --compare accepts only 'oracle'");
  }

  {
    auto os = open_out(opt, "spectrum.csv");
    Eigen::VectorXcd ev_fd;
    if (Jfd) ev_fd = jacobian_eigenvalues(*Jfd);
    write_spectrum_csv(os, cfg.seed, closed, &ev, Jfd ? &ev_fd : nullptr);
  }

  const StabilityVerdict verdict = classify_stability(J, basis.dim());
  json vj{{"seed", cfg.seed},
          {"verdict", stability_name(verdict.tag)},
          {"n_positive", verdict.n_positive},
          {"n_zero", verdict.n_zero},
          {"n_negative", verdict.n_negative},
          {"zero_tol_used", verdict.zero_tol_used},
          {"has_nonreal", ev.imag().cwiseAbs().maxCoeff() > 1e-6}};
  if (Jfd) vj["max_discrepancy"] = max_disc;
  write_json(opt, "verdict.json", vj);
  return kExitOk;
}

// ---- scan -------------------------------------------------------------------

template <typename F>
std::vector<std::string> parallel_rows(int count, int threads, F&& row_fn) {
  std::vector<std::string> rows(static_cast<std::size_t>(count));
  if (threads <= 1) {
    for (int k = 0; k < count; ++k) rows[static_cast<std::size_t>(k)] = row_fn(k);
    return rows;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int nw = std::min(threads, count);
  pool.reserve(static_cast<std::size_t>(nw));
  for (int w = 0; w < nw; ++w)
    pool.emplace_back([&]() {
      for (int k = next.fetch_add(1); k < count; k = next.fetch_add(1))
        rows[static_cast<std::size_t>(k)] = row_fn(k);
    });
  for (auto& t : pool) t.join();
  return rows;
}

int cmd_scan(const Options& opt) {
  const RunConfig cfg = cli::load_run_config(opt.config_path, opt.seed);
  if (!cfg.raw.contains("scan")) throw DomainError("scan: config needs a 'scan' section");
  const json& sc = cfg.raw.at("scan");
  const std::string mode = sc.at("mode").get<std::string>();
  auto os = open_out(opt, "scan.csv");
  os << "# seed=" << cfg.seed << "\n";

  if (mode == "rho_star") {
    const auto ns = sc.at("n").get<std::vector<int>>();
    if (ns.empty()) throw DomainError("scan: empty grid");
    os << "n,K,l,family,m,value\n";
    const auto rows = parallel_rows(static_cast<int>(ns.size()), opt.threads, [&](int k) {
      const int n = ns[static_cast<std::size_t>(k)];
      return std::to_string(n) + ",2,1,rho_star," + std::to_string(rho_star_argmax(n)) + "," +
             format_double(rho_star(n));
    });
    for (const auto& r : rows) os << r << "\n";
  } else if (mode == "alpha_support") {
    const int n = sc.at("n").get<int>();
    const auto alphas = sc.at("alpha").get<std::vector<double>>();
    if (alphas.empty()) throw DomainError("scan: empty grid");
    os << "n,K,alpha,l,family,m,value\n";
    const auto rows = parallel_rows(static_cast<int>(alphas.size()), opt.threads, [&](int k) {
      const double a = alphas[static_cast<std::size_t>(k)];
      const auto bands = alpha_graph_bands(a, n);
      const OneTwistSupport s = supports_one_twist(bands, n, 3);
      return std::to_string(n) + "," + std::to_string(bands.size()) + "," + format_double(a) +
             ",1," + family_name(s.witness.family) + "," + std::to_string(s.witness.m) + "," +
             (s.supports ? "1" : "0");
    });
    for (const auto& r : rows) os << r << "\n";
  } else if (mode == "divisibility") {
    const auto Ks = sc.at("K").get<std::vector<int>>();
    const auto ns = sc.at("n").get<std::vector<int>>();
    if (Ks.empty() || ns.empty()) throw DomainError("scan: empty grid");
    os << "n,K,l,family,m,value\n";
    const int count = static_cast<int>(Ks.size() * ns.size());
    const auto rows = parallel_rows(count, opt.threads, [&](int idx) {
      const int K = Ks[static_cast<std::size_t>(idx) / ns.size()];
      const int n = ns[static_cast<std::size_t>(idx) % ns.size()];
      std::vector<double> bands(static_cast<std::size_t>(K), 0.0);
      bands.back() = 1.0;  // strict bandwidth K
      const OneTwistSupport s = supports_one_twist(bands, n, 3);
      return std::to_string(n) + "," + std::to_string(K) + ",1," +
             family_name(s.witness.family) + "," + std::to_string(s.witness.m) + "," +
             (s.supports ? "1" : "0");
    });
    for (const auto& r : rows) os << r << "\n";
  } else if (mode == "g_threshold") {
    const int K = sc.at("K").get<int>();
    const auto ns = sc.at("n").get<std::vector<int>>();
    const auto tail = sc.at("gamma_tail").get<std::vector<double>>();
    if (ns.empty()) throw DomainError("scan: empty grid");
    os << "n,K";
    for (int k = 2; k <= K; ++k) os << ",gamma" << k;
    os << ",l,family,m,value\n";
    const auto rows = parallel_rows(static_cast<int>(ns.size()), opt.threads, [&](int idx) {
      const int n = ns[static_cast<std::size_t>(idx)];
      std::string row = std::to_string(n) + "," + std::to_string(K);
      for (double g : tail) row += "," + format_double(g);
      row += ",1,g_threshold,-1," + format_double(g_threshold(K, n, tail));
      return row;
    });
    for (const auto& r : rows) os << r << "\n";
  } else if (mode == "thresholds") {
    const int n = sc.at("n").get<int>();
    json rep{{"seed", cfg.seed}, {"alpha_star", alpha_star()}};
    if (n >= 5) rep["rho_star"] = rho_star(n);
    if (sc.contains("K") && sc.contains("gamma_tail"))
      rep["g_threshold"] =
          g_threshold(sc.at("K").get<int>(), n, sc.at("gamma_tail").get<std::vector<double>>());
    write_json(opt, "thresholds.json", rep);
    os << "n,K,l,family,m,value\n";
  } else {
    throw DomainError("scan: unknown mode '" + mode + "'");
  }
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const Options& opt) {
  const std::uint64_t seed = opt.seed.value_or(20260809ull);
  const auto checks = run_suite(opt.suite, seed);
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.criterion << "  " << c.name
              << "  measured=" << format_double(c.measured) << " " << c.relation << " "
              << format_double(c.threshold) << "\n";
  }
  write_json(opt, "report.json", checks_to_json(checks, seed));
  return all_passed(checks) ? kExitOk : 1;
}

// ---- near-sync ----------------------------------------------------------------

int cmd_near_sync(const Options& opt) {
  const RunConfig cfg = cli::load_run_config(opt.config_path, opt.seed);
  if (!cfg.graph) throw DomainError("near-sync: config needs a graph");
  const double eps = cfg.raw.value("eps", 1e-2);
  const int n = cfg.graph->size();
  const ForcingVector omega = cfg.forcing(n);
  const Configuration Y = near_sync(*cfg.graph, omega, eps, cfg.f);
  write_json(opt, "configuration.json", configuration_to_json(Y));

  // Q recovered from the construction for the g0-membership diagnostic
  const double residual = fixed_point_residual(Y, omega.scaled(eps), *cfg.graph, cfg.f);
  write_json(opt, "near_sync_report.json",
             json{{"seed", cfg.seed},
                  {"eps", eps},
                  {"residual", residual},
                  {"residual_over_eps2", residual / (eps * eps)}});
  return kExitOk;
}

// ---- bounds -------------------------------------------------------------------

int cmd_bounds(const Options& opt) {
  const RunConfig cfg = cli::load_run_config(opt.config_path, opt.seed);
  if (!cfg.graph) throw DomainError("bounds: config needs a graph");
  const int n = cfg.graph->size();
  const ForcingVector omega = cfg.forcing(n);
  std::vector<double> p_grid{1.0, 1.5, 2.0, 4.0, kInfP};
  if (cfg.raw.contains("p_grid")) {
    p_grid.clear();
    for (const auto& p : cfg.raw.at("p_grid"))
      p_grid.push_back(p.is_string() ? kInfP : p.get<double>());
  }
  const AdmissibilityReport rep = so3_admissibility(omega, *cfg.graph, p_grid);
  json j = bounds_report_to_json(rep);
  j["seed"] = cfg.seed;
  j["zero_sum_ok"] = zero_sum_check(omega, 1e-10);
  write_json(opt, "bounds.json", j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum (nonabelian) Kuramoto flows on matrix Lie groups"};
  app.require_subcommand(1);

  Options opt;
  std::uint64_t seed_value = 0;
  bool seed_set = false;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* copt = sub->add_option("--config", opt.config_path, "run configuration JSON");
    if (needs_config) copt->required();
    sub->add_option("--seed", seed_value, "64-bit seed override")
        ->each([&](const std::string&) { seed_set = true; });
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--threads", opt.threads, "worker threads for scans");
  };

  auto* sim = app.add_subcommand("simulate", "integrate a flow and write trajectory + summary");
  add_common(sim, true);
  auto* spec = app.add_subcommand("spectrum", "linearization spectrum and stability verdict");
  add_common(spec, true);
  spec->add_option("--compare", opt.compare, "add finite-difference oracle columns ('oracle')");
  auto* scan = app.add_subcommand("scan", "threshold/support scans over a grid");
  add_common(scan, true);
  auto* verify = app.add_subcommand("verify", "run a named acceptance suite");
  verify->add_option("suite", opt.suite, "one of: classical, spectra, thresholds, sync, "
                                         "twistflip, frustration, bounds, structure, all")
      ->required();
  add_common(verify, false);
  auto* near = app.add_subcommand("near-sync", "construct the near-sync solution");
  add_common(near, true);
  auto* bounds = app.add_subcommand("bounds", "forcing admissibility report");
  add_common(bounds, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  if (seed_set) opt.seed = seed_value;

  try {
    if (sim->parsed()) return cmd_simulate(opt);
    if (spec->parsed()) return cmd_spectrum(opt);
    if (scan->parsed()) return cmd_scan(opt);
    if (verify->parsed()) {
      if (!is_verify_suite(opt.suite)) {
        std::cerr << "unknown suite '" << opt.suite << "'\n";
        return kExitConfig;
      }
      return cmd_verify(opt);
    }
    if (near->parsed()) return cmd_near_sync(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
  } catch (const BlowUpError& e) {
    std::cerr << "error: " << e.what() << " (t=" << e.time << ")\n";
    return kExitRuntime;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
