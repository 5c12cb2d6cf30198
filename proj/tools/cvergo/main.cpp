// cvergo: command-line front end for the two-mode Gaussian ergotropy toolkit.
//
// Subcommands:
//   compute    energetics + correlation reports for one state (JSON)
//   classify   separability verdict for one state (JSON)
//   fig1       (k, z) sweep of REG, separability bound and PPT value (CSV)
//   fig2       (k, z) sweep of the photon-subtracted family: REG + SV (CSV)
//   scatter    random Bloch-Messiah ensemble at fixed (k, gamma) (CSV)
//   threshold  REG threshold of the SV-blind photon-subtracted region
//   oracle     finite-spectrum cross-checks of the Fock-basis closed forms
//
// Conventions shared by all subcommands: ranges are "min:max:count" with
// inclusive endpoints and count >= 2; CSV uses a header row, '.' decimals,
// '\n' line endings and %.12g formatting; relative --out paths resolve
// against $CVERGO_OUTPUT_DIR when it is set. Exit codes: 0 success, 1
// numerical/domain error (diagnostic on stderr), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "cvergo/bloch_messiah.hpp"
#include "cvergo/correlations.hpp"
#include "cvergo/covariance.hpp"
#include "cvergo/energetics.hpp"
#include "cvergo/errors.hpp"
#include "cvergo/fock_oracle.hpp"
#include "cvergo/state_io.hpp"
#include "cvergo/states.hpp"
#include "cvergo/witnesses.hpp"

namespace {

using cvergo::BlochMessiahParams;
using cvergo::CovarianceMatrix;
using cvergo::ModePair;
using cvergo::StateRecord;
using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  double at(int i) const {
    return lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(count - 1);
  }
};

Range parse_range(const std::string& text, const std::string& flag) {
  Range r;
  char trailing = '\0';
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.count,
                  &trailing) != 3) {
    throw CLI::ValidationError(flag, "expected min:max:count, got \"" + text +
                                         "\"");
  }
  if (r.count < 2) {
    throw CLI::ValidationError(flag, "count must be >= 2");
  }
  if (!(r.hi >= r.lo)) {
    throw CLI::ValidationError(flag, "max must be >= min");
  }
  return r;
}

/// Stream for --out: stdout when empty, otherwise a file (relative paths
/// resolve against $CVERGO_OUTPUT_DIR when set).
class OutputStream {
 public:
  explicit OutputStream(const std::string& out_flag) {
    if (out_flag.empty()) {
      stream_ = &std::cout;
      return;
    }
    std::filesystem::path path(out_flag);
    if (path.is_relative()) {
      if (const char* dir = std::getenv("CVERGO_OUTPUT_DIR")) {
        path = std::filesystem::path(dir) / path;
      }
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) {
      throw cvergo::InvalidParamsError("cannot open \"" + path.string() +
                                       "\" for writing");
    }
    path_ = path.string();
    stream_ = file_.get();
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    stream_->flush();
    if (file_ && !path_.empty()) {
      std::cerr << "wrote " << path_ << "\n";
    }
  }

 private:
  std::ostream* stream_ = nullptr;
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

// ---------------------------------------------------------------------------
// Shared state-input flags for `compute` and `classify`.

struct StateArgs {
  std::string state_file;
  std::string family;
  double k = 1.0;
  double r = 0.0;
  double gamma = 0.0;
  double z = 1.0;
  double z_a = 1.0;
  double z_b = 1.0;
  double theta = 0.0;
  double phi_a = 0.0;
  double phi_b = 0.0;
  int n = 0;
  int m = 0;
  double lambda = 0.5;
  double omega_a = 1.0;
  double omega_b = 1.0;
};

void add_state_options(CLI::App* cmd, StateArgs& args) {
  auto* file = cmd->add_option("--state-file", args.state_file,
                               "JSON state file (see README for the schema)");
  auto* family =
      cmd->add_option("--family", args.family,
                      "Inline state family: tms | bloch_messiah | "
                      "photon_subtracted_tms | fock_superposition | "
                      "bell_mixture")
          ->check(CLI::IsMember({"tms", "bloch_messiah",
                                 "photon_subtracted_tms", "fock_superposition",
                                 "bell_mixture"}));
  file->excludes(family);
  cmd->add_option("--k", args.k, "Thermal parameter k (tms, bloch_messiah, photon_subtracted_tms)");
  cmd->add_option("--r", args.r, "Two-mode squeezing r (tms)");
  cmd->add_option("--gamma", args.gamma, "Thermal asymmetry gamma (bloch_messiah)");
  cmd->add_option("--z", args.z, "Squeezing factor z = e^{-2r} (photon_subtracted_tms)");
  cmd->add_option("--z-a", args.z_a, "Local squeezing z_a (bloch_messiah)");
  cmd->add_option("--z-b", args.z_b, "Local squeezing z_b (bloch_messiah)");
  cmd->add_option("--theta", args.theta, "Beam-splitter angle in [0, pi/2] (bloch_messiah)");
  cmd->add_option("--phi-a", args.phi_a, "Phase on mode A (bloch_messiah)");
  cmd->add_option("--phi-b", args.phi_b, "Phase on mode B (bloch_messiah)");
  cmd->add_option("--fock-n", args.n, "Fock index n (fock_superposition, bell_mixture)");
  cmd->add_option("--fock-m", args.m, "Fock index m (fock_superposition)");
  cmd->add_option("--lambda", args.lambda, "Mixing weight lambda (bell_mixture)");
  cmd->add_option("--omega-a", args.omega_a,
                  "Mode-A frequency (inline families; must be <= omega-b)");
  cmd->add_option("--omega-b", args.omega_b, "Mode-B frequency (inline families)");
}

struct LoadedInput {
  StateRecord record;
  ModePair modes;
  std::vector<std::string> warnings;
};

LoadedInput build_state(const StateArgs& args) {
  if (!args.state_file.empty()) {
    cvergo::LoadedState loaded = cvergo::load_state_file(args.state_file);
    return {std::move(loaded.record), loaded.modes, std::move(loaded.warnings)};
  }
  if (args.family.empty()) {
    throw CLI::ValidationError("state input",
                               "provide either --state-file or --family");
  }
  const ModePair modes(args.omega_a, args.omega_b);
  if (args.family == "tms") {
    return {cvergo::tms_state(args.k, args.r), modes, {}};
  }
  if (args.family == "bloch_messiah") {
    BlochMessiahParams p;
    p.k = args.k;
    p.gamma = args.gamma;
    p.z_a = args.z_a;
    p.z_b = args.z_b;
    p.theta = args.theta;
    p.phi_a = args.phi_a;
    p.phi_b = args.phi_b;
    return {cvergo::bloch_messiah_state(p), modes, {}};
  }
  if (args.family == "photon_subtracted_tms") {
    return {cvergo::photon_subtracted_tms(args.k, args.z), modes, {}};
  }
  if (args.family == "fock_superposition") {
    return {cvergo::fock_superposition_cm(args.n, args.m), modes, {}};
  }
  if (args.family == "bell_mixture") {
    return {cvergo::bell_mixture_cm(args.n, args.lambda), modes, {}};
  }
  throw CLI::ValidationError("--family", "unknown family \"" + args.family + "\"");
}

ordered_json state_json(const LoadedInput& input) {
  ordered_json j;
  j["family"] = cvergo::to_string(input.record.family);
  j["gaussian"] = input.record.gaussian;
  j["omega_a"] = input.modes.omega_a;
  j["omega_b"] = input.modes.omega_b;
  if (!input.record.params.empty()) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : input.record.params) {
      params[key] = value;
    }
    j["params"] = params;
  }
  return j;
}

// ---------------------------------------------------------------------------
// compute

int run_compute(const StateArgs& args, const std::string& out_flag) {
  const LoadedInput input = build_state(args);
  for (const auto& w : input.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  const CovarianceMatrix& sigma = input.record.sigma;

  ordered_json j;
  j["state"] = state_json(input);

  const auto phys = cvergo::check_physical(sigma);
  j["physical"] = {{"is_physical", phys.is_physical},
                   {"nu_minus", phys.nu_minus},
                   {"worst_violation", phys.worst_violation}};
  if (!phys.is_physical) {
    throw cvergo::NonPhysicalError(
        "state is not a physical covariance matrix (nu_minus = " +
        fmt(phys.nu_minus) + ")");
  }

  const auto nu = cvergo::symplectic_eigenvalues(sigma);
  j["spectrum"] = {{"nu_plus", nu.nu_plus}, {"nu_minus", nu.nu_minus}};

  const auto sf = cvergo::standard_form(sigma);
  j["standard_form"] = {{"a", sf.a}, {"b", sf.b}, {"c1", sf.c1}, {"c2", sf.c2}};

  const auto energy = cvergo::ergotropy_report(sigma, input.modes);
  j["energy"] = {{"mean_energy", energy.mean_energy},
                 {"e_local_passive", energy.e_local_passive},
                 {"e_global_passive", energy.e_global_passive},
                 {"gap", energy.gap},
                 {"reg", energy.reg},
                 {"reg_degenerate", energy.reg_degenerate},
                 {"gaussian_ergotropy_global", energy.gaussian_ergotropy_global},
                 {"gaussian_ergotropy_local", energy.gaussian_ergotropy_local},
                 {"local_invariant_flipped", energy.local_invariant_flipped}};

  const auto corr = cvergo::correlation_report(sigma);
  j["correlations"] = {{"qmi", corr.qmi},
                       {"conditional_entropy", corr.conditional_entropy},
                       {"tau", corr.tau}};

  const auto moments = cvergo::moments_from_cm(sigma);
  const auto [sv_certified, sv_value] = cvergo::sv_witness(moments);
  j["second_moments"] = {{"n_a", moments.n_a},
                         {"n_b", moments.n_b},
                         {"ab_re", moments.ab.real()},
                         {"ab_im", moments.ab.imag()},
                         {"sv_value", sv_value},
                         {"sv_certifies_entanglement", sv_certified}};

  OutputStream out(out_flag);
  out.stream() << j.dump(2) << "\n";
  out.finish();
  return 0;
}

// ---------------------------------------------------------------------------
// classify

int run_classify(const StateArgs& args, const std::string& out_flag) {
  const LoadedInput input = build_state(args);
  for (const auto& w : input.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  const CovarianceMatrix& sigma = input.record.sigma;
  const auto verdict = cvergo::classify(sigma, input.modes);
  const auto [sv_certified, sv_value] =
      cvergo::sv_witness(cvergo::moments_from_cm(sigma));

  ordered_json j;
  j["state"] = state_json(input);
  j["cm_verdict"] = cvergo::to_string(verdict.verdict);
  j["cm_verdict_source"] = (verdict.source == cvergo::VerdictSource::PureGap)
                               ? "pure_state_gap"
                               : "reg_bounds";
  j["reg"] = verdict.reg_value;
  j["bound_sep"] = verdict.bound_sep;
  j["bound_ent"] = verdict.bound_ent;
  j["ppt_value"] = verdict.ppt_value;
  j["gap"] = verdict.gap;
  j["sv_value"] = sv_value;
  j["sv_certifies_entanglement"] = sv_certified;

  if (input.record.gaussian) {
    j["verdict"] = cvergo::to_string(verdict.verdict);
  } else {
    // For a non-Gaussian state the covariance matrix can certify entanglement
    // (PPT violation and the SV inequality hold for arbitrary states) but
    // never separability, and the REG-bound entangled verdict is
    // Gaussian-only.
    const bool entangled = verdict.ppt_value < -1e-12 || sv_certified;
    j["verdict"] = entangled ? "entangled" : "indeterminate";
    j["note"] =
        "state is non-Gaussian: covariance-level separability claims are not "
        "conclusive; entangled verdicts rest on PPT violation or the SV "
        "inequality only";
  }

  OutputStream out(out_flag);
  out.stream() << j.dump(2) << "\n";
  out.finish();
  return 0;
}

// ---------------------------------------------------------------------------
// fig1

struct Fig1Args {
  double gamma = 0.0;
  double alpha = 1.0;
  std::string k_range;
  std::string z_range = "0.05:1:150";
  std::string out;
};

int run_fig1(const Fig1Args& args) {
  // Default k window tracks the validity constraint k > 1 + |gamma|; the
  // gamma = 1 panel gets a wider window so the certified region is visible.
  Range ks;
  if (args.k_range.empty()) {
    ks.lo = 1.01 + std::abs(args.gamma);
    ks.hi = (std::abs(args.gamma) >= 1.0) ? 4.0 : 3.0;
    ks.count = 150;
  } else {
    ks = parse_range(args.k_range, "--k-range");
  }
  const Range zs = parse_range(args.z_range, "--z-range");
  if (args.alpha < 1.0) {
    throw CLI::ValidationError("--alpha", "must be >= 1");
  }
  const ModePair modes(1.0, args.alpha);

  OutputStream out(args.out);
  out.stream() << "k,z,reg,b_sep,ppt_value,verdict\n";
  for (int i = 0; i < ks.count; ++i) {
    const double k = ks.at(i);
    for (int jz = 0; jz < zs.count; ++jz) {
      const double z = zs.at(jz);
      BlochMessiahParams p;
      p.k = k;
      p.gamma = args.gamma;
      p.z_a = z;
      p.z_b = 1.0 / z;
      p.theta = std::numbers::pi / 4.0;
      const CovarianceMatrix sigma = cvergo::compose_bloch_messiah(p);
      const auto verdict = cvergo::classify(sigma, modes);
      out.stream() << fmt(k) << ',' << fmt(z) << ',' << fmt(verdict.reg_value)
                   << ',' << fmt(verdict.bound_sep) << ','
                   << fmt(verdict.ppt_value) << ','
                   << cvergo::to_string(verdict.verdict) << '\n';
    }
  }
  out.finish();
  return 0;
}

// ---------------------------------------------------------------------------
// fig2

struct Fig2Args {
  std::string k_range = "1.01:2.4:200";
  std::string z_range = "0.05:1:200";
  std::string out;
};

int run_fig2(const Fig2Args& args) {
  const Range ks = parse_range(args.k_range, "--k-range");
  const Range zs = parse_range(args.z_range, "--z-range");
  const ModePair modes(1.0, 1.0);

  OutputStream out(args.out);
  out.stream() << "k,z,reg,sv_value\n";
  for (int i = 0; i < ks.count; ++i) {
    const double k = ks.at(i);
    for (int jz = 0; jz < zs.count; ++jz) {
      const double z = zs.at(jz);
      const StateRecord rec = cvergo::photon_subtracted_tms(k, z);
      const auto energy = cvergo::ergotropy_report(rec.sigma, modes);
      const auto [certified, sv_value] =
          cvergo::sv_witness(cvergo::moments_from_cm(rec.sigma));
      (void)certified;
      out.stream() << fmt(k) << ',' << fmt(z) << ',' << fmt(energy.reg) << ','
                   << fmt(sv_value) << '\n';
    }
  }
  out.finish();
  return 0;
}

// ---------------------------------------------------------------------------
// scatter

struct ScatterArgs {
  int n = 500;
  double k = 2.0;
  double gamma = 0.0;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  double z_min = 0.05;
  std::string out;
};

int run_scatter(const ScatterArgs& args) {
  if (args.n < 1) {
    throw CLI::ValidationError("--n", "must be >= 1");
  }
  if (args.alpha < 1.0) {
    throw CLI::ValidationError("--alpha", "must be >= 1");
  }
  const ModePair modes(1.0, args.alpha);
  cvergo::SamplerRanges ranges;
  ranges.z_min = args.z_min;

  OutputStream out(args.out);
  out.stream()
      << "index,z_a,z_b,theta,phi_a,phi_b,nu_plus,nu_minus,reg,qmi,b_sep,b_ent,verdict\n";
  for (int i = 0; i < args.n; ++i) {
    const StateRecord rec = cvergo::random_state_at(
        args.k, args.gamma, ranges, args.seed, static_cast<std::uint64_t>(i));
    const auto nu = cvergo::symplectic_eigenvalues(rec.sigma);
    const auto verdict = cvergo::classify(rec.sigma, modes);
    const double qmi = cvergo::mutual_information(rec.sigma);
    out.stream() << i << ',' << fmt(rec.params.at("z_a")) << ','
                 << fmt(rec.params.at("z_b")) << ','
                 << fmt(rec.params.at("theta")) << ','
                 << fmt(rec.params.at("phi_a")) << ','
                 << fmt(rec.params.at("phi_b")) << ',' << fmt(nu.nu_plus)
                 << ',' << fmt(nu.nu_minus) << ',' << fmt(verdict.reg_value)
                 << ',' << fmt(qmi) << ',' << fmt(verdict.bound_sep) << ','
                 << fmt(verdict.bound_ent) << ','
                 << cvergo::to_string(verdict.verdict) << '\n';
  }
  out.finish();
  return 0;
}

// ---------------------------------------------------------------------------
// threshold

struct ThresholdArgs {
  std::string grid = "200x200";
  double k_min = 1.0;
  double k_max = 2.4;
  double z_min = 0.05;
  double z_max = 1.0;
};

int run_threshold(const ThresholdArgs& args) {
  cvergo::GridSpec grid;
  char trailing = '\0';
  if (std::sscanf(args.grid.c_str(), "%dx%d%c", &grid.n_k, &grid.n_z,
                  &trailing) != 2) {
    throw CLI::ValidationError("--grid", "expected NxM, got \"" + args.grid +
                                             "\"");
  }
  grid.k_min = args.k_min;
  grid.k_max = args.k_max;
  grid.z_min = args.z_min;
  grid.z_max = args.z_max;
  const auto result = cvergo::reg_threshold_search(grid);
  std::cout << "threshold " << fmt(result.threshold) << " at k="
            << fmt(result.k_at) << " z=" << fmt(result.z_at) << " (grid "
            << grid.n_k << "x" << grid.n_z << ", k in (" << fmt(grid.k_min)
            << ", " << fmt(grid.k_max) << "], z log-spaced in ["
            << fmt(grid.z_min) << ", " << fmt(grid.z_max) << "])\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string family = "fock";
  int n_max = 5;
  int n = 0;
  std::string lambda_range = "0:1:101";
  double omega = 1.0;
  std::string out;
};

int run_oracle(const OracleArgs& args) {
  OutputStream out(args.out);
  if (args.family == "fock") {
    if (args.n_max < 0) {
      throw CLI::ValidationError("--n-max", "must be >= 0");
    }
    out.stream() << "n,m,gaussian_ergotropy,std_gap_oracle,std_gap_closed\n";
    const ModePair modes(args.omega, args.omega);
    for (int n = 0; n <= args.n_max; ++n) {
      for (int m = 0; m <= args.n_max; ++m) {
        const StateRecord rec = cvergo::fock_superposition_cm(n, m);
        const auto energy = cvergo::ergotropy_report(rec.sigma, modes);
        out.stream() << n << ',' << m << ','
                     << fmt(energy.gaussian_ergotropy_global) << ','
                     << fmt(cvergo::std_gap_fock_superposition(n, m, args.omega))
                     << ','
                     << fmt(cvergo::std_gap_fock_superposition_closed(
                            n, m, args.omega))
                     << '\n';
      }
    }
  } else if (args.family == "bell") {
    const Range lambdas = parse_range(args.lambda_range, "--lambda-range");
    if (lambdas.lo < 0.0 || lambdas.hi > 1.0) {
      throw CLI::ValidationError("--lambda-range", "must lie within [0, 1]");
    }
    out.stream()
        << "lambda,std_gap_oracle,std_gap_closed,greg_closed,greg_pipeline\n";
    const ModePair modes(args.omega, args.omega);
    for (int i = 0; i < lambdas.count; ++i) {
      const double lambda = lambdas.at(i);
      const StateRecord rec = cvergo::bell_mixture_cm(args.n, lambda);
      const auto energy = cvergo::ergotropy_report(rec.sigma, modes);
      out.stream() << fmt(lambda) << ','
                   << fmt(cvergo::std_gap_bell_mixture(lambda, args.omega,
                                                       args.n))
                   << ','
                   << fmt(cvergo::std_gap_bell_mixture_closed(lambda,
                                                              args.omega))
                   << ',' << fmt(cvergo::gaussian_reg_bell_mixture(lambda, args.n))
                   << ',' << fmt(energy.reg) << '\n';
    }
  } else {
    throw CLI::ValidationError("--family", "expected fock or bell");
  }
  out.finish();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode Gaussian ergotropy toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  StateArgs compute_args;
  std::string compute_out;
  auto* compute = app.add_subcommand(
      "compute", "Energetics and correlation reports for one state (JSON)");
  add_state_options(compute, compute_args);
  compute->add_option("--out", compute_out, "Output file (default stdout)");
  compute->callback([&] { rc = run_compute(compute_args, compute_out); });

  StateArgs classify_args;
  std::string classify_out;
  auto* classify = app.add_subcommand(
      "classify", "Separability verdict for one state (JSON)");
  add_state_options(classify, classify_args);
  classify->add_option("--out", classify_out, "Output file (default stdout)");
  classify->callback([&] { rc = run_classify(classify_args, classify_out); });

  Fig1Args fig1_args;
  auto* fig1 = app.add_subcommand(
      "fig1",
      "Sweep REG, separability bound and PPT value over a (k, z) grid of "
      "two-mode squeezed thermal states (CSV)");
  fig1->add_option("--gamma", fig1_args.gamma, "Thermal asymmetry gamma");
  fig1->add_option("--alpha", fig1_args.alpha, "Frequency ratio omega_b/omega_a (>= 1)");
  fig1->add_option("--k-range", fig1_args.k_range,
                   "k grid min:max:count (default tracks gamma)");
  fig1->add_option("--z-range", fig1_args.z_range, "z grid min:max:count");
  fig1->add_option("--out", fig1_args.out, "Output file (default stdout)");
  fig1->callback([&] { rc = run_fig1(fig1_args); });

  Fig2Args fig2_args;
  auto* fig2 = app.add_subcommand(
      "fig2",
      "Sweep REG and the SV value over a (k, z) grid of photon-subtracted "
      "squeezed thermal states (CSV)");
  fig2->add_option("--k-range", fig2_args.k_range, "k grid min:max:count");
  fig2->add_option("--z-range", fig2_args.z_range, "z grid min:max:count");
  fig2->add_option("--out", fig2_args.out, "Output file (default stdout)");
  fig2->callback([&] { rc = run_fig2(fig2_args); });

  ScatterArgs scatter_args;
  auto* scatter = app.add_subcommand(
      "scatter",
      "Random Bloch-Messiah ensemble at fixed (k, gamma), classified (CSV)");
  scatter->add_option("--n", scatter_args.n, "Number of states");
  scatter->add_option("--k", scatter_args.k, "Thermal parameter k");
  scatter->add_option("--gamma", scatter_args.gamma, "Thermal asymmetry gamma");
  scatter->add_option("--alpha", scatter_args.alpha,
                      "Frequency ratio omega_b/omega_a (>= 1)");
  scatter->add_option("--seed", scatter_args.seed, "RNG seed");
  scatter->add_option("--z-min", scatter_args.z_min,
                      "Lower edge of the log-uniform squeezing range");
  scatter->add_option("--out", scatter_args.out, "Output file (default stdout)");
  scatter->callback([&] { rc = run_scatter(scatter_args); });

  ThresholdArgs threshold_args;
  auto* threshold = app.add_subcommand(
      "threshold",
      "Largest REG among photon-subtracted states the SV criterion cannot "
      "certify");
  threshold->add_option("--grid", threshold_args.grid, "Grid size NxM");
  threshold->add_option("--k-min", threshold_args.k_min, "k lower edge (exclusive)");
  threshold->add_option("--k-max", threshold_args.k_max, "k upper edge (inclusive)");
  threshold->add_option("--z-min", threshold_args.z_min, "z lower edge");
  threshold->add_option("--z-max", threshold_args.z_max, "z upper edge");
  threshold->callback([&] { rc = run_threshold(threshold_args); });

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "Finite-spectrum cross-checks of the Fock-basis closed forms (CSV)");
  oracle->add_option("--family", oracle_args.family, "fock | bell")
      ->check(CLI::IsMember({"fock", "bell"}));
  oracle->add_option("--n-max", oracle_args.n_max, "Largest Fock index (fock)");
  oracle->add_option("--fock-n", oracle_args.n, "Fock offset n (bell)");
  oracle->add_option("--lambda-range", oracle_args.lambda_range,
                     "lambda grid min:max:count (bell)");
  oracle->add_option("--omega", oracle_args.omega, "Mode frequency");
  oracle->add_option("--out", oracle_args.out, "Output file (default stdout)");
  oracle->callback([&] { rc = run_oracle(oracle_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cvergo: error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
