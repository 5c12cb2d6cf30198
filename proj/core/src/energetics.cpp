#include "cvergo/energetics.hpp"

#include <cmath>
#include <string>

namespace cvergo {

namespace {

constexpr double kPurityTol = 1e-9;

double mode_invariant(const Mat2& block) {
  return std::sqrt(std::max(block.determinant(), 0.0));
}

void require_physical(const CovarianceMatrix& sigma) {
  const PhysicalityReport phys = check_physical(sigma);
  if (!phys.is_physical) {
    throw NonPhysicalError("state is not physical (nu_minus = " +
                           std::to_string(phys.nu_minus) + ")");
  }
}

} // namespace

ModePair::ModePair(double wa, double wb) : omega_a(wa), omega_b(wb) {
  if (!(wa > 0.0) || !(wb > 0.0)) {
    throw InvalidParamsError("mode frequencies must be positive");
  }
  if (wa > wb * (1.0 + 1e-12)) {
    throw InvalidParamsError(
        "ModePair requires omega_a <= omega_b; relabel the modes (covariance "
        "matrix included) instead of swapping frequencies");
  }
}

double mean_energy(const CovarianceMatrix& sigma, const ModePair& modes) {
  require_physical(sigma);
  const double tr_a = sigma(0, 0) + sigma(1, 1);
  const double tr_b = sigma(2, 2) + sigma(3, 3);
  return 0.25 * (modes.omega_a * (tr_a - 2.0) + modes.omega_b * (tr_b - 2.0));
}

std::pair<double, double> passive_energies(const CovarianceMatrix& sigma,
                                           const ModePair& modes) {
  require_physical(sigma);
  const double a_inv = mode_invariant(sigma.block_a());
  const double b_inv = mode_invariant(sigma.block_b());
  const double e_local =
      0.5 * modes.omega_a * (a_inv - 1.0) + 0.5 * modes.omega_b * (b_inv - 1.0);

  const SymplecticSpectrum nu = symplectic_eigenvalues(sigma);
  // Larger symplectic eigenvalue on the smaller frequency minimizes energy.
  const double e_global = 0.5 * modes.omega_a * (nu.nu_plus - 1.0) +
                          0.5 * modes.omega_b * (nu.nu_minus - 1.0);
  return {e_local, e_global};
}

EnergyReport ergotropy_report(const CovarianceMatrix& sigma, const ModePair& modes) {
  EnergyReport report;
  report.mean_energy = mean_energy(sigma, modes);
  const auto [e_local, e_global] = passive_energies(sigma, modes);
  report.e_local_passive = e_local;
  report.e_global_passive = e_global;
  report.gap = e_local - e_global;
  report.gaussian_ergotropy_global = report.mean_energy - e_global;
  report.gaussian_ergotropy_local = report.mean_energy - e_local;
  report.local_invariant_flipped =
      mode_invariant(sigma.block_a()) < mode_invariant(sigma.block_b()) - 1e-9;

  if (e_global > kPurityTol) {
    report.reg = report.gap / e_global;
    report.reg_degenerate = false;
  } else {
    // Globally pure (or vacuum): REG undefined unless the gap also vanishes.
    report.reg = 0.0;
    report.reg_degenerate = report.gap > kPurityTol;
  }
  return report;
}

double reg_closed_form(const BlochMessiahParams& params, double alpha) {
  params.validate();
  if (!(alpha >= 1.0)) {
    throw InvalidParamsError("frequency ratio alpha must be >= 1");
  }

  const double k = params.k;
  const double g = params.gamma;
  const double ga = std::abs(g);
  // Global passive terms use |gamma| (larger eigenvalue on the smaller
  // frequency); the local-invariant square roots keep the signed gamma.
  const double denom = (k - 1.0) * (1.0 + alpha) + ga * (1.0 - alpha);
  if (denom <= kPurityTol) {
    throw DegeneratePurityError("REG undefined: global passive energy vanishes");
  }

  const double c2 = std::cos(params.theta) * std::cos(params.theta);
  const double s2 = std::sin(params.theta) * std::sin(params.theta);
  const double zr = (params.z_a * params.z_a + params.z_b * params.z_b) /
                    (params.z_a * params.z_b);
  const double kp = (k + g) * (k + g);
  const double km = (k - g) * (k - g);
  const double cross = (k * k - g * g) * c2 * s2 * zr;
  const double inv_a = std::sqrt(kp * c2 * c2 + km * s2 * s2 + cross);
  const double inv_b = std::sqrt(km * c2 * c2 + kp * s2 * s2 + cross);

  const double num =
      -(k * (1.0 + alpha) + ga * (1.0 - alpha)) + inv_a + alpha * inv_b;
  return num / denom;
}

double tms_gap(double k, double r, double omega) {
  if (!(k >= 1.0)) throw InvalidParamsError("TMS thermal factor k must be >= 1");
  if (!(omega > 0.0)) throw InvalidParamsError("omega must be positive");
  const double sh = std::sinh(r);
  return 2.0 * k * omega * sh * sh;
}

} // namespace cvergo
