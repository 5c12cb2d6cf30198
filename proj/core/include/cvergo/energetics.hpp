#pragma once

// Energetics of two-mode Gaussian states: mean energy, local/global Gaussian
// passive energies, Gaussian ergotropy, the ergotropic gap and the relative
// ergotropic gap (REG).
//
// Energy convention: E = (1/4) sum_k omega_k (Tr sigma_k - 2), i.e. the
// vacuum has zero energy and all hbar factors are absorbed. The global
// passive energy pairs the larger symplectic eigenvalue with the smaller
// frequency (the energy-minimal arrangement); the local passive energy uses
// each mode's own invariant a_X = sqrt(det sigma_X) without reordering.

#include "cvergo/bloch_messiah.hpp"
#include "cvergo/covariance.hpp"

namespace cvergo {

/// The two oscillator frequencies. Requires omega_a <= omega_b (alpha >= 1);
/// callers with the opposite ordering must relabel modes (covariance matrix
/// included) rather than swap frequencies alone.
struct ModePair {
  double omega_a = 1.0;
  double omega_b = 1.0;

  ModePair() = default;
  ModePair(double wa, double wb);

  double alpha() const { return omega_b / omega_a; }
};

/// Energetics bundle for one state.
struct EnergyReport {
  double mean_energy = 0.0;
  double e_local_passive = 0.0;
  double e_global_passive = 0.0;
  /// gap = e_local_passive - e_global_passive >= 0.
  double gap = 0.0;
  /// reg = gap / e_global_passive; 0 when both vanish (vacuum/product limit);
  /// meaningless when reg_degenerate is set.
  double reg = 0.0;
  /// Set for globally pure correlated states (e_global_passive ~ 0 with a
  /// positive gap): REG is formally infinite there, use `gap` instead.
  bool reg_degenerate = false;
  /// E - E_gp: work extractable by arbitrary Gaussian unitaries.
  double gaussian_ergotropy_global = 0.0;
  /// E - E_lp: work extractable by local Gaussian unitaries.
  double gaussian_ergotropy_local = 0.0;
  /// The lower-frequency mode carries the *smaller* per-mode invariant
  /// (a_A < a_B): the state leaves the convention the closed forms assume.
  bool local_invariant_flipped = false;
};

/// Mean energy E = (1/4)[omega_a (Tr sigma_A - 2) + omega_b (Tr sigma_B - 2)].
double mean_energy(const CovarianceMatrix& sigma, const ModePair& modes);

/// (e_local, e_global) Gaussian passive energies. Requires a physical state.
std::pair<double, double> passive_energies(const CovarianceMatrix& sigma,
                                           const ModePair& modes);

/// Full energetics bundle; requires a physical state.
EnergyReport ergotropy_report(const CovarianceMatrix& sigma, const ModePair& modes);

/// Closed-form REG of a Bloch-Messiah state at frequency ratio alpha >= 1
/// (phases drop out). Agrees with the covariance pipeline for signed gamma;
/// throws DegeneratePurityError when the global passive energy vanishes
/// (k = 1, gamma = 0).
double reg_closed_form(const BlochMessiahParams& params, double alpha);

/// Closed-form ergotropic gap of the two-mode squeezed thermal state:
/// 2 k omega sinh^2 r.
double tms_gap(double k, double r, double omega);

} // namespace cvergo
