#pragma once

// Bloch-Messiah generative parametrization of two-mode Gaussian states:
//
//   sigma = P(phi_A, phi_B) B(theta) S(z_A, z_B) V(k_A, k_B) S^T B^T P^T
//
// with V = diag(k_A, k_A, k_B, k_B) the thermal core (k_A = k + gamma,
// k_B = k - gamma, so the symplectic spectrum is exactly {k+gamma, k-gamma}),
// S = diag(sqrt z_A, 1/sqrt z_A, sqrt z_B, 1/sqrt z_B) single-mode squeezers,
// B(theta) the beam splitter and P a pair of local phase rotations. Every
// two-mode Gaussian state is reachable this way.

#include <utility>

#include "cvergo/covariance.hpp"

namespace cvergo {

/// Generative parameters (k, gamma, z_a, z_b, theta, phi_a, phi_b).
/// Valid iff k - |gamma| >= 1 (both thermal factors at or above vacuum),
/// z_a, z_b > 0 and theta in [0, pi/2].
struct BlochMessiahParams {
  double k = 1.0;
  double gamma = 0.0;
  double z_a = 1.0;
  double z_b = 1.0;
  double theta = 0.0;
  double phi_a = 0.0;
  double phi_b = 0.0;

  double k_a() const { return k + gamma; }
  double k_b() const { return k - gamma; }

  /// Throws InvalidParamsError on violation.
  void validate() const;
};

// ---- generator matrices (all symplectic) ----

/// Thermal core V = diag(k_a, k_a, k_b, k_b). (Not symplectic; it is the
/// Williamson diagonal the symplectic factors act on.)
Mat4 thermal_core(double k_a, double k_b);

/// Single-mode squeezers S = diag(sqrt z_a, 1/sqrt z_a, sqrt z_b, 1/sqrt z_b).
Mat4 squeezer(double z_a, double z_b);

/// Beam splitter mixing the two modes by angle theta.
Mat4 beam_splitter(double theta);

/// Local phase rotations by phi_a on mode A and phi_b on mode B.
Mat4 phase_rotation(double phi_a, double phi_b);

/// Local squeezer diag(r_a, 1/r_a, r_b, 1/r_b) used for standard-form
/// reduction.
Mat4 local_squeezer(double r_a, double r_b);

/// Compose the covariance matrix of the parametrized state.
/// Post: physical, symplectic spectrum (k + gamma, k - gamma).
CovarianceMatrix compose_bloch_messiah(const BlochMessiahParams& params);

/// Local squeezing strengths (r_A, r_B) that bring the *phase-free*
/// composition (phi_a = phi_b = 0) to standard form when conjugated by
/// local_squeezer(r_A, r_B). With nonzero phases the full standardizing
/// local operation is local_squeezer(r_A, r_B) * phase_rotation(phi)^T;
/// the returned strengths do not depend on the phases.
std::pair<double, double> optimal_local_squeezings(const BlochMessiahParams& params);

} // namespace cvergo
