#pragma once

// Brute-force ergotropic-gap computation for states with small, known
// spectra, used as an independent cross-check of the closed forms.
//
// Energy convention in this module: each mode carries H = omega (n + 1/2),
// so level n has energy omega (n + 1/2) and the two-mode ground level sits
// at omega_a/2 + omega_b/2. The Gaussian code measures energies relative to
// the vacuum instead; ergotropic *gaps* are differences of two energies of
// the same state under the same Hamiltonian, so the zero-point offset
// cancels and the two conventions agree on every gap.

#include <string>
#include <utility>
#include <vector>

namespace cvergo {

/// Exact spectral data of a bipartite state with finitely many nonzero
/// eigenvalues: the global spectrum (with labels for reporting) and the two
/// reduced single-mode spectra.
struct FiniteSpectrumState {
  std::vector<std::pair<double, std::string>> global_spectrum;
  std::vector<double> reduced_spectrum_a;
  std::vector<double> reduced_spectrum_b;
  double mode_frequency = 1.0;

  /// Throws InvalidParamsError unless every probability is >= -1e-12 and
  /// each list sums to 1 within 1e-12.
  void validate() const;
};

/// Single-mode levels omega (n + 1/2) for n = 0 .. count-1 (ascending).
std::vector<double> single_mode_levels(double omega, int count);

/// All two-mode sums omega_a (n + 1/2) + omega_b (m + 1/2) with
/// n, m < count_per_mode, sorted ascending; degenerate levels keep the
/// (n, m)-lexicographic generation order.
std::vector<double> two_mode_levels(double omega_a, double omega_b,
                                    int count_per_mode);

/// Passive-state energy: the largest probability occupies the lowest level,
/// and so on down the sorted spectrum. `levels` must be ascending and at
/// least as long as `spectrum` (InsufficientLevelsError otherwise). Ties in
/// the probabilities keep their input order; the result does not depend on
/// how such ties are broken.
double passive_energy(const std::vector<double>& spectrum,
                      const std::vector<double>& levels);

/// Spectral data of (|n m> + |m n>)/sqrt(2) at equal mode frequencies.
FiniteSpectrumState fock_superposition_finite(int n, int m, double omega = 1.0);

/// Spectral data of lambda |phi+><phi+| + (1 - lambda) |phi-><phi-| with
/// |phi±> = (|n n> ± |n+1 n+1>)/sqrt(2).
FiniteSpectrumState bell_mixture_finite(int n, double lambda,
                                        double omega = 1.0);

/// Standard (full-unitary) ergotropic gap of a finite-spectrum state,
/// computed by the passive_energy route: sum of per-mode passive energies of
/// the reduced spectra minus the global passive energy.
double std_gap_finite(const FiniteSpectrumState& state);

/// Standard gap of the Fock superposition, oracle route. Equals 0 when
/// n = m and omega otherwise.
double std_gap_fock_superposition(int n, int m, double omega = 1.0);

/// Closed form for the same quantity: 0 if n = m, omega otherwise.
double std_gap_fock_superposition_closed(int n, int m, double omega = 1.0);

/// Standard gap of the Bell mixture, oracle route. Independent of n; equals
/// omega (1 - min(lambda, 1 - lambda)), with minimum omega/2 at lambda = 1/2.
double std_gap_bell_mixture(double lambda, double omega = 1.0, int n = 0);

/// Closed form for the same quantity: omega (1 - min(lambda, 1 - lambda)).
double std_gap_bell_mixture_closed(double lambda, double omega = 1.0);

/// Gaussian relative ergotropic gap of the Bell mixture with Fock offset n:
/// (n+1)(2 - q) / ((n+1) q - 1) with q = sqrt(4 - (2 lambda - 1)^2). Zero
/// iff lambda = 1/2; symmetric about lambda = 1/2. The value depends on n
/// (the n = 0 case gives (2 - q)/(q - 1)); it matches the covariance-matrix
/// pipeline REG of the same mixture at the same n.
double gaussian_reg_bell_mixture(double lambda, int n = 0);

} // namespace cvergo
