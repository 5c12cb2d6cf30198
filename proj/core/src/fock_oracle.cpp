#include "cvergo/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "cvergo/errors.hpp"

namespace cvergo {

namespace {

constexpr double kProbTol = 1e-12;

void check_probabilities(const std::vector<double>& probs, const char* what) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < -kProbTol) {
      throw InvalidParamsError(std::string(what) +
                               ": probabilities must be non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbTol) {
    throw InvalidParamsError(std::string(what) +
                             ": probabilities must sum to 1");
  }
}

} // namespace

void FiniteSpectrumState::validate() const {
  std::vector<double> global;
  global.reserve(global_spectrum.size());
  for (const auto& [p, label] : global_spectrum) {
    global.push_back(p);
  }
  check_probabilities(global, "FiniteSpectrumState.global_spectrum");
  check_probabilities(reduced_spectrum_a, "FiniteSpectrumState.reduced_spectrum_a");
  check_probabilities(reduced_spectrum_b, "FiniteSpectrumState.reduced_spectrum_b");
  if (!(mode_frequency > 0.0)) {
    throw InvalidParamsError("FiniteSpectrumState: mode_frequency must be > 0");
  }
}

std::vector<double> single_mode_levels(double omega, int count) {
  if (!(omega > 0.0) || count < 0) {
    throw InvalidParamsError("single_mode_levels: omega must be > 0, count >= 0");
  }
  std::vector<double> levels;
  levels.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    levels.push_back(omega * (n + 0.5));
  }
  return levels;
}

std::vector<double> two_mode_levels(double omega_a, double omega_b,
                                    int count_per_mode) {
  if (!(omega_a > 0.0) || !(omega_b > 0.0) || count_per_mode < 0) {
    throw InvalidParamsError(
        "two_mode_levels: frequencies must be > 0, count >= 0");
  }
  std::vector<double> levels;
  levels.reserve(static_cast<std::size_t>(count_per_mode) * count_per_mode);
  for (int n = 0; n < count_per_mode; ++n) {
    for (int m = 0; m < count_per_mode; ++m) {
      levels.push_back(omega_a * (n + 0.5) + omega_b * (m + 0.5));
    }
  }
  std::stable_sort(levels.begin(), levels.end());
  return levels;
}

double passive_energy(const std::vector<double>& spectrum,
                      const std::vector<double>& levels) {
  check_probabilities(spectrum, "passive_energy");
  if (!std::is_sorted(levels.begin(), levels.end())) {
    throw InvalidParamsError("passive_energy: levels must be ascending");
  }
  if (spectrum.size() > levels.size()) {
    throw InsufficientLevelsError(
        "passive_energy: spectrum has more entries than levels provided");
  }
  std::vector<double> probs = spectrum;
  std::stable_sort(probs.begin(), probs.end(), std::greater<double>());
  double energy = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    energy += probs[i] * levels[i];
  }
  return energy;
}

FiniteSpectrumState fock_superposition_finite(int n, int m, double omega) {
  if (n < 0 || m < 0) {
    throw InvalidParamsError("fock_superposition_finite: n, m must be >= 0");
  }
  FiniteSpectrumState state;
  state.mode_frequency = omega;
  state.global_spectrum = {{1.0, "(|" + std::to_string(n) + "," +
                                     std::to_string(m) + "> + |" +
                                     std::to_string(m) + "," +
                                     std::to_string(n) + ">)/sqrt(2)"}};
  if (n == m) {
    state.reduced_spectrum_a = {1.0};
    state.reduced_spectrum_b = {1.0};
  } else {
    state.reduced_spectrum_a = {0.5, 0.5};
    state.reduced_spectrum_b = {0.5, 0.5};
  }
  state.validate();
  return state;
}

FiniteSpectrumState bell_mixture_finite(int n, double lambda, double omega) {
  if (n < 0) {
    throw InvalidParamsError("bell_mixture_finite: n must be >= 0");
  }
  if (lambda < 0.0 || lambda > 1.0) {
    throw InvalidParamsError("bell_mixture_finite: lambda must lie in [0, 1]");
  }
  FiniteSpectrumState state;
  state.mode_frequency = omega;
  state.global_spectrum = {{lambda, "|phi+>"}, {1.0 - lambda, "|phi->"}};
  // Both eigenvectors reduce to the same mixture (|n><n| + |n+1><n+1|)/2 on
  // each mode, so the reduced spectra are {1/2, 1/2} independent of lambda.
  state.reduced_spectrum_a = {0.5, 0.5};
  state.reduced_spectrum_b = {0.5, 0.5};
  state.validate();
  return state;
}

double std_gap_finite(const FiniteSpectrumState& state) {
  state.validate();
  const double omega = state.mode_frequency;
  std::vector<double> global;
  global.reserve(state.global_spectrum.size());
  for (const auto& [p, label] : state.global_spectrum) {
    global.push_back(p);
  }
  const int per_mode = static_cast<int>(std::max(
      {state.reduced_spectrum_a.size(), state.reduced_spectrum_b.size(),
       static_cast<std::size_t>(2)}));
  int joint_per_mode = per_mode;
  while (static_cast<std::size_t>(joint_per_mode) *
             static_cast<std::size_t>(joint_per_mode) <
         global.size()) {
    ++joint_per_mode;
  }
  const double e_local =
      passive_energy(state.reduced_spectrum_a,
                     single_mode_levels(omega, per_mode)) +
      passive_energy(state.reduced_spectrum_b,
                     single_mode_levels(omega, per_mode));
  const double e_global =
      passive_energy(global, two_mode_levels(omega, omega, joint_per_mode));
  return e_local - e_global;
}

double std_gap_fock_superposition(int n, int m, double omega) {
  return std_gap_finite(fock_superposition_finite(n, m, omega));
}

double std_gap_fock_superposition_closed(int n, int m, double omega) {
  if (n < 0 || m < 0) {
    throw InvalidParamsError(
        "std_gap_fock_superposition_closed: n, m must be >= 0");
  }
  return (n == m) ? 0.0 : omega;
}

double std_gap_bell_mixture(double lambda, double omega, int n) {
  return std_gap_finite(bell_mixture_finite(n, lambda, omega));
}

double std_gap_bell_mixture_closed(double lambda, double omega) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw InvalidParamsError(
        "std_gap_bell_mixture_closed: lambda must lie in [0, 1]");
  }
  return omega * (1.0 - std::min(lambda, 1.0 - lambda));
}

double gaussian_reg_bell_mixture(double lambda, int n) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw InvalidParamsError(
        "gaussian_reg_bell_mixture: lambda must lie in [0, 1]");
  }
  if (n < 0) {
    throw InvalidParamsError("gaussian_reg_bell_mixture: n must be >= 0");
  }
  const double d = 2.0 * lambda - 1.0;
  const double q = std::sqrt(4.0 - d * d); // in [sqrt(3), 2]
  const double scale = static_cast<double>(n) + 1.0;
  return scale * (2.0 - q) / (scale * q - 1.0);
}

} // namespace cvergo
