#include "cvergo/states.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "cvergo/errors.hpp"

namespace cvergo {

namespace {
constexpr double kVacuumTol = 1e-12;
} // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::BlochMessiah: return "bloch_messiah";
    case Family::TMS: return "tms";
    case Family::PhotonSubtractedTMS: return "photon_subtracted_tms";
    case Family::FockSuperposition: return "fock_superposition";
    case Family::BellMixture: return "bell_mixture";
    case Family::Raw: return "raw";
  }
  return "raw";
}

CovarianceMatrix tms(double k, double r) {
  if (k < 1.0 - 1e-12) {
    throw InvalidParamsError("tms: thermal parameter k must be >= 1");
  }
  const double ch = k * std::cosh(2.0 * r);
  const double sh = k * std::sinh(2.0 * r);
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = ch;
  m(0, 2) = m(2, 0) = sh;
  m(1, 3) = m(3, 1) = -sh;
  return CovarianceMatrix(m);
}

StateRecord tms_state(double k, double r) {
  StateRecord rec{tms(k, r), Family::TMS, true, {}, std::nullopt};
  rec.params = {{"k", k}, {"r", r}};
  return rec;
}

StateRecord bloch_messiah_state(const BlochMessiahParams& params) {
  params.validate();
  StateRecord rec{compose_bloch_messiah(params), Family::BlochMessiah, true, {},
                  std::nullopt};
  rec.params = {{"k", params.k},       {"gamma", params.gamma},
                {"z_a", params.z_a},   {"z_b", params.z_b},
                {"theta", params.theta}, {"phi_a", params.phi_a},
                {"phi_b", params.phi_b}};
  return rec;
}

StateRecord random_state_at(double k, double gamma, const SamplerRanges& ranges,
                            std::uint64_t seed, std::uint64_t index) {
  if (!(ranges.z_min > 0.0) || ranges.z_min > 1.0) {
    throw InvalidParamsError("random_state: z_min must lie in (0, 1]");
  }
  DeterministicRng rng(seed, index);
  BlochMessiahParams p;
  p.k = k;
  p.gamma = gamma;
  p.z_a = rng.log_uniform(ranges.z_min, 1.0 / ranges.z_min);
  p.z_b = rng.log_uniform(ranges.z_min, 1.0 / ranges.z_min);
  p.theta = rng.uniform(0.0, std::numbers::pi / 2.0);
  p.phi_a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  p.phi_b = rng.uniform(0.0, 2.0 * std::numbers::pi);
  p.validate();
  StateRecord rec = bloch_messiah_state(p);
  rec.seed = seed;
  rec.params["stream"] = static_cast<double>(index);
  return rec;
}

StandardFormParams photon_subtracted_entries(double k, double z) {
  if (k < 1.0 - 1e-12) {
    throw InvalidParamsError("photon_subtracted_entries: k must be >= 1");
  }
  if (!(z > 0.0)) {
    throw InvalidParamsError("photon_subtracted_entries: z must be > 0");
  }
  const double u = z + 1.0 / z;
  const double mean_photons = k * u - 2.0; // 4 n_a of the input state
  if (mean_photons <= kVacuumTol) {
    throw SubtractionFromVacuumError(
        "photon subtraction is undefined on the two-mode vacuum "
        "(k (z + 1/z) - 2 <= 0)");
  }
  StandardFormParams out;
  out.a = k * u - 1.0;
  out.b = (k * (z * z + 1.0 / (z * z)) - u) / (u - 2.0 / k);
  out.c1 = k * (1.0 / z - z);
  out.c2 = -out.c1;
  return out;
}

StateRecord photon_subtracted_tms(double k, double z) {
  const StandardFormParams entries = photon_subtracted_entries(k, z);
  StateRecord rec{standard_form_matrix(entries), Family::PhotonSubtractedTMS,
                  false, {}, std::nullopt};
  rec.params = {{"k", k}, {"z", z}};
  return rec;
}

StateRecord fock_superposition_cm(int n, int m) {
  if (n < 0 || m < 0) {
    throw InvalidParamsError("fock_superposition_cm: n, m must be >= 0");
  }
  const double a = static_cast<double>(n + m + 1);
  double c = 0.0;
  if (m == n + 1) {
    c = static_cast<double>(m);
  } else if (n == m + 1) {
    c = static_cast<double>(n);
  }
  Mat4 mat = Mat4::Zero();
  mat(0, 0) = mat(1, 1) = mat(2, 2) = mat(3, 3) = a;
  mat(0, 2) = mat(2, 0) = c;
  mat(1, 3) = mat(3, 1) = c;
  StateRecord rec{CovarianceMatrix(mat), Family::FockSuperposition, false, {},
                  std::nullopt};
  rec.params = {{"n", static_cast<double>(n)}, {"m", static_cast<double>(m)}};
  return rec;
}

StateRecord bell_mixture_cm(int n, double lambda) {
  if (n < 0) {
    throw InvalidParamsError("bell_mixture_cm: n must be >= 0");
  }
  if (lambda < 0.0 || lambda > 1.0) {
    throw InvalidParamsError("bell_mixture_cm: lambda must lie in [0, 1]");
  }
  const double a = 2.0 * (n + 1.0);
  const double c = std::abs(2.0 * lambda - 1.0) * (n + 1.0);
  Mat4 mat = Mat4::Zero();
  mat(0, 0) = mat(1, 1) = mat(2, 2) = mat(3, 3) = a;
  mat(0, 2) = mat(2, 0) = c;
  mat(1, 3) = mat(3, 1) = -c;
  StateRecord rec{CovarianceMatrix(mat), Family::BellMixture, false, {},
                  std::nullopt};
  rec.params = {{"n", static_cast<double>(n)}, {"lambda", lambda}};
  return rec;
}

SecondMoments moments_from_cm(const CovarianceMatrix& sigma) {
  const Mat4& m = sigma.matrix();
  SecondMoments out;
  out.n_a = (m(0, 0) + m(1, 1) - 2.0) / 4.0;
  out.n_b = (m(2, 2) + m(3, 3) - 2.0) / 4.0;
  out.ab = std::complex<double>((m(0, 2) - m(1, 3)) / 4.0,
                                (m(0, 3) + m(1, 2)) / 4.0);
  out.a_dag_b_dag = std::conj(out.ab);
  return out;
}

} // namespace cvergo
