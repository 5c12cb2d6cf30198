#pragma once

// Constructors for every state family the toolkit works with, bundled with
// the provenance a witness needs (family tag + whether the underlying state
// really is Gaussian: photon-subtracted, Fock-superposition and Bell-mixture
// records carry exact covariance matrices of non-Gaussian states, so the
// PPT-as-sufficient reading does not apply to them).

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cvergo/bloch_messiah.hpp"
#include "cvergo/covariance.hpp"
#include "cvergo/rng.hpp"
#include "cvergo/witnesses.hpp"

namespace cvergo {

enum class Family {
  BlochMessiah,
  TMS,
  PhotonSubtractedTMS,
  FockSuperposition,
  BellMixture,
  Raw,
};

const char* to_string(Family f);

/// A covariance matrix plus the provenance of how it was built.
struct StateRecord {
  CovarianceMatrix sigma;
  Family family = Family::Raw;
  bool gaussian = true;
  std::map<std::string, double> params;
  std::optional<std::uint64_t> seed;
};

/// Two-mode squeezed thermal state: diagonal blocks k cosh(2r) I, correlation
/// block k sinh(2r) diag(1, -1). Squeezing conventions: this r relates to the
/// Bloch-Messiah squeezing factor via z = exp(-2r) (tms(k, r) equals
/// compose_bloch_messiah(k, 0, z, 1/z, pi/4)).
CovarianceMatrix tms(double k, double r);

StateRecord tms_state(double k, double r);
StateRecord bloch_messiah_state(const BlochMessiahParams& params);

/// Sampler ranges for random ensembles: z_a, z_b log-uniform on
/// [z_min, 1/z_min], theta uniform on [0, pi/2], phases uniform on [0, 2 pi).
struct SamplerRanges {
  double z_min = 0.05;
};

/// Deterministic random Bloch-Messiah state at fixed (k, gamma). The draw is
/// a pure function of (seed, index) — independent streams per index, so
/// ensembles may be generated in any order. Draw order within a stream:
/// z_a, z_b, theta, phi_a, phi_b.
StateRecord random_state_at(double k, double gamma, const SamplerRanges& ranges,
                            std::uint64_t seed, std::uint64_t index);

inline StateRecord random_state(double k, double gamma, const SamplerRanges& ranges,
                                std::uint64_t seed) {
  return random_state_at(k, gamma, ranges, seed, 0);
}

/// Closed-form standard-form entries of the photon-subtracted two-mode
/// squeezed thermal state (subtraction on mode A from the k, z = e^{-2r}
/// input): a = k(z + 1/z) - 1, b = [k(z^2 + 1/z^2) - (z + 1/z)] /
/// [z + 1/z - 2/k], c1 = -c2 = k(1/z - z).
/// Throws SubtractionFromVacuumError when k(z + 1/z) - 2 <= 1e-12.
StandardFormParams photon_subtracted_entries(double k, double z);

/// Photon-subtracted TMS record (gaussian = false).
StateRecord photon_subtracted_tms(double k, double z);

/// Covariance matrix of (|n m> + |m n>)/sqrt(2): diagonal blocks (n+m+1) I,
/// correlation block c I with c = m if m = n+1, n if n = m+1, else 0
/// (gaussian = false). The matrix is Gaussian-passive for every n, m.
StateRecord fock_superposition_cm(int n, int m);

/// Covariance matrix of lambda |phi+><phi+| + (1-lambda) |phi-><phi-| with
/// |phi±> = (|n,n> ± |n+1,n+1>)/sqrt(2): diagonal blocks 2(n+1) I,
/// correlation block |2 lambda - 1|(n+1) diag(1, -1) (gaussian = false).
StateRecord bell_mixture_cm(int n, double lambda);

/// Ladder-operator second moments of a zero-mean state with covariance sigma:
/// n_a = (sigma_11 + sigma_22 - 2)/4, <ab> = (sigma_13 - sigma_24
/// + i(sigma_14 + sigma_23))/4 (indices 1-based in xpxp ordering).
SecondMoments moments_from_cm(const CovarianceMatrix& sigma);

} // namespace cvergo
