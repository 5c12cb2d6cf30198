#include "cvergo/covariance.hpp"

#include <algorithm>
#include <cmath>

namespace cvergo {

namespace {

// Relative floor below which (nu_plus - nu_minus)^2 cannot be distinguished
// from rounding noise in Gamma - 2 sqrt(det sigma); see symplectic_eigenvalues.
constexpr double kDegeneracyFloor = 4e-14;

} // namespace

CovarianceMatrix::CovarianceMatrix(const Mat4& m) {
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= kSymmetryTol)) {
    throw InvalidParamsError("covariance matrix not symmetric (max |m - m^T| = " +
                             std::to_string(asym) + ")");
  }
  m_ = 0.5 * (m + m.transpose());
}

const Mat4& symplectic_form() {
  static const Mat4 omega = [] {
    Mat4 w = Mat4::Zero();
    w(0, 1) = 1.0;
    w(1, 0) = -1.0;
    w(2, 3) = 1.0;
    w(3, 2) = -1.0;
    return w;
  }();
  return omega;
}

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma) {
  const double gamma = sigma.det_a() + sigma.det_b() + 2.0 * sigma.det_c();
  const double det = sigma.det();
  if (det < -kPhysicalTol) {
    throw NonPhysicalError("det sigma < 0: no real symplectic spectrum");
  }
  const double sqrt_det = std::sqrt(std::max(det, 0.0));

  // nu+ + nu- and nu+ - nu- are the well-conditioned combinations:
  // (nu+ ± nu-)^2 = Gamma ± 2 sqrt(det sigma).
  const double sum_sq = gamma + 2.0 * sqrt_det;
  if (sum_sq <= 0.0) {
    throw NonPhysicalError("Gamma + 2 sqrt(det sigma) <= 0: complex spectrum");
  }
  double diff_sq = gamma - 2.0 * sqrt_det;
  if (diff_sq < -kPhysicalTol * std::max(1.0, sum_sq)) {
    throw NonPhysicalError("Gamma^2 < 4 det sigma beyond tolerance: complex spectrum");
  }
  if (diff_sq < kDegeneracyFloor * sum_sq) diff_sq = 0.0; // degenerate pair
  const double s_sum = std::sqrt(sum_sq);
  const double s_diff = std::sqrt(diff_sq);

  SymplecticSpectrum out;
  out.nu_plus = 0.5 * (s_sum + s_diff);
  out.nu_minus = 0.5 * (s_sum - s_diff);
  out.gamma_invariant = gamma;
  if (out.nu_minus <= 0.0) {
    throw NonPhysicalError("non-positive symplectic eigenvalue");
  }
  return out;
}

PhysicalityReport check_physical(const CovarianceMatrix& sigma) {
  PhysicalityReport report;
  try {
    const SymplecticSpectrum s = symplectic_eigenvalues(sigma);
    report.nu_minus = s.nu_minus;
    report.worst_violation = std::max(0.0, 1.0 - s.nu_minus);
    report.is_physical = s.nu_minus >= 1.0 - kPhysicalTol;
  } catch (const NonPhysicalError&) {
    report.is_physical = false;
    report.nu_minus = 0.0;
    report.worst_violation = 1.0;
  }
  return report;
}

StandardFormParams standard_form(const CovarianceMatrix& sigma) {
  const PhysicalityReport phys = check_physical(sigma);
  if (!phys.is_physical) {
    throw NonPhysicalError("standard_form requires a physical state (nu_minus = " +
                           std::to_string(phys.nu_minus) + ")");
  }

  StandardFormParams p;
  p.a = std::sqrt(std::max(sigma.det_a(), 0.0));
  p.b = std::sqrt(std::max(sigma.det_b(), 0.0));
  const double ab = p.a * p.b;
  if (ab <= 0.0) {
    throw DegenerateBlockError("vanishing diagonal block determinant");
  }

  // c1^2 and c2^2 are the roots of t^2 - s t + (det C)^2 = 0 with
  // s = c1^2 + c2^2 = (a^2 b^2 + (det C)^2 - det sigma) / (a b).
  const double det_c = sigma.det_c();
  const double s = (p.a * p.a * p.b * p.b + det_c * det_c - sigma.det()) / ab;
  const double s_clamped = std::max(s, 0.0);
  double disc = s_clamped * s_clamped - 4.0 * det_c * det_c;
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  const double big = 0.5 * (s_clamped + root);
  // Evaluate the small root via the product to dodge cancellation.
  const double small = big > 0.0 ? (det_c * det_c) / big : 0.0;

  p.c1 = std::sqrt(std::max(big, 0.0));
  const double c2_mag = std::sqrt(std::max(small, 0.0));
  p.c2 = det_c < 0.0 ? -c2_mag : c2_mag;
  return p;
}

CovarianceMatrix standard_form_matrix(const StandardFormParams& p) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = p.a;
  m(2, 2) = m(3, 3) = p.b;
  m(0, 2) = m(2, 0) = p.c1;
  m(1, 3) = m(3, 1) = p.c2;
  return CovarianceMatrix(m);
}

bool is_symplectic(const Mat4& S, double tol) {
  const Mat4& omega = symplectic_form();
  return (S * omega * S.transpose() - omega).cwiseAbs().maxCoeff() <= tol;
}

CovarianceMatrix apply_symplectic(const Mat4& S, const CovarianceMatrix& sigma) {
  if (!is_symplectic(S)) {
    throw NotSymplecticError("matrix does not preserve the symplectic form");
  }
  const Mat4 out = S * sigma.matrix() * S.transpose();
  // Symmetrize before the constructor's check: the product of well-scaled
  // symmetric factors can pick up O(eps * |S|^2) asymmetry.
  return CovarianceMatrix(0.5 * (out + out.transpose()));
}

} // namespace cvergo
