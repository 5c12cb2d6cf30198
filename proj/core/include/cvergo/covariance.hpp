#pragma once

// Two-mode covariance matrices and their symplectic spectral analysis.
//
// Conventions (fixed throughout the library):
//   * quadrature ordering xpxp: r = (x_A, p_A, x_B, p_B)
//   * entries are symmetrized second moments, dimensionless, vacuum = identity
//   * the symplectic form is Omega = [[J, 0], [0, J]], J = [[0, 1], [-1, 0]]
//   * a state is physical iff both symplectic eigenvalues are >= 1 (up to
//     tolerance), the two-mode uncertainty relation.

#include <Eigen/Dense>

#include "cvergo/errors.hpp"

namespace cvergo {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPhysicalTol = 1e-9;
inline constexpr double kSymplecticTol = 1e-10;

/// 4x4 real symmetric covariance matrix in xpxp ordering.
///
/// Construction validates symmetry (|m - m^T| <= 1e-12 entrywise) and stores
/// the exactly-symmetrized matrix. Physicality is *not* enforced here;
/// check_physical() reports it and spectral routines require it.
class CovarianceMatrix {
public:
  explicit CovarianceMatrix(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  Mat2 block_a() const { return m_.topLeftCorner<2, 2>(); }
  Mat2 block_b() const { return m_.bottomRightCorner<2, 2>(); }
  Mat2 block_c() const { return m_.topRightCorner<2, 2>(); }

  double det_a() const { return block_a().determinant(); }
  double det_b() const { return block_b().determinant(); }
  double det_c() const { return block_c().determinant(); }
  double det() const { return m_.determinant(); }

  static CovarianceMatrix identity() { return CovarianceMatrix(Mat4::Identity()); }

private:
  Mat4 m_;
};

/// Symplectic eigenvalues nu_plus >= nu_minus plus the Gamma invariant
/// (Gamma = det sigma_A + det sigma_B + 2 det sigma_AB) they came from.
struct SymplecticSpectrum {
  double nu_plus = 1.0;
  double nu_minus = 1.0;
  double gamma_invariant = 2.0;

  double sum() const { return nu_plus + nu_minus; }
};

/// Result of the uncertainty-relation check.
struct PhysicalityReport {
  bool is_physical = true;
  double nu_minus = 1.0;
  /// max(0, 1 - nu_minus): how far below the vacuum floor the state sits.
  double worst_violation = 0.0;
};

/// Standard-form invariants (a, b, c1, c2) of a two-mode covariance matrix:
/// diagonal blocks a*I and b*I, correlation block diag(c1, c2), c1 >= |c2|.
struct StandardFormParams {
  double a = 1.0;
  double b = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// The fixed two-mode symplectic form in xpxp ordering.
const Mat4& symplectic_form();

/// Symplectic eigenvalues of a two-mode covariance matrix.
///
/// Mathematically nu_pm^2 = (Gamma ± sqrt(Gamma^2 - 4 det sigma))/2; computed
/// here through the equivalent, numerically stable combinations
/// nu_plus + nu_minus = sqrt(Gamma + 2 sqrt(det sigma)) and
/// nu_plus - nu_minus = sqrt(Gamma - 2 sqrt(det sigma)), with the difference
/// snapped to zero when it falls below the floating-point resolution floor
/// (degenerate pairs and pure states then come out exact).
///
/// Throws NonPhysicalError if det sigma < 0 or the spectrum would be complex
/// beyond tolerance.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma);

/// Uncertainty-relation check: physical iff nu_minus >= 1 - 1e-9.
PhysicalityReport check_physical(const CovarianceMatrix& sigma);

/// Standard-form reduction via the four local symplectic invariants
/// (det sigma_A, det sigma_B, det sigma_AB, det sigma); no iteration.
/// Requires a physical input; throws NonPhysicalError / DegenerateBlockError.
StandardFormParams standard_form(const CovarianceMatrix& sigma);

/// Assemble the covariance matrix diag-blocks(a*I, b*I) + corr diag(c1, c2).
CovarianceMatrix standard_form_matrix(const StandardFormParams& p);

/// True iff S preserves the symplectic form: |S Omega S^T - Omega| <= 1e-10.
bool is_symplectic(const Mat4& S, double tol = kSymplecticTol);

/// Congruence transform sigma -> S sigma S^T.
/// Throws NotSymplecticError if S fails is_symplectic().
CovarianceMatrix apply_symplectic(const Mat4& S, const CovarianceMatrix& sigma);

} // namespace cvergo
