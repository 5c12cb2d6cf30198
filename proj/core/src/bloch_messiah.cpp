#include "cvergo/bloch_messiah.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cvergo {

void BlochMessiahParams::validate() const {
  if (!(k - std::abs(gamma) >= 1.0 - 1e-12)) {
    throw InvalidParamsError("Bloch-Messiah params need k - |gamma| >= 1, got k = " +
                             std::to_string(k) + ", gamma = " + std::to_string(gamma));
  }
  if (!(z_a > 0.0) || !(z_b > 0.0)) {
    throw InvalidParamsError("squeezing factors z_a, z_b must be positive");
  }
  if (!(theta >= -1e-12 && theta <= std::numbers::pi / 2 + 1e-12)) {
    throw InvalidParamsError("beam-splitter angle theta must lie in [0, pi/2]");
  }
}

Mat4 thermal_core(double k_a, double k_b) {
  Mat4 v = Mat4::Zero();
  v(0, 0) = v(1, 1) = k_a;
  v(2, 2) = v(3, 3) = k_b;
  return v;
}

Mat4 squeezer(double z_a, double z_b) {
  Mat4 s = Mat4::Zero();
  const double ra = std::sqrt(z_a);
  const double rb = std::sqrt(z_b);
  s(0, 0) = ra;
  s(1, 1) = 1.0 / ra;
  s(2, 2) = rb;
  s(3, 3) = 1.0 / rb;
  return s;
}

Mat4 beam_splitter(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat4 b = Mat4::Zero();
  b(0, 0) = c;
  b(0, 2) = s;
  b(1, 1) = c;
  b(1, 3) = s;
  b(2, 0) = -s;
  b(2, 2) = c;
  b(3, 1) = -s;
  b(3, 3) = c;
  return b;
}

Mat4 phase_rotation(double phi_a, double phi_b) {
  Mat4 p = Mat4::Zero();
  const double ca = std::cos(phi_a);
  const double sa = std::sin(phi_a);
  const double cb = std::cos(phi_b);
  const double sb = std::sin(phi_b);
  p(0, 0) = ca;
  p(0, 1) = sa;
  p(1, 0) = -sa;
  p(1, 1) = ca;
  p(2, 2) = cb;
  p(2, 3) = sb;
  p(3, 2) = -sb;
  p(3, 3) = cb;
  return p;
}

Mat4 local_squeezer(double r_a, double r_b) {
  if (!(r_a > 0.0) || !(r_b > 0.0)) {
    throw InvalidParamsError("local squeezing strengths must be positive");
  }
  Mat4 s = Mat4::Zero();
  s(0, 0) = r_a;
  s(1, 1) = 1.0 / r_a;
  s(2, 2) = r_b;
  s(3, 3) = 1.0 / r_b;
  return s;
}

CovarianceMatrix compose_bloch_messiah(const BlochMessiahParams& params) {
  params.validate();
  const Mat4 v = thermal_core(params.k_a(), params.k_b());
  const Mat4 s = squeezer(params.z_a, params.z_b);
  const Mat4 b = beam_splitter(params.theta);
  const Mat4 p = phase_rotation(params.phi_a, params.phi_b);
  const Mat4 core = s * v * s.transpose();
  const Mat4 m = p * b * core * b.transpose() * p.transpose();
  return CovarianceMatrix(0.5 * (m + m.transpose()));
}

std::pair<double, double> optimal_local_squeezings(const BlochMessiahParams& params) {
  params.validate();
  const double c2 = std::cos(params.theta) * std::cos(params.theta);
  const double s2 = std::sin(params.theta) * std::sin(params.theta);
  const double ka = params.k_a();
  const double kb = params.k_b();
  const double za = params.z_a;
  const double zb = params.z_b;

  // Ratios of the p- to x-variance of each mode of the phase-free
  // composition; the fourth roots equalize them.
  const double ratio_a = (c2 * ka / za + s2 * kb / zb) / (c2 * ka * za + s2 * kb * zb);
  const double ratio_b = (s2 * ka / za + c2 * kb / zb) / (s2 * ka * za + c2 * kb * zb);
  return {std::pow(ratio_a, 0.25), std::pow(ratio_b, 0.25)};
}

} // namespace cvergo
