#include "cvergo/correlations.hpp"

#include <cmath>
#include <string>

namespace cvergo {

namespace {

constexpr double kPureCutoff = 1e-12;

double log2_safe(double x) { return std::log2(x); }

// d h / d x = (1/2) log2((x+1)/(x-1)), valid for x > 1.
double entropy_h_prime(double x) {
  return 0.5 * log2_safe((x + 1.0) / (x - 1.0));
}

double reg_equal_freq(double a, double b, double np, double nm) {
  return (a + b - np - nm) / (np + nm - 2.0);
}

double qmi_of_invariants(double a, double b, double np, double nm) {
  return entropy_h(a) + entropy_h(b) - entropy_h(np) - entropy_h(nm);
}

} // namespace

double entropy_h(double x) {
  if (x < 1.0 - kPhysicalTol) {
    throw DomainError("entropy_h requires x >= 1, got " + std::to_string(x));
  }
  if (x - 1.0 < kPureCutoff) return 0.0;
  const double p = 0.5 * (x + 1.0);
  const double m = 0.5 * (x - 1.0);
  return p * log2_safe(p) - m * log2_safe(m);
}

double mutual_information(const CovarianceMatrix& sigma) {
  const PhysicalityReport phys = check_physical(sigma);
  if (!phys.is_physical) {
    throw NonPhysicalError("mutual_information requires a physical state");
  }
  const double a = std::sqrt(std::max(sigma.det_a(), 1.0));
  const double b = std::sqrt(std::max(sigma.det_b(), 1.0));
  const SymplecticSpectrum nu = symplectic_eigenvalues(sigma);
  return entropy_h(a) + entropy_h(b) - entropy_h(nu.nu_plus) - entropy_h(nu.nu_minus);
}

double monotone_map_f(double x, double gamma_coef) {
  if (!(x >= 0.0)) throw DomainError("monotone_map_f requires x >= 0");
  if (!(gamma_coef > 0.0)) throw DomainError("gamma_coef must be positive");
  // f(x) = 2 h(gamma_coef * x + 1): the pure-state QMI at gap x.
  return 2.0 * entropy_h(gamma_coef * x + 1.0);
}

double conditional_entropy_witness(double k, double tau) {
  if (!(k >= 1.0)) throw DomainError("conditional_entropy_witness requires k >= 1");
  if (!(tau >= 1.0)) throw DomainError("conditional_entropy_witness requires tau >= 1");
  return 2.0 * entropy_h(k) - entropy_h(k * tau);
}

double tau_of(double theta, double z_a, double z_b) {
  if (!(z_a > 0.0) || !(z_b > 0.0)) {
    throw DomainError("tau_of requires positive squeezing factors");
  }
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double zr = (z_a * z_a + z_b * z_b) / (z_a * z_b);
  return std::sqrt(c2 * c2 + s2 * s2 + c2 * s2 * zr);
}

CorrelationReport correlation_report(const CovarianceMatrix& sigma) {
  CorrelationReport report;
  report.qmi = mutual_information(sigma);
  const SymplecticSpectrum nu = symplectic_eigenvalues(sigma);
  const double k = 0.5 * (nu.nu_plus + nu.nu_minus);
  const double a = std::sqrt(std::max(sigma.det_a(), 1.0));
  report.tau = std::max(a / k, 1.0);
  report.conditional_entropy = 2.0 * entropy_h(k) - entropy_h(k * report.tau);
  return report;
}

IndependenceEvidence jacobian_independence(double a, double b, double nu_plus,
                                           double nu_minus) {
  for (double x : {a, b, nu_plus, nu_minus}) {
    if (!(x > 1.0)) {
      throw DomainError("jacobian_independence requires all arguments > 1");
    }
  }

  IndependenceEvidence out;
  out.degenerate = std::abs(a - b) <= 1e-12;

  const double d = nu_plus + nu_minus - 2.0;
  // Analytic gradients with respect to (a, b, nu_plus, nu_minus).
  const std::array<double, 4> grad_reg = {
      1.0 / d, 1.0 / d, (2.0 - a - b) / (d * d), (2.0 - a - b) / (d * d)};
  const std::array<double, 4> grad_qmi = {entropy_h_prime(a), entropy_h_prime(b),
                                          -entropy_h_prime(nu_plus),
                                          -entropy_h_prime(nu_minus)};

  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                       {1, 2}, {1, 3}, {2, 3}};
  for (int p = 0; p < 6; ++p) {
    const int i = kPairs[p][0];
    const int j = kPairs[p][1];
    out.minors[p] = grad_reg[i] * grad_qmi[j] - grad_reg[j] * grad_qmi[i];
    out.max_abs_minor = std::max(out.max_abs_minor, std::abs(out.minors[p]));
  }

  // Central finite differences, step 1e-6, on both scalar maps.
  const double h = 1e-6;
  std::array<double, 4> x = {a, b, nu_plus, nu_minus};
  for (int i = 0; i < 4; ++i) {
    std::array<double, 4> up = x;
    std::array<double, 4> dn = x;
    up[i] += h;
    dn[i] -= h;
    const double fd_reg = (reg_equal_freq(up[0], up[1], up[2], up[3]) -
                           reg_equal_freq(dn[0], dn[1], dn[2], dn[3])) /
                          (2.0 * h);
    const double fd_qmi = (qmi_of_invariants(up[0], up[1], up[2], up[3]) -
                           qmi_of_invariants(dn[0], dn[1], dn[2], dn[3])) /
                          (2.0 * h);
    out.fd_max_rel_err =
        std::max(out.fd_max_rel_err, std::abs(fd_reg - grad_reg[i]) / std::abs(grad_reg[i]));
    out.fd_max_rel_err =
        std::max(out.fd_max_rel_err, std::abs(fd_qmi - grad_qmi[i]) / std::abs(grad_qmi[i]));
  }
  return out;
}

} // namespace cvergo
