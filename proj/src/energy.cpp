#include "skew/energy.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "skew/char_poly.hpp"

namespace skew {

double skew_energy_spectral(const OrientedGraph& og) {
  const Eigen::Index n = og.order();
  if (n == 0) return 0.0;
  const Eigen::MatrixXd s = skew_adjacency<double>(og);
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  block.topRightCorner(n, n) = s;
  block.bottomLeftCorner(n, n) = s.transpose();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

namespace {

// x^-2 ln(sum_i a_{2i} x^{2i}), written to stay finite for x in [e^-150, e^150].
class CoulsonIntegrand {
 public:
  explicit CoulsonIntegrand(const SkewPolynomial& phi) {
    for (const Integer& c : phi.coefficients()) coeffs_.push_back(c.convert_to<double>());
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  }

  double operator()(double x) const {
    const double y = x * x;
    const std::size_t top = coeffs_.size() - 1;
    if (top == 0) return 0.0;
    if (y <= 1.0) {
      double tail = 0.0;
      for (std::size_t i = top; i >= 1; --i) tail = (tail + coeffs_[i]) * y;
      return std::log1p(tail) / y;
    }
    // ln(sum a_i y^i) = top ln y + ln(sum a_i y^(i - top))
    const double inv = 1.0 / y;
    double scaled = 0.0;
    for (std::size_t i = 0; i <= top; ++i) scaled = scaled * inv + coeffs_[i];
    return (static_cast<double>(top) * std::log(y) + std::log(scaled)) / y;
  }

 private:
  std::vector<double> coeffs_;
};

}  // namespace

double skew_energy_integral(const SkewPolynomial& phi, double abs_tol) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
  const CoulsonIntegrand f(phi);
  constexpr double pi = std::numbers::pi;
  constexpr double half_width = 4.5;
  constexpr int max_levels = 14;

  // t = 1/(1 + exp(-pi sinh s)) maps s in R onto (0, 1) and makes
  // x = t/(1-t) = exp(pi sinh s); dx = x pi cosh s ds.
  auto term = [&](double s) {
    const double x = std::exp(pi * std::sinh(s));
    return f(x) * x * pi * std::cosh(s);
  };

  long panels = 18;
  double h = 2 * half_width / static_cast<double>(panels);
  double sum = 0.0;
  for (long k = 0; k <= panels; ++k) sum += term(-half_width + static_cast<double>(k) * h);
  double previous = sum * h;
  double error = 0.0;
  for (int level = 1; level <= max_levels; ++level) {
    // Halving h adds the midpoints of the current panels.
    for (long k = 0; k < panels; ++k) sum += term(-half_width + (static_cast<double>(k) + 0.5) * h);
    panels *= 2;
    h /= 2;
    const double current = sum * h;
    error = std::abs(current - previous) * 2.0 / pi;
    if (level >= 3 && error < abs_tol / 2) return current * 2.0 / pi;
    previous = current;
  }
  throw QuadratureError("skew energy quadrature did not converge (estimate " + std::to_string(previous * 2.0 / pi) +
                            ", error estimate " + std::to_string(error) + ")",
                        previous * 2.0 / pi, error);
}

double skew_energy_integral(const OrientedGraph& og, double abs_tol) {
  return skew_energy_integral(char_poly_expansion(og), abs_tol);
}

}  // namespace skew
