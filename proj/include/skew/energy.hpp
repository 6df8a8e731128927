#pragma once

// Skew energy E_s = sum |lambda_i| over the eigenvalues of S(G^sigma), by a
// dense symmetric eigensolve and by the integral over the coefficients.

#include <stdexcept>
#include <string>

#include "skew/graph.hpp"
#include "skew/polynomial.hpp"

namespace skew {

/// Sum of singular values of S. The eigenvalues of the real symmetric
/// matrix [[0, S], [S^T, 0]] are +-sigma_i, so the energy is half the sum of
/// their absolute values.
double skew_energy_spectral(const OrientedGraph& og);

/// Raised when the quadrature does not meet its tolerance within the level budget.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}
  double estimate() const { return estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// (2/pi) * int_0^inf x^-2 ln(sum_i a_{2i} x^{2i}) dx, evaluated with
/// x = t/(1-t) and double-exponential panel spacing in t; the panel count
/// doubles until successive estimates differ by less than abs_tol / 2.
/// Throws std::invalid_argument for abs_tol <= 0, QuadratureError on failure.
double skew_energy_integral(const SkewPolynomial& phi, double abs_tol);
/// Uses char_poly_expansion for the coefficients.
double skew_energy_integral(const OrientedGraph& og, double abs_tol);

}  // namespace skew
