#include "skew/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skew {

SkewPolynomial::SkewPolynomial(int n, std::vector<Integer> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (coeffs_.size() != static_cast<std::size_t>(n / 2 + 1))
    throw std::invalid_argument("coefficient vector must have floor(n/2)+1 entries");
  if (coeffs_.front() != 1) throw std::invalid_argument("a_0 must be 1");
  if (std::any_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c < 0; }))
    throw std::invalid_argument("even coefficients must be nonnegative");
}

SkewPolynomial SkewPolynomial::edgeless(int n) {
  std::vector<Integer> c(n / 2 + 1, 0);
  c[0] = 1;
  return SkewPolynomial(n, std::move(c));
}

Integer SkewPolynomial::a(int i) const {
  if (i < 0 || i % 2 != 0 || i / 2 >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i / 2];
}

std::string SkewPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const int power = n_ - 2 * static_cast<int>(k);
    if (!first) out << " + ";
    first = false;
    if (coeffs_[k] != 1 || power == 0) out << coeffs_[k];
    if (power >= 1) out << 'x';
    if (power >= 2) out << '^' << power;
  }
  if (first) out << '0';
  return out.str();
}

std::string SkewPolynomial::coefficient_list() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out << (k ? ", " : "") << coeffs_[k];
  out << ']';
  return out.str();
}

SkewPolynomial disjoint_union(const SkewPolynomial& p, const SkewPolynomial& q) {
  const int n = p.order() + q.order();
  std::vector<Integer> c(n / 2 + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) c[i + j] += p.coefficients()[i] * q.coefficients()[j];
  return SkewPolynomial(n, std::move(c));
}

SkewPolynomial with_isolated(const SkewPolynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("negative isolated vertex count");
  std::vector<Integer> c(p.coefficients().begin(), p.coefficients().end());
  c.resize((p.order() + k) / 2 + 1, 0);
  return SkewPolynomial(p.order() + k, std::move(c));
}

QuasiOrder quasi_compare(const SkewPolynomial& p, const SkewPolynomial& q) {
  if (p.order() != q.order()) throw std::invalid_argument("orders differ");
  bool below = false;
  bool above = false;
  for (std::size_t k = 0; k < p.size(); ++k) {
    below |= p.coefficients()[k] < q.coefficients()[k];
    above |= p.coefficients()[k] > q.coefficients()[k];
  }
  if (below && above) return QuasiOrder::incomparable;
  if (below) return QuasiOrder::strictly_less;
  if (above) return QuasiOrder::strictly_greater;
  return QuasiOrder::equivalent;
}

bool satisfies(QuasiOrder observed, QuasiOrder claimed) {
  using enum QuasiOrder;
  switch (claimed) {
    case less_or_equivalent:
      return observed == equivalent || observed == strictly_less || observed == less_or_equivalent;
    case greater_or_equivalent:
      return observed == equivalent || observed == strictly_greater || observed == greater_or_equivalent;
    default:
      return observed == claimed;
  }
}

const char* to_string(QuasiOrder order) {
  switch (order) {
    case QuasiOrder::equivalent: return "equivalent";
    case QuasiOrder::strictly_less: return "strictly_less";
    case QuasiOrder::strictly_greater: return "strictly_greater";
    case QuasiOrder::less_or_equivalent: return "less_or_equivalent";
    case QuasiOrder::greater_or_equivalent: return "greater_or_equivalent";
    case QuasiOrder::incomparable: return "incomparable";
  }
  return "unknown";
}

nlohmann::json to_json(const SkewPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Integer& c : p.coefficients()) coeffs.push_back(c.str());
  return {{"n", p.order()}, {"coeffs", std::move(coeffs)}};
}

SkewPolynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return SkewPolynomial(j.at("n").get<int>(), std::move(coeffs));
}

}  // namespace skew
