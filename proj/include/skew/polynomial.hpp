#pragma once

// The skew characteristic polynomial phi(x) = sum_i a_{2i} x^{n-2i} with exact
// integer coefficients, and the coefficientwise quasi-order on it.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace skew {

using Integer = boost::multiprecision::cpp_int;

class SkewPolynomial {
 public:
  /// coeffs = (a_0, a_2, ..., a_{2 floor(n/2)}). Throws std::invalid_argument
  /// unless the length is floor(n/2) + 1, a_0 = 1 and every coefficient is >= 0.
  SkewPolynomial(int n, std::vector<Integer> coeffs);

  /// phi of the edgeless graph on n vertices, x^n.
  static SkewPolynomial edgeless(int n);

  int order() const { return n_; }
  std::span<const Integer> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// a_i for any i >= 0; zero for odd i and for i > n.
  Integer a(int i) const;

  /// "x^7 + 8x^5 + 7x^3"
  std::string to_string() const;
  /// "[1, 8, 7, 0]"
  std::string coefficient_list() const;

  bool operator==(const SkewPolynomial&) const = default;

 private:
  int n_;
  std::vector<Integer> coeffs_;
};

/// phi(G u H) = phi(G) phi(H): convolution of the even-coefficient sequences.
SkewPolynomial disjoint_union(const SkewPolynomial& p, const SkewPolynomial& q);

/// phi(G u kK_1) = x^k phi(G): same coefficients, order n + k.
SkewPolynomial with_isolated(const SkewPolynomial& p, int k);

/// Coefficientwise comparison of p against q.
///
/// quasi_compare() only ever returns equivalent, strictly_less,
/// strictly_greater or incomparable. The two weak values describe claimed
/// relations (p <= q, p >= q) and are checked with satisfies().
enum class QuasiOrder {
  equivalent,
  strictly_less,
  strictly_greater,
  less_or_equivalent,
  greater_or_equivalent,
  incomparable,
};

/// Throws std::invalid_argument("orders differ") when p.order() != q.order().
QuasiOrder quasi_compare(const SkewPolynomial& p, const SkewPolynomial& q);

/// Whether an observed comparison result is consistent with a claimed relation.
bool satisfies(QuasiOrder observed, QuasiOrder claimed);

const char* to_string(QuasiOrder order);

/// {"n": 7, "coeffs": ["1", "8", "7", "0"]}
nlohmann::json to_json(const SkewPolynomial& p);
SkewPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace skew
