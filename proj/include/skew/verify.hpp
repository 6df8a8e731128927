#pragma once

// Exhaustive checks of the minimality theorems and the supporting lemmas at
// small orders.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skew/graph.hpp"
#include "skew/polynomial.hpp"

namespace skew {

enum class Status { verified, counterexample, skipped };

const char* to_string(Status status);

/// A graph worth looking at: an extremal competitor or a violation.
struct Witness {
  std::string role;
  std::string graph6;
  std::string arcs;
  std::optional<SkewPolynomial> polynomial;
  std::optional<double> energy;
  std::string note;
};

struct VerificationReport {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  Status status = Status::skipped;
  std::vector<Witness> witnesses;
  std::uint64_t graphs = 0;
  std::uint64_t orientation_classes = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t violations = 0;
  /// Claim-specific extras (reference polynomial, coefficient minima, ...).
  nlohmann::json details = nlohmann::json::object();
  double wall_seconds = 0.0;
};

nlohmann::json to_json(const Witness& w);
/// Keys come out sorted, so two runs differ only in "wall_seconds".
nlohmann::json to_json(const VerificationReport& r);

/// Every orientation class of every G in B(n,d), except (B_{n,d}, all cycles
/// evenly oriented), is strictly above B^{-,-,-}_{n,d} coefficientwise and in
/// energy by more than 1e-9. details["coefficient_minima"] holds the smallest
/// a_{2i} over all competitors. 6 <= n <= 10 and 3 <= d <= n - 3, otherwise
/// std::invalid_argument.
VerificationReport verify_minimality(int n, int d);

/// One report per lemma, claims "lemma-2.4" ... "lemma-2.14", "lemma-3.1" ...
/// "lemma-3.3", each over its domain restricted to n <= max_n.
/// 6 <= max_n <= 10, otherwise std::invalid_argument.
std::vector<VerificationReport> check_lemmas(int max_n);

/// The exact identity behind U^-_{n,d} >= T_{n,d}:
/// a_{2i}(U^-_{n,d}) = a_{2i}(T_{n,d}) + a_{2i-2}(P_{d-3} u S_{n-d-1}),
/// for 5 <= n <= max_n and 3 <= d <= n - 2.
VerificationReport check_u_t_identity(int max_n);

}  // namespace skew
