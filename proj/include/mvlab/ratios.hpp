#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mvlab/polynomial.hpp"
#include "mvlab/rootfind.hpp"

namespace mvlab {

/// Critical points of a normalized P and the values P(zeta)/zeta there.
struct RatioReport {
  int degree = 0;
  std::vector<Complex> critical_points;  // with multiplicity
  std::vector<Complex> ratios;           // ratio_poly(P) at each critical point
  double smale_ratio = 0.0;              // S(P) = min |ratio|
  double dual_ratio = 0.0;               // D(P) = max |ratio|
  int argmin_index = 0;
  int argmax_index = 0;
};

/// The two constants of the universal dual lower bound at degree n.
struct BoundPair {
  double tan_bound = 0.0;     // (1/n) tan(pi / (4n))
  double square_bound = 0.0;  // 1 / n^2
};

enum class BoundKind { Proven, Conjectured };
enum class CheckStatus { Ok, CandidateCounterexample, NumericalAnomaly };

std::string_view check_status_name(CheckStatus status);

struct Comparison {
  std::string name;
  BoundKind kind = BoundKind::Proven;
  double bound = 0.0;
  double value = 0.0;
  double margin = 0.0;  // positive when the bound holds
  CheckStatus status = CheckStatus::Ok;
};

struct CheckOutcome {
  std::vector<Comparison> comparisons;
  /// Worst status over all comparisons (NumericalAnomaly dominates).
  CheckStatus status() const;
};

/// A proven bound may be missed by at most this much before it is called a
/// numerical anomaly.
inline constexpr double kProvenSlack = 1e-7;
/// Conjectured bounds are compared with this much room for round-off.
inline constexpr double kConjecturedSlack = 1e-9;

/// Roots of P'. Throws NoConvergenceError; asserts no critical point sits
/// at the origin (P'(0) = 1).
RootSet critical_points(const NormalizedPolynomial& p, const ToleranceConfig& cfg = {});

RatioReport ratio_report(const NormalizedPolynomial& p, const ToleranceConfig& cfg = {});

/// Throws DegreeTooSmall for n < 2.
BoundPair dual_lower_bounds(int n);

/// D(P) against 1/n^2 (proven), 1/n (conjectured) and, for odd P, 1/d
/// (proven).
CheckOutcome check_dual_bound(const RatioReport& report, bool odd);

/// S(P) against 4 (proven) and 1 - 1/n (conjectured).
CheckOutcome check_smale_upper(const RatioReport& report);

/// All critical values P(zeta)/zeta agree: max pairwise distance
/// <= tol * max(1, D(P)).
bool is_conservative(const RatioReport& report, double tol);

}  // namespace mvlab
