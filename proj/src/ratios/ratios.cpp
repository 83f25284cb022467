#include "mvlab/ratios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mvlab/kernels.hpp"

namespace mvlab {
namespace {

Comparison lower(std::string name, BoundKind kind, double value, double bound) {
  Comparison c{std::move(name), kind, bound, value, value - bound, CheckStatus::Ok};
  if (kind == BoundKind::Proven && c.margin < -kProvenSlack) c.status = CheckStatus::NumericalAnomaly;
  if (kind == BoundKind::Conjectured && c.margin < -kConjecturedSlack)
    c.status = CheckStatus::CandidateCounterexample;
  return c;
}

Comparison upper(std::string name, BoundKind kind, double value, double bound) {
  Comparison c = lower(std::move(name), kind, -value, -bound);
  c.value = value;
  c.bound = bound;
  return c;
}

}  // namespace

std::string_view check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Ok:
      return "OK";
    case CheckStatus::CandidateCounterexample:
      return "CANDIDATE_COUNTEREXAMPLE";
    case CheckStatus::NumericalAnomaly:
      return "NUMERICAL_ANOMALY";
  }
  return "UNKNOWN";
}

CheckStatus CheckOutcome::status() const {
  CheckStatus worst = CheckStatus::Ok;
  for (const auto& c : comparisons) worst = std::max(worst, c.status);
  return worst;
}

RootSet critical_points(const NormalizedPolynomial& p, const ToleranceConfig& cfg) {
  if (p.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "critical points need degree >= 2");
  RootSet roots = find_roots(derivative(p.poly()), cfg);
  require_converged(roots);
  for (const Complex z : roots.roots) {
    if (!(std::abs(z) > cfg.residual_tol))
      throw NoConvergenceError("critical point collapsed onto the origin although P'(0) = 1", roots);
  }
  return roots;
}

RatioReport ratio_report(const NormalizedPolynomial& p, const ToleranceConfig& cfg) {
  RatioReport report;
  report.degree = p.degree();
  report.critical_points = critical_points(p, cfg).roots;
  const Polynomial g = ratio_poly(p.poly());
  report.ratios.resize(report.critical_points.size());
  kernels::horner(g.coeffs(), report.critical_points, report.ratios);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -1.0;
  for (std::size_t i = 0; i < report.ratios.size(); ++i) {
    const double m = std::abs(report.ratios[i]);
    if (m < lo) {
      lo = m;
      report.argmin_index = static_cast<int>(i);
    }
    if (m > hi) {
      hi = m;
      report.argmax_index = static_cast<int>(i);
    }
  }
  report.smale_ratio = lo;
  report.dual_ratio = hi;
  return report;
}

BoundPair dual_lower_bounds(int n) {
  if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "bounds need n >= 2");
  const double nn = static_cast<double>(n);
  return {std::tan(std::numbers::pi / (4.0 * nn)) / nn, 1.0 / (nn * nn)};
}

CheckOutcome check_dual_bound(const RatioReport& report, bool odd) {
  const int n = report.degree;
  const double nn = static_cast<double>(n);
  CheckOutcome out;
  out.comparisons.push_back(lower("dual_vs_one_over_n_squared", BoundKind::Proven, report.dual_ratio,
                                  dual_lower_bounds(n).square_bound));
  out.comparisons.push_back(lower("dual_vs_one_over_n", BoundKind::Conjectured, report.dual_ratio, 1.0 / nn));
  if (odd) out.comparisons.push_back(lower("dual_vs_one_over_d_odd", BoundKind::Proven, report.dual_ratio, 1.0 / nn));
  return out;
}

CheckOutcome check_smale_upper(const RatioReport& report) {
  const double nn = static_cast<double>(report.degree);
  CheckOutcome out;
  out.comparisons.push_back(upper("smale_vs_four", BoundKind::Proven, report.smale_ratio, 4.0));
  out.comparisons.push_back(
      upper("smale_vs_one_minus_one_over_n", BoundKind::Conjectured, report.smale_ratio, 1.0 - 1.0 / nn));
  return out;
}

bool is_conservative(const RatioReport& report, double tol) {
  double spread = 0.0;
  for (std::size_t i = 0; i < report.ratios.size(); ++i)
    for (std::size_t j = i + 1; j < report.ratios.size(); ++j)
      spread = std::max(spread, std::abs(report.ratios[i] - report.ratios[j]));
  return spread <= tol * std::max(1.0, report.dual_ratio);
}

}  // namespace mvlab
