#include "mvlab/oddcert.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "mvlab/ratios.hpp"

namespace mvlab {
namespace {

Complex principal_root(Complex w, int k) {
  double theta = std::arg(w);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  const double modulus = k == 2 ? std::sqrt(std::abs(w)) : std::pow(std::abs(w), 1.0 / k);
  return std::polar(modulus, theta / k);
}

// Larger |Q(w)| wins; near-ties go to the smaller |w|, then the smaller
// argument.
bool better_witness(double qa, Complex w, double best_qa, Complex best_w) {
  const double tie = 1e-12 * std::max(1.0, best_qa);
  if (qa > best_qa + tie) return true;
  if (qa < best_qa - tie) return false;
  if (std::abs(w) != std::abs(best_w)) return std::abs(w) < std::abs(best_w);
  return std::arg(w) < std::arg(best_w);
}

}  // namespace

int detect_symmetry(const NormalizedPolynomial& p) {
  if (p.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "symmetry detection needs degree >= 2");
  const double tol = kRelativeZero * p.poly().scale();
  int g = 0;
  for (int j = 2; j <= p.degree(); ++j)
    if (std::abs(p.poly()[j]) > tol) g = std::gcd(g, j - 1);
  return std::max(g, 1);
}

double symmetric_bound(int degree, int k) {
  const double d = static_cast<double>(degree);
  return k == 2 ? 1.0 / d : std::pow(d, -2.0 / k);
}

OddCertificate certify_symmetric(const NormalizedPolynomial& p, int k, const ToleranceConfig& cfg) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "symmetry order k must be >= 2");
  if (p.degree() < 3) throw Error(ErrorCode::DegreeTooSmall, "certification needs degree >= 3");

  OddCertificate cert;
  cert.k = k;
  cert.degree = p.degree();
  cert.q = decompose_symmetric(p, k);
  const Polynomial r = build_R(cert.q, k);
  const RootSet roots = find_roots(r, cfg);
  require_converged(roots);

  bool first = true;
  for (const Complex w : roots.roots) {
    const double qa = std::abs(evaluate(cert.q, w));
    if (first || better_witness(qa, w, cert.q_abs, cert.w)) {
      cert.w = w;
      cert.q_abs = qa;
      first = false;
    }
  }
  cert.bound = symmetric_bound(cert.degree, k);
  cert.c = principal_root(cert.w, k);
  cert.residual_R = relative_residual(r, cert.w);
  cert.residual_Pprime = relative_residual(derivative(p.poly()), cert.c);

  if (cert.q_abs < cert.bound - kGuaranteeSlack)
    throw GuaranteeViolatedError("|Q(w)| below d^(-2/k) at the selected root of R", cert);
  return cert;
}

OddCertificate certify_odd(const NormalizedPolynomial& p, const ToleranceConfig& cfg) {
  return certify_symmetric(p, 2, cfg);
}

RemarkReport remark_check(const NormalizedPolynomial& p, const ToleranceConfig& cfg) {
  if (p.degree() < 3) throw Error(ErrorCode::DegreeTooSmall, "the odd remark needs degree >= 3");
  decompose_symmetric(p, 2);  // rejects non-odd input
  const RatioReport report = ratio_report(p, cfg);
  RemarkReport out;
  out.degree = p.degree();
  out.dual_ratio = report.dual_ratio;
  out.remark_bound = 1.0 / std::sqrt(static_cast<double>(p.degree()));
  out.margin = out.dual_ratio - out.remark_bound;
  return out;
}

}  // namespace mvlab
