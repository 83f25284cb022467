#pragma once

#include "mvlab/polynomial.hpp"
#include "mvlab/rootfind.hpp"

namespace mvlab {

/// Witness that a k-fold symmetric normalized P = z Q(z^k) of degree d has a
/// critical point c with |P(c)/c| >= d^(-2/k).
///
/// w is a root of R(u) = Q(u) + k u Q'(u), the factor of H'(u) = Q^(k-1) R
/// for H(u) = u Q(u)^k whose roots are not zeros of H. Every k-th root c of
/// w is then a critical point of P with P(c)/c = Q(w).
struct OddCertificate {
  int k = 2;
  int degree = 0;
  Polynomial q;
  Complex w;
  Complex c;  // principal k-th root of w, arg in [0, 2 pi / k)
  double q_abs = 0.0;
  double bound = 0.0;
  double residual_R = 0.0;       // relative_residual(R, w)
  double residual_Pprime = 0.0;  // relative_residual(P', c)
};

/// Amount by which q_abs may undershoot the bound before the pipeline gives
/// up on its numerics.
inline constexpr double kGuaranteeSlack = 1e-9;

class GuaranteeViolatedError : public Error {
 public:
  GuaranteeViolatedError(const std::string& message, OddCertificate cert)
      : Error(ErrorCode::GuaranteeViolated, message), cert_(std::move(cert)) {}
  const OddCertificate& certificate() const noexcept { return cert_; }

 private:
  OddCertificate cert_;
};

/// Largest k >= 1 with P(lambda z) = lambda P(z) for a primitive k-th root of
/// unity lambda: the gcd of j - 1 over the nonzero coefficients c_j, j >= 2.
int detect_symmetry(const NormalizedPolynomial& p);

/// d^(-2/k); exactly 1/d for k = 2.
double symmetric_bound(int degree, int k);

OddCertificate certify_symmetric(const NormalizedPolynomial& p, int k, const ToleranceConfig& cfg = {});

/// certify_symmetric with k = 2.
OddCertificate certify_odd(const NormalizedPolynomial& p, const ToleranceConfig& cfg = {});

/// Empirical comparison of D(P) with 1/sqrt(d) for odd P. Recorded, never
/// judged.
struct RemarkReport {
  int degree = 0;
  double dual_ratio = 0.0;
  double remark_bound = 0.0;
  double margin = 0.0;
};

RemarkReport remark_check(const NormalizedPolynomial& p, const ToleranceConfig& cfg = {});

}  // namespace mvlab
