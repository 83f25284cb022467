#include "mvlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mvlab/kernels.hpp"

namespace mvlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite:
      return "NonFinite";
    case ErrorCode::NonzeroConstantTerm:
      return "NonzeroConstantTerm";
    case ErrorCode::NotNormalized:
      return "NotNormalized";
    case ErrorCode::CriticalBasepoint:
      return "CriticalBasepoint";
    case ErrorCode::NotSymmetric:
      return "NotSymmetric";
    case ErrorCode::DegreeMismatch:
      return "DegreeMismatch";
    case ErrorCode::DegreeTooSmall:
      return "DegreeTooSmall";
    case ErrorCode::DegreeTooHigh:
      return "DegreeTooHigh";
    case ErrorCode::NoConvergence:
      return "NoConvergence";
    case ErrorCode::DerivativeVanished:
      return "DerivativeVanished";
    case ErrorCode::GuaranteeViolated:
      return "GuaranteeViolated";
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::ParseError:
      return "ParseError";
  }
  return "Unknown";
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace {

double max_abs(std::span<const Complex> cs) {
  double m = 0.0;
  for (const auto& c : cs) m = std::max(m, std::abs(c));
  return m;
}

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw Error(ErrorCode::NonFinite, std::string(what) + " is not finite");
}

}  // namespace

Polynomial::Polynomial() : coeffs_{Complex{}} {}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_finite(c, "coefficient");
  const double m = max_abs(coeffs_);
  if (m == 0.0) {
    coeffs_.assign(1, Complex{});
    return;
  }
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= kRelativeZero * m) coeffs_.pop_back();
}

double Polynomial::scale() const noexcept { return max_abs(coeffs_); }

NormalizedPolynomial NormalizedPolynomial::from(Polynomial p) {
  if (p.degree() < 1) throw Error(ErrorCode::NotNormalized, "a normalized polynomial has degree >= 1");
  const double tol = kRelativeZero * p.scale();
  if (std::abs(p[0]) > tol)
    throw Error(ErrorCode::NonzeroConstantTerm, "P(0) must be 0; re-base with normalize_at");
  if (std::abs(p[1] - Complex{1.0, 0.0}) > tol)
    throw Error(ErrorCode::NotNormalized, "P'(0) must be 1; re-base with normalize_at");
  std::vector<Complex> cs(p.coeffs().begin(), p.coeffs().end());
  cs[0] = Complex{0.0, 0.0};
  cs[1] = Complex{1.0, 0.0};
  return NormalizedPolynomial(Polynomial(std::move(cs)));
}

Complex evaluate(const Polynomial& p, Complex z) {
  require_finite(z, "evaluation point");
  Complex out;
  kernels::scalar::horner(p.coeffs(), std::span(&z, 1), std::span(&out, 1));
  return out;
}

std::pair<Complex, Complex> evaluate_with_derivative(const Polynomial& p, Complex z) {
  require_finite(z, "evaluation point");
  Complex v, d;
  kernels::scalar::horner_with_derivative(p.coeffs(), std::span(&z, 1), std::span(&v, 1),
                                          std::span(&d, 1));
  return {v, d};
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial{};
  std::vector<Complex> out(p.size() - 1);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = static_cast<double>(j + 1) * p[j + 1];
  return Polynomial(std::move(out));
}

Polynomial nth_derivative(const Polynomial& p, int order) {
  Polynomial out = p;
  for (int i = 0; i < order; ++i) out = derivative(out);
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Complex> divide_linear(const Polynomial& p, Complex root) {
  if (p.degree() == 0) return {Polynomial{}, p[0]};
  const std::size_t n = p.size();
  std::vector<Complex> q(n - 1);
  Complex carry = p[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) {
    q[j] = carry;
    carry = p[j] + carry * root;
  }
  return {Polynomial(std::move(q)), carry};
}

Polynomial ratio_poly(const Polynomial& p) {
  if (std::abs(p[0]) > kRelativeZero * p.scale())
    throw Error(ErrorCode::NonzeroConstantTerm, "P(z)/z needs P(0) = 0");
  if (p.degree() == 0) return Polynomial{};
  return Polynomial(std::vector<Complex>(p.coeffs().begin() + 1, p.coeffs().end()));
}

NormalizedPolynomial normalize_at(const Polynomial& p, Complex z0) {
  require_finite(z0, "base point");
  // Taylor shift by repeated synthetic division: b[j] becomes p^(j)(z0)/j!.
  std::vector<Complex> b(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = b.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) b[j] += z0 * b[j + 1];

  if (n < 2 || std::abs(b[1]) <= kRelativeZero * max_abs(b))
    throw Error(ErrorCode::CriticalBasepoint, "p'(z0) vanishes; z0 is a critical point");
  const Complex slope = b[1];
  b[0] = Complex{0.0, 0.0};
  b[1] = Complex{1.0, 0.0};
  for (std::size_t j = 2; j < n; ++j) b[j] /= slope;
  return NormalizedPolynomial::from(Polynomial(std::move(b)));
}

Polynomial decompose_symmetric(const NormalizedPolynomial& p, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "symmetry order k must be >= 2");
  const int d = p.degree();
  if ((d - 1) % k != 0)
    throw Error(ErrorCode::DegreeMismatch,
                "degree " + std::to_string(d) + " is not 1 mod " + std::to_string(k));
  const double tol = kRelativeZero * p.poly().scale();
  for (int j = 2; j <= d; ++j) {
    if ((j - 1) % k != 0 && std::abs(p.poly()[j]) > tol)
      throw Error(ErrorCode::NotSymmetric, "coefficient of z^" + std::to_string(j) +
                                               " is off the lattice 1 mod " + std::to_string(k));
  }
  std::vector<Complex> q((d - 1) / k + 1);
  for (std::size_t m = 0; m < q.size(); ++m) q[m] = p.poly()[1 + m * k];
  return Polynomial(std::move(q));
}

Polynomial build_H(const Polynomial& q, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "symmetry order k must be >= 2");
  Polynomial power = q;
  for (int i = 1; i < k; ++i) power = multiply(power, q);
  std::vector<Complex> out(power.size() + 1);
  std::copy(power.coeffs().begin(), power.coeffs().end(), out.begin() + 1);
  return Polynomial(std::move(out));
}

Polynomial build_R(const Polynomial& q, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "symmetry order k must be >= 2");
  std::vector<Complex> out(q.coeffs().begin(), q.coeffs().end());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] *= 1.0 + static_cast<double>(k) * m;
  return Polynomial(std::move(out));
}

double residual_scale(const Polynomial& p, Complex z) {
  const double r = std::max(1.0, std::abs(z));
  double power = 1.0;
  double s = 0.0;
  for (const auto& c : p.coeffs()) {
    s = std::max(s, std::abs(c) * power);
    power *= r;
  }
  return s;
}

double relative_residual(const Polynomial& p, Complex z) {
  const double s = residual_scale(p, z);
  const double v = std::abs(evaluate(p, z));
  return s > 0.0 ? v / s : v;
}

}  // namespace mvlab
