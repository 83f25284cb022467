#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mvlab/error.hpp"

namespace mvlab {

using Complex = std::complex<double>;

/// Coefficients with |c| <= kRelativeZero * max_i |c_i| count as zero.
inline constexpr double kRelativeZero = 1e-12;

/// Dense complex polynomial, coefficients in ascending degree order.
///
/// Construction trims leading-degree coefficients that are zero relative to
/// the coefficient scale, so degree() is meaningful after convolutions. The
/// zero polynomial is stored as a single zero coefficient. Non-finite
/// coefficients are rejected with ErrorCode::NonFinite.
class Polynomial {
 public:
  Polynomial();
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t j) const { return coeffs_[j]; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Complex& leading() const noexcept { return coeffs_.back(); }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

  /// max_j |c_j|; the reference magnitude for all relative tolerances.
  double scale() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// A polynomial with c_0 == 0 and c_1 == 1 exactly.
class NormalizedPolynomial {
 public:
  /// P(z) = z.
  NormalizedPolynomial() : inner_({Complex{0.0, 0.0}, Complex{1.0, 0.0}}) {}

  /// Accepts p when c_0 and c_1 - 1 are zero relative to the coefficient
  /// scale and snaps them to exact values. Throws NonzeroConstantTerm or
  /// NotNormalized otherwise.
  static NormalizedPolynomial from(Polynomial p);

  const Polynomial& poly() const noexcept { return inner_; }
  int degree() const noexcept { return inner_.degree(); }
  std::span<const Complex> coeffs() const noexcept { return inner_.coeffs(); }

  friend bool operator==(const NormalizedPolynomial&, const NormalizedPolynomial&) = default;

 private:
  explicit NormalizedPolynomial(Polynomial p) : inner_(std::move(p)) {}
  Polynomial inner_;
};

/// Horner evaluation of sum c_j z^j.
Complex evaluate(const Polynomial& p, Complex z);

/// p(z) and p'(z) in one Horner pass.
std::pair<Complex, Complex> evaluate_with_derivative(const Polynomial& p, Complex z);

Polynomial derivative(const Polynomial& p);
Polynomial nth_derivative(const Polynomial& p, int order);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// Synthetic division by (z - root): returns {quotient, remainder}.
std::pair<Polynomial, Complex> divide_linear(const Polynomial& p, Complex root);

/// The polynomial p(z)/z, i.e. coefficient j is c_{j+1}. Stable at z = 0,
/// where it equals p'(0). Throws NonzeroConstantTerm when |c_0| is not zero
/// relative to the coefficient scale.
Polynomial ratio_poly(const Polynomial& p);

/// T(w) = (p(z0 + w) - p(z0)) / p'(z0), with c_0 and c_1 set exactly.
/// Throws CriticalBasepoint when |p'(z0)| is zero relative to the scale of
/// the shifted coefficients.
NormalizedPolynomial normalize_at(const Polynomial& p, Complex z0);

/// Q with p(z) = z Q(z^k). Throws DegreeMismatch when k does not divide
/// deg p - 1 and NotSymmetric when a coefficient off the lattice
/// j = 1 (mod k) is nonzero.
Polynomial decompose_symmetric(const NormalizedPolynomial& p, int k);

/// H(u) = u q(u)^k.
Polynomial build_H(const Polynomial& q, int k);

/// R(u) = q(u) + k u q'(u); coefficient m is (1 + k m) q_m.
Polynomial build_R(const Polynomial& q, int k);

/// max_j |c_j| max(1, |z|)^j: the magnitude against which |p(z)| is judged.
/// Reduces to scale() inside the closed unit disk.
double residual_scale(const Polynomial& p, Complex z);

/// |p(z)| / residual_scale(p, z).
double relative_residual(const Polynomial& p, Complex z);

bool is_finite(Complex z) noexcept;

}  // namespace mvlab
