#pragma once

#include <complex>

namespace mvlab::kernels::detail {

// Textbook complex product. std::complex's operator* may route through the
// C99 Annex G fallback, whose operation order the vector kernels cannot
// reproduce; this form is what every variant implements.
inline std::complex<double> mul(std::complex<double> a, std::complex<double> b) {
  const double re = a.real() * b.real() - a.imag() * b.imag();
  const double im = a.imag() * b.real() + a.real() * b.imag();
  return {re, im};
}

// a * z + c
inline std::complex<double> mul_add(std::complex<double> a, std::complex<double> z,
                                    std::complex<double> c) {
  const auto t = mul(a, z);
  return {t.real() + c.real(), t.imag() + c.imag()};
}

}  // namespace mvlab::kernels::detail
