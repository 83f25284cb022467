#include <cassert>

#include "complex_ops.hpp"
#include "mvlab/kernels.hpp"

namespace mvlab::kernels::scalar {

void horner(std::span<const Complex> coeffs, std::span<const Complex> points,
            std::span<Complex> values) {
  assert(values.size() == points.size());
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (n == 0) {
      values[i] = Complex{};
      continue;
    }
    const Complex z = points[i];
    Complex acc = coeffs[n - 1];
    for (std::size_t j = n - 1; j-- > 0;) acc = detail::mul_add(acc, z, coeffs[j]);
    values[i] = acc;
  }
}

void horner_with_derivative(std::span<const Complex> coeffs, std::span<const Complex> points,
                            std::span<Complex> values, std::span<Complex> derivs) {
  assert(values.size() == points.size() && derivs.size() == points.size());
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (n == 0) {
      values[i] = derivs[i] = Complex{};
      continue;
    }
    const Complex z = points[i];
    Complex acc = coeffs[n - 1];
    Complex der{};
    for (std::size_t j = n - 1; j-- > 0;) {
      der = detail::mul_add(der, z, acc);
      acc = detail::mul_add(acc, z, coeffs[j]);
    }
    values[i] = acc;
    derivs[i] = der;
  }
}

}  // namespace mvlab::kernels::scalar
