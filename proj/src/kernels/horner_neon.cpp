// AArch64 only; built with -ffp-contract=off. One complex value per 128-bit
// register, two points interleaved per loop trip to hide latency.

#include <arm_neon.h>

#include <cassert>

#include "complex_ops.hpp"
#include "mvlab/kernels.hpp"

namespace mvlab::kernels::neon {
namespace {

inline float64x2_t load(const Complex& c) { return vld1q_f64(reinterpret_cast<const double*>(&c)); }

inline void store(Complex& c, float64x2_t v) { vst1q_f64(reinterpret_cast<double*>(&c), v); }

// {ar*zr - ai*zi, ai*zr + ar*zi}
inline float64x2_t mul(float64x2_t a, float64x2_t zre, float64x2_t zim) {
  static const float64x2_t kSign = {-1.0, 1.0};
  const float64x2_t swapped = vextq_f64(a, a, 1);
  return vaddq_f64(vmulq_f64(a, zre), vmulq_f64(vmulq_f64(swapped, zim), kSign));
}

}  // namespace

void horner(std::span<const Complex> coeffs, std::span<const Complex> points,
            std::span<Complex> values) {
  assert(values.size() == points.size());
  const std::size_t n = coeffs.size();
  if (n == 0) {
    for (auto& v : values) v = Complex{};
    return;
  }
  const std::size_t count = points.size();
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t z0 = load(points[i]);
    const float64x2_t z1 = load(points[i + 1]);
    const float64x2_t re0 = vdupq_laneq_f64(z0, 0), im0 = vdupq_laneq_f64(z0, 1);
    const float64x2_t re1 = vdupq_laneq_f64(z1, 0), im1 = vdupq_laneq_f64(z1, 1);
    float64x2_t acc0 = load(coeffs[n - 1]);
    float64x2_t acc1 = acc0;
    for (std::size_t j = n - 1; j-- > 0;) {
      const float64x2_t c = load(coeffs[j]);
      acc0 = vaddq_f64(mul(acc0, re0, im0), c);
      acc1 = vaddq_f64(mul(acc1, re1, im1), c);
    }
    store(values[i], acc0);
    store(values[i + 1], acc1);
  }
  if (i < count) scalar::horner(coeffs, points.subspan(i), values.subspan(i));
}

void horner_with_derivative(std::span<const Complex> coeffs, std::span<const Complex> points,
                            std::span<Complex> values, std::span<Complex> derivs) {
  assert(values.size() == points.size() && derivs.size() == points.size());
  const std::size_t n = coeffs.size();
  if (n == 0) {
    for (auto& v : values) v = Complex{};
    for (auto& d : derivs) d = Complex{};
    return;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const float64x2_t z = load(points[i]);
    const float64x2_t zre = vdupq_laneq_f64(z, 0), zim = vdupq_laneq_f64(z, 1);
    float64x2_t acc = load(coeffs[n - 1]);
    float64x2_t der = vdupq_n_f64(0.0);
    for (std::size_t j = n - 1; j-- > 0;) {
      der = vaddq_f64(mul(der, zre, zim), acc);
      acc = vaddq_f64(mul(acc, zre, zim), load(coeffs[j]));
    }
    store(values[i], acc);
    store(derivs[i], der);
  }
}

}  // namespace mvlab::kernels::neon
