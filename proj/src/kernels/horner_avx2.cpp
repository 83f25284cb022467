// Compiled with -mavx2 -ffp-contract=off. Two interleaved complex lanes per
// 256-bit register; the product uses addsub so each lane performs exactly the
// scalar reference's operations.

#include <immintrin.h>

#include <cassert>

#include "complex_ops.hpp"
#include "mvlab/kernels.hpp"

namespace mvlab::kernels::avx2 {
namespace {

inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline void store2(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m256d broadcast(const Complex& c) {
  return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&c));
}

// [ar, ai] * [zr, zi] per 128-bit lane, given zr and zi splatted.
inline __m256d mul(__m256d a, __m256d zre, __m256d zim) {
  const __m256d swapped = _mm256_permute_pd(a, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(a, zre), _mm256_mul_pd(swapped, zim));
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
    const __m256d z = load2(points.data() + i);
    const __m256d zre = _mm256_movedup_pd(z);
    const __m256d zim = _mm256_permute_pd(z, 0b1111);
    __m256d acc = broadcast(coeffs[n - 1]);
    for (std::size_t j = n - 1; j-- > 0;) acc = _mm256_add_pd(mul(acc, zre, zim), broadcast(coeffs[j]));
    store2(values.data() + i, acc);
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
  const std::size_t count = points.size();
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256d z = load2(points.data() + i);
    const __m256d zre = _mm256_movedup_pd(z);
    const __m256d zim = _mm256_permute_pd(z, 0b1111);
    __m256d acc = broadcast(coeffs[n - 1]);
    __m256d der = _mm256_setzero_pd();
    for (std::size_t j = n - 1; j-- > 0;) {
      der = _mm256_add_pd(mul(der, zre, zim), acc);
      acc = _mm256_add_pd(mul(acc, zre, zim), broadcast(coeffs[j]));
    }
    store2(values.data() + i, acc);
    store2(derivs.data() + i, der);
  }
  if (i < count)
    scalar::horner_with_derivative(coeffs, points.subspan(i), values.subspan(i), derivs.subspan(i));
}

}  // namespace mvlab::kernels::avx2
