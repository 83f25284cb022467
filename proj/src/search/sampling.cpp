#include "mvlab/sampling.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace mvlab {

Complex sample_disk(SplitMix64& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  return std::polar(r, theta);
}

NormalizedPolynomial sample_general(SplitMix64& rng, int degree, double radius) {
  if (degree < 1) throw Error(ErrorCode::DegreeTooSmall, "degree must be >= 1");
  std::vector<Complex> c(degree + 1);
  c[1] = 1.0;
  for (int j = 2; j <= degree; ++j) c[j] = sample_disk(rng, radius);
  return NormalizedPolynomial::from(Polynomial(std::move(c)));
}

NormalizedPolynomial sample_symmetric(SplitMix64& rng, int degree, int k, double radius) {
  if (k < 2 || degree < 1 || (degree - 1) % k != 0)
    throw Error(ErrorCode::DegreeMismatch, "k must divide degree - 1");
  std::vector<Complex> c(degree + 1);
  c[1] = 1.0;
  for (int j = 1 + k; j <= degree; j += k) c[j] = sample_disk(rng, radius);
  return NormalizedPolynomial::from(Polynomial(std::move(c)));
}

bool multisets_close(std::span<const Complex> a, std::span<const Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Complex x : a) {
    std::size_t pick = b.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(x - b[j]);
      if (dist < best) {
        best = dist;
        pick = j;
      }
    }
    if (pick == b.size() || best > tol) return false;
    used[pick] = true;
  }
  return true;
}

}  // namespace mvlab
