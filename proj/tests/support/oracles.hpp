#pragma once

// Test-only oracles. Nothing here calls the library's evaluation, root or
// ratio code, so the tests below check the library against an independent
// route.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace mvlab::testing {

using C = std::complex<double>;

// sum c_j z^j with explicit powers; no Horner.
inline C power_sum(const std::vector<C>& c, C z) {
  C acc{};
  for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * std::pow(z, static_cast<int>(j));
  return acc;
}

inline std::vector<C> power_sum_derivative(const std::vector<C>& c) {
  std::vector<C> d;
  for (std::size_t j = 1; j < c.size(); ++j) d.push_back(static_cast<double>(j) * c[j]);
  if (d.empty()) d.push_back(C{});
  return d;
}

inline double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// ((1 + z)^n - 1) / n
inline std::vector<C> shifted_power_family(int n) {
  std::vector<C> c(n + 1);
  for (int j = 1; j <= n; ++j) c[j] = binomial(n, j) / n;
  return c;
}

// z + z^d / d
inline std::vector<C> conservative_family(int d) {
  std::vector<C> c(d + 1);
  c[1] = 1.0;
  c[d] = 1.0 / d;
  return c;
}

// Minimum over all pairings of the largest pairwise distance. Exhaustive;
// intended for n <= 8.
inline double optimal_match_distance(std::vector<C> a, const std::vector<C>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size() && worst < best; ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  C disk(double radius) {
    for (;;) {
      const C z{uniform(-radius, radius), uniform(-radius, radius)};
      if (std::abs(z) <= radius) return z;
    }
  }
  C unit_square() { return {uniform(0.0, 1.0), uniform(0.0, 1.0)}; }

 private:
  std::mt19937_64 gen_;
};

// Normalized z + c_2 z^2 + ... + c_d z^d with c_j uniform in the disk.
inline std::vector<C> random_general(Rng& rng, int d, double radius = 2.0) {
  std::vector<C> c(d + 1);
  c[1] = 1.0;
  for (int j = 2; j <= d; ++j) c[j] = rng.disk(radius);
  return c;
}

// z Q(z^k), Q(0) = 1, other Q coefficients uniform in the disk.
inline std::vector<C> random_symmetric(Rng& rng, int d, int k, double radius = 2.0) {
  std::vector<C> c(d + 1);
  c[1] = 1.0;
  for (int j = 1 + k; j <= d; j += k) c[j] = rng.disk(radius);
  return c;
}

}  // namespace mvlab::testing
