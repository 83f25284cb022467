// Brute-force root oracle. Shares no code path with the Aberth solver beyond
// polynomial evaluation, so the two can validate each other.

#include <algorithm>
#include <cmath>
#include <limits>

#include "mvlab/kernels.hpp"
#include "mvlab/rootfind.hpp"

namespace mvlab {
namespace {

constexpr int kMaxOracleDegree = 6;
constexpr int kHalfGrid = 200;  // step = radius / 200
constexpr double kDeflationTol = 1e-6;

struct Candidate {
  Complex z;
  int multiplicity;
};

Complex newton_to_limit(const Polynomial& p, Complex z) {
  for (int step = 0; step < 200; ++step) {
    const auto [v, d] = evaluate_with_derivative(p, z);
    if (v == Complex{} || d == Complex{}) break;
    const Complex dz = v / d;
    if (!is_finite(dz)) break;
    z -= dz;
    if (std::abs(dz) <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

int multiplicity_by_deflation(const Polynomial& p, Complex r) {
  Polynomial q = p;
  int m = 0;
  while (q.degree() >= 1) {
    auto [quotient, remainder] = divide_linear(q, r);
    if (std::abs(remainder) > kDeflationTol * residual_scale(q, r)) break;
    q = std::move(quotient);
    ++m;
  }
  return m;
}

// Alternates multiplicity detection with Newton on p^(m-1) until m settles.
Candidate settle(const Polynomial& p, Complex z) {
  z = newton_to_limit(p, z);
  int m = std::max(1, multiplicity_by_deflation(p, z));
  for (int round = 0; round < kMaxOracleDegree; ++round) {
    if (m > 1) z = newton_to_limit(nth_derivative(p, m - 1), z);
    const int next = std::max(1, multiplicity_by_deflation(p, z));
    if (next == m) break;
    m = next;
  }
  return {z, m};
}

std::vector<Complex> grid_minima(const Polynomial& p) {
  const double radius = cauchy_radius(p);
  const double step = radius / kHalfGrid;
  constexpr int side = 2 * kHalfGrid + 1;
  std::vector<double> mag(static_cast<std::size_t>(side) * side);
  std::vector<Complex> row(side), values(side);
  for (int iy = 0; iy < side; ++iy) {
    for (int ix = 0; ix < side; ++ix) row[ix] = Complex{-radius + ix * step, -radius + iy * step};
    kernels::horner(p.coeffs(), row, values);
    for (int ix = 0; ix < side; ++ix) mag[static_cast<std::size_t>(iy) * side + ix] = std::abs(values[ix]);
  }
  std::vector<Complex> minima;
  for (int iy = 1; iy + 1 < side; ++iy) {
    for (int ix = 1; ix + 1 < side; ++ix) {
      const double centre = mag[static_cast<std::size_t>(iy) * side + ix];
      bool is_min = true;
      for (int dy = -1; dy <= 1 && is_min; ++dy)
        for (int dx = -1; dx <= 1 && is_min; ++dx)
          if ((dx || dy) && mag[static_cast<std::size_t>(iy + dy) * side + ix + dx] < centre) is_min = false;
      if (is_min) minima.emplace_back(-radius + ix * step, -radius + iy * step);
    }
  }
  return minima;
}

std::vector<Candidate> distinct_roots(const Polynomial& target, const Polynomial& search,
                                      const ToleranceConfig& cfg) {
  std::vector<Candidate> found;
  for (const Complex start : grid_minima(search)) {
    // Locate on the (possibly deflated) search polynomial, then settle on
    // the original so deflation error does not leak into the answer.
    Candidate c = settle(target, newton_to_limit(search, start));
    if (!is_finite(c.z) || relative_residual(target, c.z) > 1e-8) continue;
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const Candidate& f) {
      return std::abs(f.z - c.z) <= cfg.cluster_tol * std::max(1.0, std::abs(c.z));
    });
    if (!duplicate) found.push_back(c);
  }
  return found;
}

}  // namespace

RootSet oracle_roots(const Polynomial& p, const ToleranceConfig& cfg) {
  cfg.validate();
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "root finding needs degree >= 1");
  if (p.degree() > kMaxOracleDegree)
    throw Error(ErrorCode::DegreeTooHigh, "oracle_roots supports degree <= 6");

  const int n = p.degree();
  std::vector<Candidate> roots;
  Polynomial remaining = p;
  for (int pass = 0; pass < n && remaining.degree() >= 1; ++pass) {
    for (const Candidate& c : distinct_roots(p, remaining, cfg)) {
      const bool seen = std::any_of(roots.begin(), roots.end(), [&](const Candidate& r) {
        return std::abs(r.z - c.z) <= cfg.cluster_tol * std::max(1.0, std::abs(c.z));
      });
      if (!seen) roots.push_back(c);
    }
    int total = 0;
    Polynomial q = p;
    for (const Candidate& c : roots) {
      for (int i = 0; i < c.multiplicity && q.degree() >= 1; ++i) q = divide_linear(q, c.z).first;
      total += c.multiplicity;
    }
    if (total >= n) break;
    remaining = q;
  }

  RootSet out;
  for (const Candidate& c : roots)
    for (int i = 0; i < c.multiplicity && static_cast<int>(out.roots.size()) < n; ++i) out.roots.push_back(c.z);
  for (const Complex z : out.roots) out.residuals.push_back(relative_residual(p, z));
  out.iterations = 0;
  out.converged = static_cast<int>(out.roots.size()) == n &&
                  std::all_of(out.residuals.begin(), out.residuals.end(),
                              [&](double r) { return r <= cfg.residual_tol; });
  return out;
}

}  // namespace mvlab
