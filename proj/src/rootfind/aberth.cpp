#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "mvlab/kernels.hpp"
#include "mvlab/rootfind.hpp"

namespace mvlab {
namespace {

// Golden-ratio fraction of a radian; keeps the starting circle off any axis
// of symmetry the input may have.
constexpr double kAngularOffset = 0.6180339887498949;
constexpr int kPolishSteps = 5;

std::vector<double> residuals_of(const Polynomial& p, std::span<const Complex> roots) {
  std::vector<double> out(roots.size());
  std::vector<Complex> values(roots.size());
  kernels::horner(p.coeffs(), roots, values);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double s = residual_scale(p, roots[i]);
    out[i] = s > 0.0 ? std::abs(values[i]) / s : std::abs(values[i]);
  }
  return out;
}

std::vector<Complex> solve_quadratic(const Polynomial& p) {
  const Complex a = p[2], b = p[1], c = p[0];
  Complex s = std::sqrt(b * b - 4.0 * a * c);
  if ((std::conj(b) * s).real() < 0.0) s = -s;
  const Complex q = -0.5 * (b + s);
  if (q == Complex{}) return {Complex{}, Complex{}};
  return {q / a, c / q};
}

// Union of the disks D(z_i, n |W_i|), W_i the Weierstrass correction, holds
// every root; a connected component of m disks holds m roots.
std::vector<double> inclusion_radii(const Polynomial& p, std::span<const Complex> z,
                                    std::span<const Complex> values) {
  const std::size_t n = z.size();
  std::vector<double> radii(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex denom = p.leading();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom *= z[i] - z[j];
    const double w = std::abs(values[i]) / std::abs(denom);
    radii[i] = std::isfinite(w) ? static_cast<double>(n) * w : std::numeric_limits<double>::infinity();
  }
  return radii;
}

std::vector<std::vector<std::size_t>> components(std::span<const Complex> z,
                                                 std::span<const double> radii) {
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= radii[i] + radii[j]) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

// Newton on p^(m-1), which has a simple root where p has an m-fold one.
Complex refine_multiple(const Polynomial& p, int multiplicity, Complex start) {
  const Polynomial g = nth_derivative(p, multiplicity - 1);
  Complex z = start;
  for (int step = 0; step < 50; ++step) {
    const auto [v, d] = evaluate_with_derivative(g, z);
    if (v == Complex{} || d == Complex{}) break;
    const Complex dz = v / d;
    if (!is_finite(dz)) break;
    z -= dz;
    if (std::abs(dz) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

// Replaces each multi-member inclusion component by an m-fold root when the
// consolidated point fits the data at least as well as the members did.
std::vector<bool> consolidate_clusters(const Polynomial& p, std::vector<Complex>& z) {
  std::vector<Complex> values(z.size());
  kernels::horner(p.coeffs(), z, values);
  const auto radii = inclusion_radii(p, z, values);
  std::vector<bool> clustered(z.size(), false);
  for (const auto& group : components(z, radii)) {
    if (group.size() < 2) continue;
    Complex mean{};
    double best_value = std::numeric_limits<double>::infinity();
    double reach = 0.0;
    for (std::size_t i : group) {
      mean += z[i];
      best_value = std::min(best_value, std::abs(values[i]));
    }
    mean /= static_cast<double>(group.size());
    for (std::size_t i : group) reach = std::max(reach, std::abs(z[i] - mean) + radii[i]);

    const Complex c = refine_multiple(p, static_cast<int>(group.size()), mean);
    if (!is_finite(c) || std::abs(c - mean) > reach) continue;
    if (std::abs(evaluate(p, c)) > best_value) continue;
    for (std::size_t i : group) {
      z[i] = c;
      clustered[i] = true;
    }
  }
  return clustered;
}

// Up to kPolishSteps Newton steps per root; a step is kept only if it lowers
// |p| and stays closer to its root than to any other approximation.
void polish(const Polynomial& p, std::vector<Complex>& z, const std::vector<bool>& skip) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (skip[i]) continue;
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < z.size(); ++j)
      if (j != i) nearest = std::min(nearest, std::abs(z[i] - z[j]));
    auto [v, d] = evaluate_with_derivative(p, z[i]);
    for (int step = 0; step < kPolishSteps && v != Complex{}; ++step) {
      const Complex dz = v / d;
      if (!is_finite(dz) || std::abs(dz) > 0.5 * nearest) break;
      const Complex next = z[i] - dz;
      const auto [nv, nd] = evaluate_with_derivative(p, next);
      if (!(std::abs(nv) < std::abs(v))) break;
      z[i] = next;
      v = nv;
      d = nd;
    }
  }
}

int aberth(const Polynomial& p, const ToleranceConfig& cfg, std::vector<Complex>& z) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const double radius = cauchy_radius(p);
  z.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + kAngularOffset;
    z[i] = std::polar(radius, theta);
  }

  std::vector<Complex> values(n), derivs(n), next(n);
  std::vector<bool> done(n, false);
  int iter = 0;
  while (iter < cfg.max_iters) {
    kernels::horner_with_derivative(p.coeffs(), z, values, derivs);
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = residual_scale(p, z[i]);
      done[i] = std::abs(values[i]) <= cfg.residual_tol * s;
      all_done = all_done && done[i];
    }
    if (all_done) break;
    ++iter;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = z[i];
      if (done[i]) continue;
      const Complex newton = values[i] / derivs[i];
      Complex repulsion{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
      Complex step = newton / (1.0 - newton * repulsion);
      if (!is_finite(step)) {
        // p' vanished or the correction overflowed: nudge off the spot.
        step = std::polar(cfg.residual_tol * std::max(1.0, std::abs(z[i])), kAngularOffset * static_cast<double>(i + 1));
      }
      next[i] = z[i] - step;
    }
    z.swap(next);
  }
  return iter;
}

}  // namespace

void ToleranceConfig::validate() const {
  if (!(residual_tol > 0.0) || max_iters <= 0 || !(cluster_tol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "tolerance configuration fields must be positive");
}

double cauchy_radius(const Polynomial& p) {
  const Complex lead = p.leading();
  double m = 0.0;
  for (int j = 0; j < p.degree(); ++j) m = std::max(m, std::abs(p[j] / lead));
  return 1.0 + m;
}

RootSet find_roots(const Polynomial& p, const ToleranceConfig& cfg) {
  cfg.validate();
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "root finding needs degree >= 1");

  RootSet out;
  std::vector<Complex>& z = out.roots;
  std::vector<bool> clustered(p.degree(), false);
  if (p.degree() == 1) {
    z = {-p[0] / p[1]};
  } else if (p.degree() == 2) {
    z = solve_quadratic(p);
    clustered[0] = clustered[1] = (z[0] == z[1]);
  } else {
    out.iterations = aberth(p, cfg, z);
    clustered = consolidate_clusters(p, z);
  }
  polish(p, z, clustered);

  out.residuals = residuals_of(p, z);
  out.converged = std::all_of(out.residuals.begin(), out.residuals.end(),
                              [&](double r) { return r <= cfg.residual_tol; });
  return out;
}

const RootSet& require_converged(const RootSet& roots) {
  if (!roots.converged) {
    const double worst = roots.residuals.empty()
                             ? 0.0
                             : *std::max_element(roots.residuals.begin(), roots.residuals.end());
    throw NoConvergenceError("root residual " + std::to_string(worst) + " above tolerance after " +
                                 std::to_string(roots.iterations) + " iterations",
                             roots);
  }
  return roots;
}

Complex refine_root(const Polynomial& p, Complex z0, const ToleranceConfig& cfg) {
  cfg.validate();
  Complex z = z0;
  for (int step = 0; step < 50; ++step) {
    const auto [v, d] = evaluate_with_derivative(p, z);
    const double s = residual_scale(p, z);
    if (std::abs(v) <= cfg.residual_tol * s) return z;
    if (!(std::abs(d) > std::numeric_limits<double>::min() * std::max(1.0, s)))
      throw Error(ErrorCode::DerivativeVanished, "p' vanishes at the Newton iterate");
    z -= v / d;
  }
  return z;
}

}  // namespace mvlab
