#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mvlab::detail {
namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

std::vector<double> blend(const std::vector<double>& from, const std::vector<double>& toward, double t) {
  std::vector<double> out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) out[i] = from[i] + t * (toward[i] - from[i]);
  return out;
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                          const SimplexOptions& opt) {
  const std::size_t n = x0.size();
  SimplexResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evals;
    return f(x);
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t i = 0; i < n && result.evals < opt.max_evals; ++i) {
    std::vector<double> x = x0;
    x[i] += opt.initial_step;
    simplex.push_back({x, eval(x)});
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  while (simplex.size() == n + 1 && result.evals < opt.max_evals) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) diameter = std::max(diameter, distance(simplex[i].x, simplex[0].x));
    if (diameter < opt.min_diameter) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j];
    for (double& c : centroid) c /= static_cast<double>(n);

    Vertex& worst = simplex[n];
    const std::vector<double> xr = blend(centroid, worst.x, -opt.reflect);
    const double fr = eval(xr);

    if (fr < simplex[0].f) {
      const std::vector<double> xe = blend(centroid, xr, opt.expand);
      const double fe = result.evals < opt.max_evals ? eval(xe) : fr;
      worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[n - 1].f) {
      worst = {xr, fr};
      continue;
    }
    if (result.evals >= opt.max_evals) break;
    const bool outside = fr < worst.f;
    const std::vector<double> xc = outside ? blend(centroid, xr, opt.contract) : blend(centroid, worst.x, opt.contract);
    const double fc = eval(xc);
    if (outside ? fc <= fr : fc < worst.f) {
      worst = {xc, fc};
      continue;
    }
    for (std::size_t i = 1; i <= n && result.evals < opt.max_evals; ++i) {
      simplex[i].x = blend(simplex[0].x, simplex[i].x, opt.shrink);
      simplex[i].f = eval(simplex[i].x);
    }
  }

  const auto best = std::min_element(simplex.begin(), simplex.end(), by_value);
  result.x = best->x;
  result.f = best->f;
  return result;
}

}  // namespace mvlab::detail
