#pragma once

#include <vector>

#include "mvlab/polynomial.hpp"

namespace mvlab {

struct ToleranceConfig {
  double residual_tol = 1e-10;
  int max_iters = 200;
  double cluster_tol = 1e-8;

  /// Throws InvalidArgument unless every field is positive.
  void validate() const;
};

/// All roots of a polynomial, with multiplicity.
struct RootSet {
  std::vector<Complex> roots;
  /// relative_residual(p, root) for each root.
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
};

/// Raised by callers that require a converged RootSet; carries the partial
/// result.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& message, RootSet partial)
      : Error(ErrorCode::NoConvergence, message), partial_(std::move(partial)) {}
  const RootSet& partial() const noexcept { return partial_; }

 private:
  RootSet partial_;
};

/// Aberth-Ehrlich simultaneous iteration started from the Cauchy circle,
/// followed by cluster consolidation and Newton polishing. Degrees 1 and 2
/// are solved in closed form. Never throws on non-convergence; inspect
/// RootSet::converged or use require_converged.
RootSet find_roots(const Polynomial& p, const ToleranceConfig& cfg = {});

/// Throws NoConvergenceError when !roots.converged.
const RootSet& require_converged(const RootSet& roots);

/// Newton iteration from z0 until the relative residual reaches
/// cfg.residual_tol or 50 steps elapse. Throws DerivativeVanished.
Complex refine_root(const Polynomial& p, Complex z0, const ToleranceConfig& cfg = {});

/// Independent brute-force root oracle for 1 <= degree <= 6: grid scan for
/// local minima of |p| over the Cauchy disk, Newton refinement,
/// deduplication, and multiplicity by repeated deflation.
RootSet oracle_roots(const Polynomial& p, const ToleranceConfig& cfg = {});

/// 1 + max_{j<n} |c_j / c_n|.
double cauchy_radius(const Polynomial& p);

}  // namespace mvlab
