#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvlab/polynomial.hpp"
#include "mvlab/ratios.hpp"
#include "mvlab/rootfind.hpp"

namespace mvlab {

/// Polynomial family searched over: general (k = 1) or z Q(z^k), k >= 2.
class PolyClass {
 public:
  static PolyClass general() { return PolyClass(1); }
  static PolyClass symmetric(int k);
  static PolyClass odd() { return symmetric(2); }
  /// "general", "odd" or "sym:<k>".
  static PolyClass parse(std::string_view text);

  int k() const noexcept { return k_; }
  bool is_general() const noexcept { return k_ == 1; }
  std::string name() const;

  friend bool operator==(PolyClass, PolyClass) = default;

 private:
  explicit PolyClass(int k) : k_(k) {}
  int k_;
};

struct SearchConfig {
  int degree = 3;
  PolyClass poly_class = PolyClass::general();
  int restarts = 64;
  int max_evals_per_restart = 2000;
  std::uint64_t seed = 0;
  double coefficient_radius = 2.0;
  /// Threads used for restarts; 0 picks the hardware concurrency. Results
  /// do not depend on it.
  int workers = 1;
  ToleranceConfig tolerance;

  void validate() const;
};

/// Real parameterization of a class at fixed degree. The last complex
/// coefficient (c_d, or the top Q coefficient) has its modulus clamped to at
/// least kLeadingClamp so the degree never collapses.
class ParameterSpace {
 public:
  static constexpr double kLeadingClamp = 1e-6;

  ParameterSpace(PolyClass cls, int degree);

  PolyClass poly_class() const noexcept { return cls_; }
  int degree() const noexcept { return degree_; }
  /// 2 (d - 1) for general, 2 (d - 1) / k for symmetric(k).
  int dimension() const noexcept { return 2 * free_coeffs_; }

  NormalizedPolynomial decode(std::span<const double> params) const;
  std::vector<double> encode(const NormalizedPolynomial& p) const;

 private:
  PolyClass cls_;
  int degree_;
  int free_coeffs_;
};

/// Throws DegreeMismatch when k does not divide d - 1, DegreeTooSmall below
/// the class minimum and InvalidArgument above degree 20.
ParameterSpace parameterize(PolyClass cls, int degree);

inline constexpr double kObjectivePenalty = 1e6;

/// D(P) for the decoded polynomial, or kObjectivePenalty when its critical
/// points cannot be computed.
double objective(std::span<const double> params, const ParameterSpace& space, const ToleranceConfig& cfg);

/// Floors the search judges evaluations against.
struct SearchFloors {
  double proven;       // 1/d^2 general, d^(-2/k) symmetric
  double conjectured;  // 1/d
};
SearchFloors search_floors(PolyClass cls, int degree);

struct SearchFlag {
  CheckStatus kind = CheckStatus::CandidateCounterexample;
  int restart = 0;
  NormalizedPolynomial poly;
  double dual_ratio = 0.0;
  double floor = 0.0;
};

struct SearchResult {
  SearchConfig config;
  NormalizedPolynomial best_poly;
  double best_D = 0.0;
  double conjectured_floor = 0.0;
  double proven_floor = 0.0;
  long evals = 0;
  std::vector<double> per_restart_bests;
  std::vector<SearchFlag> flags;
};

/// Multi-start simplex descent on D(P). Restart r draws its start from a
/// stream keyed only by (seed, r), so any worker count gives bit-identical
/// results. Evaluations falling more than kProvenSlack below a floor are
/// recomputed at a tighter root tolerance and flagged if they stay low.
SearchResult minimize_dual_ratio(const SearchConfig& cfg);

/// The flags of minimize_dual_ratio(cfg); empty when nothing suspicious was
/// seen.
std::vector<SearchFlag> counterexample_scan(const SearchConfig& cfg);

/// SplitMix64 stream used for restart starting points.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

/// Stream for restart r of a run seeded with seed.
SplitMix64 restart_stream(std::uint64_t seed, std::uint64_t restart);

}  // namespace mvlab
