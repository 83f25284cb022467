#include "mvlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <thread>

#include "mvlab/oddcert.hpp"
#include "nelder_mead.hpp"

namespace mvlab {
namespace {

constexpr int kMaxSearchDegree = 20;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct RestartOutcome {
  std::vector<double> x;
  double best = 0.0;
  int evals = 0;
  std::optional<SearchFlag> flag;
};

ToleranceConfig tightened(const ToleranceConfig& cfg) {
  ToleranceConfig t = cfg;
  t.residual_tol = std::min(cfg.residual_tol, 1e-13);
  t.max_iters = 4 * cfg.max_iters;
  return t;
}

std::optional<double> dual_ratio_or_none(const NormalizedPolynomial& p, const ToleranceConfig& cfg) {
  try {
    return ratio_report(p, cfg).dual_ratio;
  } catch (const Error&) {
    return std::nullopt;
  }
}

RestartOutcome run_restart(const SearchConfig& cfg, const ParameterSpace& space, const SearchFloors& floors,
                           int restart) {
  SplitMix64 rng = restart_stream(cfg.seed, static_cast<std::uint64_t>(restart));
  std::vector<double> x0(space.dimension());
  for (std::size_t i = 0; i + 1 < x0.size(); i += 2) {
    const double r = cfg.coefficient_radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    x0[i] = r * std::cos(theta);
    x0[i + 1] = r * std::sin(theta);
  }

  RestartOutcome out;
  const ToleranceConfig strict = tightened(cfg.tolerance);
  auto f = [&](std::span<const double> params) {
    const NormalizedPolynomial p = space.decode(params);
    const auto d = dual_ratio_or_none(p, cfg.tolerance);
    if (!d) return kObjectivePenalty;
    const double floor = std::max(floors.proven, floors.conjectured);
    if (*d >= floor - kProvenSlack) return *d;

    const auto recheck = dual_ratio_or_none(p, strict);
    if (!recheck) return kObjectivePenalty;
    if (!out.flag) {
      if (*recheck < floors.proven - kProvenSlack)
        out.flag = SearchFlag{CheckStatus::NumericalAnomaly, restart, p, *recheck, floors.proven};
      else if (*recheck < floors.conjectured - kProvenSlack)
        out.flag = SearchFlag{CheckStatus::CandidateCounterexample, restart, p, *recheck, floors.conjectured};
    }
    return *recheck;
  };

  detail::SimplexOptions opt;
  opt.max_evals = cfg.max_evals_per_restart;
  opt.initial_step = 0.25 * cfg.coefficient_radius;
  const auto result = detail::nelder_mead(f, x0, opt);
  out.x = result.x;
  out.best = result.f;
  out.evals = result.evals;
  return out;
}

}  // namespace

PolyClass PolyClass::symmetric(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "symmetric class needs k >= 2");
  return PolyClass(k);
}

PolyClass PolyClass::parse(std::string_view text) {
  if (text == "general") return general();
  if (text == "odd") return odd();
  if (text.starts_with("sym:")) {
    int k = 0;
    const auto digits = text.substr(4);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 1) return k == 1 ? general() : symmetric(k);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown class '" + std::string(text) + "' (general|odd|sym:<k>)");
}

std::string PolyClass::name() const {
  if (k_ == 1) return "general";
  if (k_ == 2) return "odd";
  return "sym:" + std::to_string(k_);
}

void SearchConfig::validate() const {
  parameterize(poly_class, degree);
  tolerance.validate();
  if (restarts <= 0 || max_evals_per_restart <= 0 || workers < 0 || !(coefficient_radius > 0.0))
    throw Error(ErrorCode::InvalidArgument, "restarts, evaluation budget and radius must be positive");
}

ParameterSpace::ParameterSpace(PolyClass cls, int degree)
    : cls_(cls), degree_(degree), free_coeffs_(cls.is_general() ? degree - 1 : (degree - 1) / cls.k()) {}

NormalizedPolynomial ParameterSpace::decode(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != dimension())
    throw Error(ErrorCode::InvalidArgument, "parameter vector has the wrong length");
  std::vector<Complex> free(free_coeffs_);
  for (int i = 0; i < free_coeffs_; ++i) free[i] = {params[2 * i], params[2 * i + 1]};
  Complex& top = free.back();
  const double m = std::abs(top);
  if (!(m >= kLeadingClamp)) top = m > 0.0 ? top * (kLeadingClamp / m) : Complex{kLeadingClamp, 0.0};

  const int step = cls_.is_general() ? 1 : cls_.k();
  std::vector<Complex> coeffs(degree_ + 1);
  coeffs[1] = 1.0;
  for (int i = 0; i < free_coeffs_; ++i) coeffs[1 + (i + 1) * step] = free[i];
  return NormalizedPolynomial::from(Polynomial(std::move(coeffs)));
}

std::vector<double> ParameterSpace::encode(const NormalizedPolynomial& p) const {
  if (p.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "polynomial degree differs from the space");
  const int step = cls_.is_general() ? 1 : cls_.k();
  if (!cls_.is_general()) decompose_symmetric(p, step);
  std::vector<double> out(dimension());
  for (int i = 0; i < free_coeffs_; ++i) {
    const Complex c = p.poly()[1 + (i + 1) * step];
    out[2 * i] = c.real();
    out[2 * i + 1] = c.imag();
  }
  return out;
}

ParameterSpace parameterize(PolyClass cls, int degree) {
  if (degree > kMaxSearchDegree) throw Error(ErrorCode::InvalidArgument, "search degree is capped at 20");
  if (cls.is_general()) {
    if (degree < 2) throw Error(ErrorCode::DegreeTooSmall, "general class needs degree >= 2");
  } else {
    if (degree < 3) throw Error(ErrorCode::DegreeTooSmall, "symmetric classes need degree >= 3");
    if ((degree - 1) % cls.k() != 0)
      throw Error(ErrorCode::DegreeMismatch, "class " + cls.name() + " needs degree = 1 mod " + std::to_string(cls.k()));
  }
  return ParameterSpace(cls, degree);
}

double objective(std::span<const double> params, const ParameterSpace& space, const ToleranceConfig& cfg) {
  return dual_ratio_or_none(space.decode(params), cfg).value_or(kObjectivePenalty);
}

SearchFloors search_floors(PolyClass cls, int degree) {
  const double d = static_cast<double>(degree);
  const double proven = cls.is_general() ? 1.0 / (d * d) : symmetric_bound(degree, cls.k());
  return {proven, 1.0 / d};
}

SearchResult minimize_dual_ratio(const SearchConfig& cfg) {
  cfg.validate();
  const ParameterSpace space = parameterize(cfg.poly_class, cfg.degree);
  const SearchFloors floors = search_floors(cfg.poly_class, cfg.degree);

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  const int workers = std::clamp(cfg.workers == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : cfg.workers,
                                 1, cfg.restarts);
  if (workers == 1) {
    for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(cfg, space, floors, r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next++; r < cfg.restarts; r = next++) outcomes[r] = run_restart(cfg, space, floors, r);
      });
    }
  }

  SearchResult result;
  result.config = cfg;
  result.conjectured_floor = floors.conjectured;
  result.proven_floor = floors.proven;
  int best = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    result.per_restart_bests.push_back(outcomes[r].best);
    result.evals += outcomes[r].evals;
    if (outcomes[r].best < outcomes[best].best) best = r;
    if (outcomes[r].flag) result.flags.push_back(*outcomes[r].flag);
  }
  result.best_D = outcomes[best].best;
  result.best_poly = space.decode(outcomes[best].x);
  return result;
}

std::vector<SearchFlag> counterexample_scan(const SearchConfig& cfg) { return minimize_dual_ratio(cfg).flags; }

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SplitMix64 restart_stream(std::uint64_t seed, std::uint64_t restart) {
  SplitMix64 mixer(seed ^ (restart * kGolden));
  return SplitMix64(mixer.next() + restart);
}

}  // namespace mvlab
