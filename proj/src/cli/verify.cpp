#include "verify.hpp"

#include <cmath>

#include "mvlab/oddcert.hpp"
#include "mvlab/ratios.hpp"
#include "mvlab/sampling.hpp"

namespace mvlab::cli {
namespace {

constexpr double kFloorSlack = 1e-9;
constexpr double kPairingTol = 1e-8;
constexpr double kResidualTol = 1e-8;

void tally(VerifySummary& s, const NormalizedPolynomial& p, const std::string& property, bool ok,
           const std::string& detail) {
  auto& t = s.tallies[property];
  if (ok) {
    ++t.pass;
  } else {
    ++t.fail;
    s.failures.push_back({property, detail, p.poly()});
  }
}

bool odd_pairs_hold(const RatioReport& r) {
  const std::size_t n = r.critical_points.size();
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex target = -r.critical_points[i];
    std::size_t pick = n;
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = std::abs(r.critical_points[j] - target);
      if (!used[j] && (pick == n || dist < best)) {
        pick = j;
        best = dist;
      }
    }
    if (pick == n || best > kPairingTol * std::max(1.0, std::abs(target))) return false;
    if (std::abs(r.ratios[i] - r.ratios[pick]) > kPairingTol * std::max(1.0, std::abs(r.ratios[i]))) return false;
    used[pick] = true;
  }
  return true;
}

std::uint64_t stream_tag(int degree, bool odd, int sample) {
  return (static_cast<std::uint64_t>(degree) << 33) | (static_cast<std::uint64_t>(odd) << 32) |
         static_cast<std::uint32_t>(sample);
}

}  // namespace

void check_polynomial(const NormalizedPolynomial& p, const ToleranceConfig& cfg, VerifySummary& summary) {
  const int d = p.degree();
  const bool odd = d >= 3 && detect_symmetry(p) % 2 == 0;

  RatioReport report;
  try {
    report = ratio_report(p, cfg);
  } catch (const Error& e) {
    tally(summary, p, "theorem1_floor", false, e.what());
    return;
  }
  const double dd = static_cast<double>(d);
  tally(summary, p, "theorem1_floor", report.dual_ratio >= 1.0 / (dd * dd) - kFloorSlack,
        "D = " + std::to_string(report.dual_ratio));
  tally(summary, p, "eq1_ceiling", report.smale_ratio <= 4.0 + kFloorSlack, "S = " + std::to_string(report.smale_ratio));
  if (!odd) return;

  tally(summary, p, "theorem2_floor", report.dual_ratio >= 1.0 / dd - kFloorSlack,
        "D = " + std::to_string(report.dual_ratio));
  tally(summary, p, "odd_pairing", odd_pairs_hold(report), "critical points or ratios not symmetric under z -> -z");

  try {
    const OddCertificate cert = certify_odd(p, cfg);
    const Polynomial dp = derivative(p.poly());
    const double residual = std::abs(evaluate(dp, cert.c)) / residual_scale(dp, cert.c);
    const double value = std::abs(evaluate(p.poly(), cert.c) / cert.c);
    const bool ok = residual <= kResidualTol && value >= 1.0 / dd - kFloorSlack &&
                    cert.q_abs <= report.dual_ratio + kFloorSlack;
    tally(summary, p, "certificate_soundness", ok,
          "|P(c)/c| = " + std::to_string(value) + ", residual " + std::to_string(residual));
  } catch (const Error& e) {
    tally(summary, p, "certificate_soundness", false, e.what());
  }
}

VerifySummary run_verify(int samples, int min_degree, int max_degree, std::uint64_t seed, const ToleranceConfig& cfg) {
  VerifySummary summary;
  for (const auto& name : kVerifyProperties) summary.tallies[name];
  for (int d = std::max(2, min_degree); d <= max_degree; ++d) {
    for (int s = 0; s < samples; ++s) {
      SplitMix64 rng = restart_stream(seed, stream_tag(d, false, s));
      check_polynomial(sample_general(rng, d), cfg, summary);
    }
    if (d >= 3 && d % 2 == 1) {
      for (int s = 0; s < samples; ++s) {
        SplitMix64 rng = restart_stream(seed, stream_tag(d, true, s));
        check_polynomial(sample_symmetric(rng, d, 2), cfg, summary);
      }
    }
  }
  return summary;
}

io::Json verify_summary_to_json(const VerifySummary& s) {
  io::Json props = io::Json::object();
  for (const auto& name : kVerifyProperties) {
    const auto it = s.tallies.find(name);
    const PropertyTally t = it == s.tallies.end() ? PropertyTally{} : it->second;
    props[name] = io::Json{{"pass", t.pass}, {"fail", t.fail}};
  }
  io::Json failures = io::Json::array();
  for (const auto& f : s.failures)
    failures.push_back(io::Json{{"property", f.property}, {"detail", f.detail}, {"polynomial", io::polynomial_to_json(f.poly)}});
  return io::Json{{"properties", props}, {"failures", failures}};
}

}  // namespace mvlab::cli
