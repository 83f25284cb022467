#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvlab/io.hpp"
#include "mvlab/polynomial.hpp"
#include "mvlab/rootfind.hpp"

namespace mvlab::cli {

struct PropertyTally {
  long pass = 0;
  long fail = 0;
};

struct VerifyFailure {
  std::string property;
  std::string detail;
  Polynomial poly;
};

struct VerifySummary {
  std::map<std::string, PropertyTally> tallies;
  std::vector<VerifyFailure> failures;
};

// Property names, in report order.
inline const std::vector<std::string> kVerifyProperties = {
    "theorem1_floor", "eq1_ceiling", "theorem2_floor", "odd_pairing", "certificate_soundness"};

// Runs every property that applies to p: the general ones always, the odd
// ones when p is odd of degree >= 3.
void check_polynomial(const NormalizedPolynomial& p, const ToleranceConfig& cfg, VerifySummary& summary);

// samples polynomials per degree in [min_degree, max_degree]: general ones at
// every degree >= 2 and odd ones at every odd degree >= 3.
VerifySummary run_verify(int samples, int min_degree, int max_degree, std::uint64_t seed, const ToleranceConfig& cfg);

io::Json verify_summary_to_json(const VerifySummary& s);

}  // namespace mvlab::cli
