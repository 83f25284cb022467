#pragma once

#include <cstdint>

#include "mvlab/polynomial.hpp"
#include "mvlab/search.hpp"

namespace mvlab {

/// Uniform point in the closed disk of the given radius.
Complex sample_disk(SplitMix64& rng, double radius);

/// Normalized P of the given degree with c_2..c_d uniform in the disk.
NormalizedPolynomial sample_general(SplitMix64& rng, int degree, double radius = 2.0);

/// P = z Q(z^k) with Q(0) = 1 and the remaining Q coefficients uniform in
/// the disk. Requires k | degree - 1.
NormalizedPolynomial sample_symmetric(SplitMix64& rng, int degree, int k, double radius = 2.0);

/// Greedy nearest-neighbour pairing: true when every element of a can be
/// matched to a distinct element of b within tol.
bool multisets_close(std::span<const Complex> a, std::span<const Complex> b, double tol);

}  // namespace mvlab
