#pragma once

// Batched Horner evaluation of one complex polynomial at many points.
//
// Every variant performs the same IEEE operations in the same order as the
// scalar reference (no fused multiply-add, no reassociation), so results are
// bit-identical across variants. The variant is selected at first use from
// the CPU's capabilities; MVLAB_ISA=scalar|avx2|neon overrides the choice.

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace mvlab::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

using EvalFn = void (*)(std::span<const Complex> coeffs, std::span<const Complex> points,
                        std::span<Complex> values);
using EvalDerivFn = void (*)(std::span<const Complex> coeffs, std::span<const Complex> points,
                             std::span<Complex> values, std::span<Complex> derivs);

struct HornerKernels {
  Isa isa;
  EvalFn eval;
  EvalDerivFn eval_with_derivative;
};

namespace scalar {
void horner(std::span<const Complex> coeffs, std::span<const Complex> points,
            std::span<Complex> values);
void horner_with_derivative(std::span<const Complex> coeffs, std::span<const Complex> points,
                            std::span<Complex> values, std::span<Complex> derivs);
}  // namespace scalar

std::string_view isa_name(Isa isa);

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

/// Kernels for a specific variant; throws std::invalid_argument when the
/// variant is unavailable.
const HornerKernels& kernels_for(Isa isa);

/// The variant chosen for this process.
Isa active_isa();

/// Dispatching entry points. coeffs are ascending; sizes of points, values
/// and derivs must agree.
void horner(std::span<const Complex> coeffs, std::span<const Complex> points,
            std::span<Complex> values);
void horner_with_derivative(std::span<const Complex> coeffs, std::span<const Complex> points,
                            std::span<Complex> values, std::span<Complex> derivs);

}  // namespace mvlab::kernels
