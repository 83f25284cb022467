#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mvlab/kernels.hpp"

namespace mvlab::kernels {

#if defined(MVLAB_HAVE_AVX2)
namespace avx2 {
void horner(std::span<const Complex>, std::span<const Complex>, std::span<Complex>);
void horner_with_derivative(std::span<const Complex>, std::span<const Complex>, std::span<Complex>,
                            std::span<Complex>);
}  // namespace avx2
#endif

#if defined(MVLAB_HAVE_NEON)
namespace neon {
void horner(std::span<const Complex>, std::span<const Complex>, std::span<Complex>);
void horner_with_derivative(std::span<const Complex>, std::span<const Complex>, std::span<Complex>,
                            std::span<Complex>);
}  // namespace neon
#endif

namespace {

constexpr HornerKernels kScalar{Isa::Scalar, &scalar::horner, &scalar::horner_with_derivative};
#if defined(MVLAB_HAVE_AVX2)
constexpr HornerKernels kAvx2{Isa::Avx2, &avx2::horner, &avx2::horner_with_derivative};
#endif
#if defined(MVLAB_HAVE_NEON)
constexpr HornerKernels kNeon{Isa::Neon, &neon::horner, &neon::horner_with_derivative};
#endif

bool cpu_has_avx2() {
#if defined(MVLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa select_isa() {
  if (const char* forced = std::getenv("MVLAB_ISA")) {
    const std::string name(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == isa_name(isa) && isa_available(isa)) return isa;
    }
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const HornerKernels& active() {
  static const HornerKernels& table = kernels_for(select_isa());
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
    case Isa::Neon:
#if defined(MVLAB_HAVE_NEON)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

const HornerKernels& kernels_for(Isa isa) {
  if (!isa_available(isa))
    throw std::invalid_argument("kernel variant unavailable: " + std::string(isa_name(isa)));
  switch (isa) {
#if defined(MVLAB_HAVE_AVX2)
    case Isa::Avx2:
      return kAvx2;
#endif
#if defined(MVLAB_HAVE_NEON)
    case Isa::Neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

Isa active_isa() { return active().isa; }

void horner(std::span<const Complex> coeffs, std::span<const Complex> points,
            std::span<Complex> values) {
  active().eval(coeffs, points, values);
}

void horner_with_derivative(std::span<const Complex> coeffs, std::span<const Complex> points,
                            std::span<Complex> values, std::span<Complex> derivs) {
  active().eval_with_derivative(coeffs, points, values, derivs);
}

}  // namespace mvlab::kernels
