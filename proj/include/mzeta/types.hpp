#pragma once

#include <complex>
#include <string_view>

namespace mzeta {

/// Numeric carrier for zeta values: 64-bit significand on x86.
using Complex = std::complex<long double>;

/// Which reading of a formula to evaluate: exactly as displayed in the source, or the
/// repaired statement that the definitions actually satisfy.
enum class Variant { AsPrinted, Corrected };

constexpr std::string_view variant_name(Variant v) { return v == Variant::AsPrinted ? "as-printed" : "corrected"; }

}  // namespace mzeta
