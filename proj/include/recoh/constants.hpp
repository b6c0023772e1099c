#pragma once

#include <numbers>

namespace recoh {

// Natural (Lorentz-Heaviside) units, hbar = c = 1.
inline constexpr double fine_structure = 1.0 / 137.035999084;

// e^2 = 4 pi alpha in Lorentz-Heaviside units.
inline constexpr double charge_squared = 4.0 * std::numbers::pi * fine_structure;

// Largest accepted squeeze magnitude; keeps e^{2r} representable.
inline constexpr double max_squeeze = 700.0 / 2.0;

}  // namespace recoh
