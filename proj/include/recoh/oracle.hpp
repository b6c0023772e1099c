#pragma once

#include "recoh/quadrature.hpp"
#include "recoh/squeezed_state.hpp"
#include "recoh/trajectory.hpp"

namespace recoh {

// Brute-force evaluation of the loop integrals behind the single-mode closed
// forms. The loop C = C1 - C2 is assembled from its two legs (z and -z), so
// the factor 4 in front of the reduced integral is produced rather than
// assumed. All routines refine once and throw NonConvergence on disagreement.

/// W_R(t0) from the renormalized squeezed-vacuum Hadamard kernel.
QuadratureResult quad_w_r(const SqueezeState& state, const ModeSpec& mode,
                          const Trajectory& traj, double t0, const QuadratureConfig& cfg = {});

/// W_0 of the mode from the vacuum Hadamard kernel.
QuadratureResult quad_w0(const ModeSpec& mode, const Trajectory& traj,
                         const QuadratureConfig& cfg = {});

/// M as the square of the integral of v_z sin(omega t) over [-T, T].
QuadratureResult quad_envelope(const ModeSpec& mode, const Trajectory& traj,
                               const QuadratureConfig& cfg = {});

}  // namespace recoh
