#pragma once

#include "dcs/transfer_function.hpp"

namespace dcs {

/// Exact zero-order-hold discretization of a strictly proper continuous
/// plant: Gd(z) = (1 - z^-1) * Z{ ct(s)/s }, computed by partial-fraction
/// expansion with pole mapping p -> e^(pT). Handles pole multiplicities up
/// to two in ct(s)/s (which covers a double pole at the origin, i.e. plants
/// with one integrator). The (z-1) factor introduced by the hold cancels one
/// origin factor analytically — by factor bookkeeping, not by root matching —
/// so integrating plants keep their z=1 pole bit-exact.
///
/// Throws ImproperPlant if deg(num) >= deg(den), RepeatedPoleUnsupported for
/// multiplicity > 2, DomainMismatch if ct is not an S-domain function.
TransferFunction zoh_discretize(const TransferFunction& ct, double sample_period);

}  // namespace dcs
