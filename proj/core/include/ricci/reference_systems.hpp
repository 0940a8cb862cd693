#pragma once

#include "ricci/polynomial.hpp"
#include "ricci/spaces.hpp"

namespace ricci {

// Verbatim transcriptions of the tabulated vector fields, used as golden
// cross-checks against the constructed systems. Variable orders follow the
// source tables; where that differs from the catalog order it is noted.

/// x-space systems (3 or 4 components, catalog variable order).
PolyVectorField transcribed_gws_x_system(const SpaceSpec& spec);
PolyVectorField transcribed_v2_x_system(int n);
PolyVectorField transcribed_stiefel_x_system(int k2, int k3);
PolyVectorField transcribed_flag_x_system(FlagId id);

/// Chart-U1 displays restricted to the infinity slice: two components in
/// (z1, z2). Available for gws ids 6..15 and the parameterized gws1/gws4.
PolyVectorField gws_chart_display(int id);
PolyVectorField gws1_chart_display(int k, int l, int m);
PolyVectorField gws4_chart_display(int l);

/// Full chart-U1 system for so(n)/so(n-2): three components in (z1,z2,z3).
PolyVectorField v2_chart_display(int n);

/// Chart-U1 system for the block Stiefel family, in the tabulated variable
/// order (z1,z2,z3,z4) = (x12, x23, x13, 1)/x2 - note 13 and 23 swapped
/// relative to the catalog order.
PolyVectorField stiefel_chart_display(int k2, int k3);

/// The k2 == k3 chart system restricted to the infinity slice, same
/// tabulated variable order (three components).
PolyVectorField stiefel_diag_chart_display(int k2);

/// First three components of the flag chart-U1 field (the infinity-slice
/// dynamics; they do not involve z4), expressed in 4 variables.
PolyVectorField flag_chart_display(FlagId id);

}  // namespace ricci
