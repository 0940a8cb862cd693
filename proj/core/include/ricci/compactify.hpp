#pragma once

#include "ricci/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace ricci {

enum class ChartKind { U, V };

/// Coordinate patch of the projective sphere compactification of R^q.
/// U_i requires the i-th homogeneous coordinate positive, V_i negative;
/// index q+1 is the finite chart (the field is left verbatim there).
struct Chart {
    ChartKind kind = ChartKind::U;
    int index = 1;      // 1..dimension+1
    int dimension = 3;  // q

    std::string name() const;
};

/// Point in chart coordinates; for charts with index <= q the last
/// coordinate is the infinity parameter (zero exactly at infinity).
struct ChartPoint {
    std::vector<double> z;
};

/// Field in chart coordinates, cleared of the 1/Delta^{d-1} prefactor:
/// component s is z_q^d * (P_{j_s}(x(z)) - z_s P_i(x(z))) and the last is
/// -z_q^{d+1} P_i(x(z)); V charts are the U expression times (-1)^{d-1}.
PolyVectorField compactified_field(const PolyVectorField& field, const Chart& chart);

/// Substitute the infinity parameter to zero and drop the (identically
/// vanishing) last component; the zeros of the result are the
/// singularities at infinity. Only meaningful for charts with index <= q.
PolyVectorField infinity_system(const PolyVectorField& cfield);

/// Chart coordinates of a finite point: for U_1, z = (x_2/x_1, ..., x_q/x_1, 1/x_1).
ChartPoint chart_coords(std::span<const double> x, const Chart& chart);

/// Inverse of chart_coords on the chart's finite part.
std::vector<double> chart_to_state(const ChartPoint& p, const Chart& chart);

}  // namespace ricci
