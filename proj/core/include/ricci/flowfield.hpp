#pragma once

#include "ricci/curvature.hpp"
#include "ricci/polynomial.hpp"
#include "ricci/spaces.hpp"

#include <span>
#include <vector>

namespace ricci {

/// Sign of the Ricci term in x_i*(s*r_i + 2S/n). `negative` (s = -2) is the
/// volume-normalized flow, whose fixed rays are the Einstein metrics.
/// `positive` (s = +2) matches the sign convention the tabulated reference
/// systems carry; both choices have identical singularities at infinity.
enum class RicciSign { negative, positive };

/// Velocity of the volume-normalized flow: v_i = -2 x_i r_i + (2 S/n) x_i,
/// with S computed as the trace sum so that sum_i d_i v_i / x_i vanishes to
/// rounding. n_dim must equal the manifold dimension sum(d_i).
std::vector<double> flow_rhs(const IsotropyData& iso, std::span<const double> x, long long n_dim);

/// The family's denominator-clearing multiplier c * x^exps.
struct ClearingFactor {
    Rational scalar;
    Exponents exps;
};
ClearingFactor clearing_factor(const SpaceSpec& spec);

/// Exact polynomial field: x_i*(s*r_i + 2S/n) times the clearing factor.
/// Throws NonPolynomialResult if a denominator survives.
PolyVectorField polynomial_system(const SpaceSpec& spec, RicciSign sign = RicciSign::negative);

/// Verbatim-transcribed x-space system with parameters substituted exactly.
/// Throws NotTranscribed for families without a tabulated x-space system.
PolyVectorField transcribed_system(const SpaceSpec& spec);

/// The rational c with  transcribed_system == c * polynomial_system(spec,
/// RicciSign::positive);  the negative-sign construction is proportional to
/// no tabulated system. Per family: gws 1, v2 1/2, stiefel -1, flag 2.
Rational recorded_constant(const SpaceSpec& spec);

}  // namespace ricci
