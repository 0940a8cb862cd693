#pragma once

#include "ricci/errors.hpp"
#include "ricci/spaces.hpp"

#include <span>
#include <vector>

namespace ricci {

/// Positive diagonal metric coefficients (x_1..x_q).
using Metric = std::vector<double>;

struct RicciData {
    std::vector<double> components;  // r_1..r_q
    double scalar = 0;               // family scalar-curvature formula
    double einstein_constant = 0;    // mean of the r_i
    double einstein_residual = 0;    // max_i |r_i - mean|
};

/// Same quantities evaluated in long double, for residual confirmation
/// near fixed points.
struct RicciDataExt {
    std::vector<long double> components;
    long double scalar = 0;
    long double einstein_constant = 0;
    long double einstein_residual = 0;
};

/// General formula: r_k = 1/(2x_k) + (1/4d_k) sum A_jik x_k/(x_j x_i)
///                        - (1/2d_k) sum A_kij x_j/(x_k x_i).
RicciData ricci_general(const IsotropyData& iso, std::span<const double> x);
RicciDataExt ricci_general_ext(const IsotropyData& iso, std::span<const long double> x);

/// Three-summand closed form, driven by (a_1,a_2,a_3); iso must carry
/// wallach_a. The scalar term uses A_123/2 (the trace identity pins the
/// coefficient; see tests).
RicciData ricci_wallach(const IsotropyData& iso, std::span<const double> x);

/// Closed forms for so(n)/so(n-2), ordering (x_0, x_1, x_2).
RicciData ricci_v2(int n, std::span<const double> x);

/// Closed forms for so(1+k2+k3)/so(k3), ordering (x_2, x_12, x_13, x_23).
RicciData ricci_stiefel_block(int k2, int k3, std::span<const double> x);

/// Closed forms for the four-summand flags, ordering (x_1..x_4).
RicciData ricci_flag4(FlagId id, std::span<const double> x);

/// Dispatch to the family closed form for a cataloged space.
RicciData ricci_specialized(const SpaceSpec& spec, std::span<const double> x);

/// Dense double tables of the structure constants for hot loops (the
/// integrator evaluates the components thousands of times per trajectory).
/// Matches ricci_general's components to rounding; see tests.
class CompiledIsotropy {
public:
    explicit CompiledIsotropy(const IsotropyData& iso);

    int summands() const { return q_; }
    double dim(int i) const { return dims_[static_cast<std::size_t>(i)]; }
    double manifold_dim() const { return n_; }

    /// Ricci components only; r must have size q.
    void components(std::span<const double> x, std::span<double> r) const;

private:
    int q_ = 0;
    double n_ = 0;
    std::vector<double> dims_;
    std::vector<double> t1_;  // [k*q*q + j*q + i] = A_jik / (4 d_k)
    std::vector<double> t2_;  // [k*q*q + j*q + i] = A_kij / (2 d_k)
};

}  // namespace ricci
