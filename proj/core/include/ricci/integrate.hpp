#pragma once

#include "ricci/curvature.hpp"
#include "ricci/rootfind.hpp"
#include "ricci/spaces.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ricci {

enum class TerminalStatus { converged, degenerate, divergent, time_exhausted };

struct Trajectory {
    std::vector<double> times;
    std::vector<Metric> states;
    std::vector<double> volume_log;        // sum_i d_i log x_i(t)
    std::vector<double> scalar;            // S_g(t)
    std::vector<double> einstein_residual;
    TerminalStatus status = TerminalStatus::time_exhausted;
    std::optional<FixedPointRecord> terminal;  // filled by label_terminal

    double volume_drift() const;
};

/// Adaptive embedded Runge-Kutta integration of the volume-normalized flow,
/// performed in log coordinates so the volume is a conserved linear
/// invariant (drift at rounding level for any tolerance). Halts early when
/// ||rhs||/||x|| < 1e-10 (converged), any x_i < 1e-9 (degenerate), or any
/// x_i > 1e9 (divergent); throws StepFailure if the step size underflows.
Trajectory integrate_flow(const SpaceSpec& spec, const Metric& x0, double t_end,
                          double rtol = 1e-9, double atol = 1e-12);

/// Attach the fixed point whose ray the terminal state converged to, if any.
void label_terminal(Trajectory& traj, const std::vector<FixedPointRecord>& fps);

/// Max angle (radians) between the polynomialized field and the direction of
/// the family's invariant line, over t_samples points of the ray.
/// Supported for the v2 and flag families.
double invariant_ray_check(const SpaceSpec& spec, int t_samples);

struct BasinOptions {
    int grid = 4;          // grid points per free axis on the x_1 = 1 slice
    double lo = 0.5, hi = 2.0;
    double t_end = 50;
    double rtol = 1e-9, atol = 1e-12;
};

struct BasinCell {
    Metric start;
    std::string label;     // canonical z of the terminal ray, "degenerate", or "unconverged"
};

std::vector<BasinCell> basin_scan(const SpaceSpec& spec, const BasinOptions& opts,
                                  const std::vector<FixedPointRecord>& fps);

/// Header "t,x_1..x_q,volume_log,scalar,einstein_residual", one row per
/// accepted step, nine significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace ricci
