#pragma once

#include "ricci/compactify.hpp"
#include "ricci/known_values.hpp"
#include "ricci/spaces.hpp"

#include <nlohmann/json_fwd.hpp>

#include <complex>
#include <optional>
#include <vector>

namespace ricci {

struct SearchOptions {
    double box_lo = 1e-3;   // positive seed box, per axis
    double box_hi = 10.0;
    int grid = 12;          // seeds per axis (geometric spacing), at least 8
    double tol = 1e-12;     // residual bound on the coefficient-normalized system
};

/// A singularity at infinity of the compactified flow, i.e. an Einstein ray.
struct FixedPointRecord {
    SpaceSpec space;
    Chart chart;                 // always U1
    std::vector<double> z;       // q-1 chart coordinates, all positive
    double residual = 0;         // max |component| of the normalized reduced system
    std::vector<double> metric;  // (1, z_1, ..., z_{q-1})
    double einstein_residual = 0;
    double einstein_constant = 0;
    std::vector<std::complex<double>> eigenvalues;  // reduced-system Jacobian spectrum
    int multiplicity_hint = 1;   // >1 when the Jacobian is numerically rank-deficient
};

/// Multi-start damped Newton on the reduced infinity system (grid seeds plus
/// published seeds), deduplicated at relative distance 1e-8, sorted
/// lexicographically by z. Roots with a coordinate <= 1e-6 are discarded, and
/// every returned record has einstein_residual < 1e-8.
std::vector<FixedPointRecord> find_fixed_points(const SpaceSpec& spec, const SearchOptions& opts = {});

struct Classification {
    std::vector<std::complex<double>> eigenvalues;
    bool hyperbolic = false;  // all |Re lambda| >= 1e-6
};

/// Jacobian spectrum at the fixed point, cross-checked between the exact
/// derivative and central differences (relative step 1e-6); throws
/// IllConditioned if the two estimates disagree beyond 1e-3.
Classification classify(const SpaceSpec& spec, const FixedPointRecord& fp);

struct MatchEntry {
    std::vector<double> found;
    std::vector<double> known;
    double rel_error = 0;  // relative L-infinity
};

struct MatchReport {
    std::string space;
    std::string source;
    std::vector<MatchEntry> matches;
    double max_rel_error = 0;
    std::vector<std::vector<double>> unmatched_known;
    std::vector<std::vector<double>> extra_found;
};

MatchReport match_known(const SpaceSpec& spec, const std::vector<FixedPointRecord>& fps);

/// The diagonal-family closed form (1, t, t), t = (2k2-1 -+ sqrt(2k2^2-2k2+1))/(k2-1).
std::array<ChartPoint, 2> jensen_metrics(int k2);

void to_json(nlohmann::json& j, const FixedPointRecord& fp);
void to_json(nlohmann::json& j, const MatchReport& report);

}  // namespace ricci
