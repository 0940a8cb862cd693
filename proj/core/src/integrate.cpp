#include "ricci/integrate.hpp"

#include "ricci/flowfield.hpp"
#include "ricci/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace ricci {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561, A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

struct LogFlow {
    CompiledIsotropy iso;

    // du_i/dt = -2 r_i + 2 S / n with S the trace sum, evaluated at x = e^u
    std::vector<double> operator()(const std::vector<double>& u) const
    {
        const std::size_t q = u.size();
        double x[8], r[8];
        for (std::size_t i = 0; i < q; ++i) x[i] = std::exp(u[i]);
        iso.components(std::span<const double>(x, q), std::span<double>(r, q));
        double S = 0;
        for (std::size_t i = 0; i < q; ++i) S += iso.dim(static_cast<int>(i)) * r[i];
        const double c = 2 * S / iso.manifold_dim();
        std::vector<double> g(q);
        for (std::size_t i = 0; i < q; ++i) g[i] = -2 * r[i] + c;
        return g;
    }
};

void record_state(Trajectory& traj, const IsotropyData& iso, double t, const std::vector<double>& u)
{
    Metric x(u.size());
    double vol = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        x[i] = std::exp(u[i]);
        vol += static_cast<double>(iso.dims[i]) * u[i];
    }
    const RicciData rd = ricci_general(iso, x);
    traj.times.push_back(t);
    traj.states.push_back(std::move(x));
    traj.volume_log.push_back(vol);
    traj.scalar.push_back(rd.scalar);
    traj.einstein_residual.push_back(rd.einstein_residual);
}

}  // namespace

double Trajectory::volume_drift() const
{
    if (volume_log.empty()) return 0;
    double drift = 0;
    for (double v : volume_log) drift = std::max(drift, std::abs(v - volume_log.front()));
    return drift;
}

Trajectory integrate_flow(const SpaceSpec& spec, const Metric& x0, double t_end, double rtol, double atol)
{
    validate(spec);
    if (!(rtol >= 1e-12 && rtol <= 1e-3) || !(atol >= 1e-12 && atol <= 1e-3))
        throw ParameterOutOfRange("rtol and atol must lie in [1e-12, 1e-3]");
    const IsotropyData iso = catalog_lookup(spec);
    if (static_cast<int>(x0.size()) != iso.q) throw DegreeMismatch("initial metric dimension mismatch");
    for (double v : x0)
        if (!(v > 0)) throw NonPositiveMetric("initial metric must be strictly positive");

    const LogFlow rhs{CompiledIsotropy(iso)};
    const int q = iso.q;
    std::vector<double> u(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i) u[i] = std::log(x0[i]);

    Trajectory traj;
    record_state(traj, iso, 0.0, u);

    const double dir = t_end >= 0 ? 1.0 : -1.0;
    const double t_abs = std::abs(t_end);
    double t = 0;
    double h = std::min(1e-2, t_abs > 0 ? t_abs : 1e-2);
    const double h_min = 1e-13 * std::max(1.0, t_abs);

    auto axpy = [q](std::vector<double>& out, const std::vector<double>& u0, double hh,
                    std::initializer_list<std::pair<double, const std::vector<double>*>> terms) {
        for (int i = 0; i < q; ++i) {
            double acc = u0[static_cast<std::size_t>(i)];
            for (const auto& [c, k] : terms) acc += hh * c * (*k)[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = acc;
        }
    };

    std::vector<double> tmp(u.size()), u_new(u.size());
    while (t < t_abs) {
        if (h < h_min) throw StepFailure("minimum step size underflow");
        h = std::min(h, t_abs - t);
        const double hs = dir * h;

        const auto k1 = rhs(u);
        axpy(tmp, u, hs, {{A21, &k1}});
        const auto k2 = rhs(tmp);
        axpy(tmp, u, hs, {{A31, &k1}, {A32, &k2}});
        const auto k3 = rhs(tmp);
        axpy(tmp, u, hs, {{A41, &k1}, {A42, &k2}, {A43, &k3}});
        const auto k4 = rhs(tmp);
        axpy(tmp, u, hs, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}});
        const auto k5 = rhs(tmp);
        axpy(tmp, u, hs, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}});
        const auto k6 = rhs(tmp);
        axpy(u_new, u, hs, {{B1, &k1}, {B3, &k3}, {B4, &k4}, {B5, &k5}, {B6, &k6}});
        const auto k7 = rhs(u_new);

        double err = 0;
        for (int i = 0; i < q; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            const double e = hs * (E1 * k1[s] + E3 * k3[s] + E4 * k4[s] + E5 * k5[s] + E6 * k6[s] + E7 * k7[s]);
            const double sc = atol + rtol * std::max(std::abs(u[s]), std::abs(u_new[s]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / q);

        if (std::isfinite(err) && err <= 1.0) {
            t += h;
            u = u_new;
            record_state(traj, iso, dir * t, u);

            const auto& x = traj.states.back();
            const double x_min = *std::min_element(x.begin(), x.end());
            if (x_min < 1e-9) {
                traj.status = TerminalStatus::degenerate;
                return traj;
            }
            const auto g = rhs(u);
            double g_max = 0;
            for (double v : g) g_max = std::max(g_max, std::abs(v));
            // curvature blow-up: the orbit leaves every compact region of
            // the normalized moduli space (stops the integrator before the
            // step size collapses)
            if (*std::max_element(x.begin(), x.end()) > 1e9 || g_max > 1e8) {
                traj.status = x_min < 1e-2 ? TerminalStatus::degenerate : TerminalStatus::divergent;
                return traj;
            }
            double rhs_norm = 0, x_norm = 0;
            for (int i = 0; i < q; ++i) {
                const std::size_t s = static_cast<std::size_t>(i);
                rhs_norm += (x[s] * g[s]) * (x[s] * g[s]);
                x_norm += x[s] * x[s];
            }
            if (std::sqrt(rhs_norm / x_norm) < 1e-10) {
                traj.status = TerminalStatus::converged;
                return traj;
            }
        }
        const double factor = std::isfinite(err) && err > 0 ? 0.9 * std::pow(err, -0.2) : 0.2;
        h *= std::clamp(factor, 0.2, 5.0);
    }
    traj.status = TerminalStatus::time_exhausted;
    return traj;
}

void label_terminal(Trajectory& traj, const std::vector<FixedPointRecord>& fps)
{
    if (traj.status != TerminalStatus::converged || traj.states.empty()) return;
    const Metric& x = traj.states.back();
    std::vector<double> z(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) z[i - 1] = x[i] / x[0];
    double best = std::numeric_limits<double>::infinity();
    const FixedPointRecord* hit = nullptr;
    for (const auto& fp : fps) {
        double d = 0;
        for (std::size_t i = 0; i < z.size(); ++i)
            d = std::max(d, std::abs(z[i] - fp.z[i]) / std::max(std::abs(fp.z[i]), 1e-30));
        if (d < best) { best = d; hit = &fp; }
    }
    if (hit && best < 1e-3) traj.terminal = *hit;
}

double invariant_ray_check(const SpaceSpec& spec, int t_samples)
{
    validate(spec);
    std::vector<double> direction;
    if (const auto* v = std::get_if<SpaceSpec::StiefelV2>(&spec.family)) {
        const double n = v->n;
        direction = {2 * (n - 2) / (n - 1), 1, 1};
    } else if (std::holds_alternative<SpaceSpec::Flag4>(spec.family)) {
        direction = {1, 2, 3, 4};
    } else {
        throw UnknownSpace("no tabulated invariant line for " + spec.canonical());
    }

    // The positive-sign field is nonzero along the ray (the volume-
    // normalized one vanishes on it identically, being an Einstein ray), so
    // the tangency angle is well defined. Deviations are measured against
    // the term-magnitude sum to stay meaningful near cancellation.
    const PolyVectorField field = polynomial_system(spec, RicciSign::positive);
    std::vector<CompiledPoly<double>> comps;
    for (const auto& c : field.components) comps.emplace_back(c);

    double dn = 0;
    for (double d : direction) dn += d * d;
    dn = std::sqrt(dn);

    double worst = 0;
    for (int s = 0; s < t_samples; ++s) {
        const double tval = 0.5 + 1.5 * (t_samples == 1 ? 0.5 : static_cast<double>(s) / (t_samples - 1));
        std::vector<double> x(direction.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = tval * direction[i];
        std::vector<double> p(x.size());
        double pn = 0, dot = 0, mag = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            p[i] = comps[i].evaluate(std::span<const double>(x));
            pn += p[i] * p[i];
            dot += p[i] * direction[i] / dn;
            for (const auto& term : comps[i].terms) {
                double t_abs = std::abs(term.coeff);
                for (int v = 0; v < comps[i].vars; ++v)
                    for (int e = 0; e < term.exps[static_cast<std::size_t>(v)]; ++e)
                        t_abs *= x[static_cast<std::size_t>(v)];
                mag += std::abs(t_abs);
            }
        }
        pn = std::sqrt(pn);
        if (pn < 1e-14 * mag) continue;  // numerically on a fixed ray
        double orth = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = p[i] - dot * direction[i] / dn;
            orth += r * r;
        }
        worst = std::max(worst, std::asin(std::min(1.0, std::sqrt(orth) / pn)));
    }
    return worst;
}

std::vector<BasinCell> basin_scan(const SpaceSpec& spec, const BasinOptions& opts,
                                  const std::vector<FixedPointRecord>& fps)
{
    validate(spec);
    const IsotropyData iso = catalog_lookup(spec);
    const int free_axes = iso.q - 1;
    std::size_t total = 1;
    for (int i = 0; i < free_axes; ++i) total *= static_cast<std::size_t>(opts.grid);

    std::vector<BasinCell> cells(total);
    parallel_for(total, [&](std::size_t idx) {
        Metric x0(static_cast<std::size_t>(iso.q), 1.0);
        std::size_t rest = idx;
        for (int a = 0; a < free_axes; ++a) {
            const std::size_t j = rest % static_cast<std::size_t>(opts.grid);
            rest /= static_cast<std::size_t>(opts.grid);
            x0[static_cast<std::size_t>(a + 1)] =
                opts.lo + (opts.hi - opts.lo) * (opts.grid == 1 ? 0.5 : static_cast<double>(j) / (opts.grid - 1));
        }
        Trajectory traj = integrate_flow(spec, x0, opts.t_end, opts.rtol, opts.atol);
        label_terminal(traj, fps);
        std::string label = "unconverged";
        if (traj.status == TerminalStatus::degenerate) label = "degenerate";
        else if (traj.status == TerminalStatus::divergent) label = "divergent";
        else if (traj.terminal) {
            std::ostringstream os;
            os.precision(9);
            os << "fp(";
            for (std::size_t i = 0; i < traj.terminal->z.size(); ++i)
                os << (i ? "," : "") << traj.terminal->z[i];
            os << ")";
            label = os.str();
        } else if (traj.status == TerminalStatus::converged) {
            label = "converged";
        }
        cells[idx] = BasinCell{std::move(x0), std::move(label)};
    });
    return cells;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj)
{
    const std::size_t q = traj.states.empty() ? 0 : traj.states.front().size();
    os << "t";
    for (std::size_t i = 1; i <= q; ++i) os << ",x_" << i;
    os << ",volume_log,scalar,einstein_residual\n";
    os.precision(9);
    for (std::size_t r = 0; r < traj.times.size(); ++r) {
        os << traj.times[r];
        for (double v : traj.states[r]) os << ',' << v;
        os << ',' << traj.volume_log[r] << ',' << traj.scalar[r] << ',' << traj.einstein_residual[r] << '\n';
    }
}

}  // namespace ricci
