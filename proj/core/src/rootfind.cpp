#include "ricci/rootfind.hpp"

#include "ricci/curvature.hpp"
#include "ricci/flowfield.hpp"
#include "ricci/parallel.hpp"

#include <nlohmann/json.hpp>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ricci {

namespace {

struct ReducedSystem {
    int vars = 0;
    std::vector<CompiledPoly<double>> f;
    std::vector<CompiledPoly<long double>> f_ld;
    std::vector<std::vector<CompiledPoly<double>>> jac;       // exact derivatives
    std::vector<std::vector<CompiledPoly<long double>>> jac_ld;
};

ReducedSystem reduce(const SpaceSpec& spec)
{
    const PolyVectorField field = polynomial_system(spec);
    Chart u1{ChartKind::U, 1, field.vars};
    const PolyVectorField red = infinity_system(compactified_field(field, u1)).normalized();
    ReducedSystem sys;
    sys.vars = red.vars;
    for (const auto& c : red.components) {
        sys.f.emplace_back(c);
        sys.f_ld.emplace_back(c);
        std::vector<CompiledPoly<double>> row;
        std::vector<CompiledPoly<long double>> row_ld;
        for (int v = 0; v < red.vars; ++v) {
            const MultiPoly dc = c.derivative(v);
            row.emplace_back(dc);
            row_ld.emplace_back(dc);
        }
        sys.jac.push_back(std::move(row));
        sys.jac_ld.push_back(std::move(row_ld));
    }
    return sys;
}

template <typename Real>
Real max_abs(std::span<const Real> v)
{
    Real m = 0;
    for (Real x : v) m = std::max<Real>(m, std::abs(x));
    return m;
}

/// Damped Newton from one seed; returns the iterate if the step converged.
std::optional<std::vector<long double>> newton(const ReducedSystem& sys, std::vector<double> seed)
{
    const int q = sys.vars;
    Eigen::VectorXd z(q);
    for (int i = 0; i < q; ++i) z(i) = seed[static_cast<std::size_t>(i)];

    Eigen::VectorXd fval(q);
    Eigen::MatrixXd J(q, q);
    auto eval_f = [&](const Eigen::VectorXd& p, Eigen::VectorXd& out) {
        std::vector<double> xv(p.data(), p.data() + q);
        for (int i = 0; i < q; ++i) out(i) = sys.f[static_cast<std::size_t>(i)].evaluate(std::span<const double>(xv));
    };

    bool converged = false;
    eval_f(z, fval);
    for (int iter = 0; iter < 120 && !converged; ++iter) {
        std::vector<double> xv(z.data(), z.data() + q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                J(i, j) = sys.jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                              .evaluate(std::span<const double>(xv));
        Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
        if (!lu.isInvertible()) return std::nullopt;
        Eigen::VectorXd dz = lu.solve(fval);
        double lambda = 1.0;
        const double n0 = fval.norm();
        Eigen::VectorXd znew = z - dz;
        Eigen::VectorXd fnew(q);
        for (int back = 0; back < 40; ++back) {
            znew = z - lambda * dz;
            bool finite = znew.allFinite();
            if (finite) {
                eval_f(znew, fnew);
                if (fnew.norm() < n0) break;
            }
            lambda *= 0.5;
        }
        const double step = (lambda * dz).norm();
        z = znew;
        fval = fnew;
        if (!z.allFinite()) return std::nullopt;
        if (z.norm() > 1e8) return std::nullopt;
        if (step <= 1e-14 * std::max(1.0, z.norm())) converged = true;
    }
    if (!converged) return std::nullopt;

    // polish in long double
    std::vector<long double> zl(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) zl[static_cast<std::size_t>(i)] = z(i);
    for (int iter = 0; iter < 6; ++iter) {
        std::vector<long double> fv(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i)
            fv[static_cast<std::size_t>(i)] = sys.f_ld[static_cast<std::size_t>(i)].evaluate(std::span<const long double>(zl));
        Eigen::MatrixXd Jd(q, q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                Jd(i, j) = static_cast<double>(
                    sys.jac_ld[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                        .evaluate(std::span<const long double>(zl)));
        Eigen::VectorXd fv_d(q);
        for (int i = 0; i < q; ++i) fv_d(i) = static_cast<double>(fv[static_cast<std::size_t>(i)]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(Jd);
        if (!lu.isInvertible()) break;
        const Eigen::VectorXd dz = lu.solve(fv_d);
        for (int i = 0; i < q; ++i) zl[static_cast<std::size_t>(i)] -= static_cast<long double>(dz(i));
    }
    return zl;
}

std::vector<double> seed_axis(double lo, double hi, int n)
{
    std::vector<double> pts(static_cast<std::size_t>(n));
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < n; ++i)
        pts[static_cast<std::size_t>(i)] = lo * std::exp(ratio * (n == 1 ? 0.5 : static_cast<double>(i) / (n - 1)));
    return pts;
}

}  // namespace

std::vector<FixedPointRecord> find_fixed_points(const SpaceSpec& spec, const SearchOptions& opts)
{
    validate(spec);
    if (!(opts.box_lo > 0) || !(opts.box_hi > opts.box_lo))
        throw ParameterOutOfRange("search box must satisfy 0 < lo < hi");
    if (opts.grid < 8) throw ParameterOutOfRange("grid density must be at least 8");

    const IsotropyData iso = catalog_lookup(spec);
    const ReducedSystem sys = reduce(spec);
    const int q = sys.vars;

    // grid seeds plus published fixed points as seeds
    std::vector<std::vector<double>> seeds;
    const auto axis = seed_axis(opts.box_lo, opts.box_hi, opts.grid);
    std::vector<int> idx(static_cast<std::size_t>(q), 0);
    while (true) {
        std::vector<double> s(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) s[static_cast<std::size_t>(i)] = axis[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        seeds.push_back(std::move(s));
        int pos = 0;
        while (pos < q) {
            if (++idx[static_cast<std::size_t>(pos)] < opts.grid) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == q) break;
    }
    if (auto known = known_infinity_points(spec))
        for (const auto& p : known->points) seeds.push_back(p);

    std::vector<std::optional<std::vector<long double>>> results(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t i) { results[i] = newton(sys, seeds[i]); });

    // dedup in seed order so the outcome is independent of thread count
    std::vector<std::vector<long double>> roots;
    for (const auto& r : results) {
        if (!r) continue;
        const auto& z = *r;
        bool pos_ok = true;
        for (long double v : z)
            if (!(v > 1e-6) || !(v < 1e6)) pos_ok = false;
        if (!pos_ok) continue;
        std::vector<long double> fv(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i)
            fv[static_cast<std::size_t>(i)] = sys.f_ld[static_cast<std::size_t>(i)].evaluate(std::span<const long double>(z));
        if (static_cast<double>(max_abs<long double>(fv)) > opts.tol) continue;
        bool dup = false;
        for (const auto& r0 : roots) {
            long double rel = 0;
            for (int i = 0; i < q; ++i)
                rel = std::max<long double>(rel, std::abs(z[static_cast<std::size_t>(i)] - r0[static_cast<std::size_t>(i)])
                                                     / std::max<long double>(std::abs(r0[static_cast<std::size_t>(i)]), 1e-30L));
            if (rel < 1e-8L) { dup = true; break; }
        }
        if (!dup) roots.push_back(z);
    }

    std::sort(roots.begin(), roots.end());

    std::vector<FixedPointRecord> records;
    for (const auto& zl : roots) {
        FixedPointRecord rec;
        rec.space = spec;
        rec.chart = Chart{ChartKind::U, 1, q + 1};
        rec.z.assign(zl.begin(), zl.end());
        std::vector<long double> fv(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i)
            fv[static_cast<std::size_t>(i)] = sys.f_ld[static_cast<std::size_t>(i)].evaluate(std::span<const long double>(zl));
        rec.residual = static_cast<double>(max_abs<long double>(fv));
        rec.metric.assign(1, 1.0);
        rec.metric.insert(rec.metric.end(), rec.z.begin(), rec.z.end());
        const RicciData rd = ricci_general(iso, rec.metric);
        rec.einstein_residual = rd.einstein_residual;
        rec.einstein_constant = rd.einstein_constant;
        if (rec.einstein_residual >= 1e-8) continue;

        Eigen::MatrixXd J(q, q);
        std::vector<double> zd(rec.z);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                J(i, j) = sys.jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                              .evaluate(std::span<const double>(zd));
        Eigen::EigenSolver<Eigen::MatrixXd> es(J);
        for (int i = 0; i < q; ++i) rec.eigenvalues.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
        std::sort(rec.eigenvalues.begin(), rec.eigenvalues.end(), [](const auto& a, const auto& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
        const auto& sv = svd.singularValues();
        rec.multiplicity_hint = sv(q - 1) < 1e-8 * sv(0) ? 2 : 1;
        records.push_back(std::move(rec));
    }
    return records;
}

Classification classify(const SpaceSpec& spec, const FixedPointRecord& fp)
{
    const ReducedSystem sys = reduce(spec);
    const int q = sys.vars;
    if (static_cast<int>(fp.z.size()) != q) throw DegreeMismatch("fixed point dimension mismatch");

    Eigen::MatrixXd Ja(q, q), Jc(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            Ja(i, j) = sys.jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                           .evaluate(std::span<const double>(fp.z));
    for (int j = 0; j < q; ++j) {
        const double h = 1e-6 * std::max(std::abs(fp.z[static_cast<std::size_t>(j)]), 1.0);
        std::vector<double> zp = fp.z, zm = fp.z;
        zp[static_cast<std::size_t>(j)] += h;
        zm[static_cast<std::size_t>(j)] -= h;
        for (int i = 0; i < q; ++i) {
            const double fp_v = sys.f[static_cast<std::size_t>(i)].evaluate(std::span<const double>(zp));
            const double fm_v = sys.f[static_cast<std::size_t>(i)].evaluate(std::span<const double>(zm));
            Jc(i, j) = (fp_v - fm_v) / (2 * h);
        }
    }
    const double scale = std::max(1.0, Ja.cwiseAbs().maxCoeff());
    if ((Ja - Jc).cwiseAbs().maxCoeff() / scale > 1e-3)
        throw IllConditioned("derivative and finite-difference Jacobians disagree");

    Classification cl;
    Eigen::EigenSolver<Eigen::MatrixXd> es(Ja);
    for (int i = 0; i < q; ++i) cl.eigenvalues.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
    std::sort(cl.eigenvalues.begin(), cl.eigenvalues.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    cl.hyperbolic = std::all_of(cl.eigenvalues.begin(), cl.eigenvalues.end(),
                                [](const auto& ev) { return std::abs(ev.real()) >= 1e-6; });
    return cl;
}

MatchReport match_known(const SpaceSpec& spec, const std::vector<FixedPointRecord>& fps)
{
    MatchReport report;
    report.space = spec.canonical();
    const auto known = known_infinity_points(spec);
    if (!known) {
        for (const auto& fp : fps) report.extra_found.push_back(fp.z);
        return report;
    }
    report.source = known->source;

    auto rel_dist = [](const std::vector<double>& a, const std::vector<double>& b) {
        double d = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            d = std::max(d, std::abs(a[i] - b[i]) / std::max(std::abs(b[i]), 1e-30));
        return d;
    };

    std::vector<bool> used_known(known->points.size(), false);
    std::vector<bool> used_found(fps.size(), false);
    // nearest-pair greedy matching
    while (true) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < fps.size(); ++i) {
            if (used_found[i]) continue;
            for (std::size_t j = 0; j < known->points.size(); ++j) {
                if (used_known[j]) continue;
                const double d = rel_dist(fps[i].z, known->points[j]);
                if (d < best) { best = d; bi = i; bj = j; }
            }
        }
        if (!std::isfinite(best)) break;
        used_found[bi] = used_known[bj] = true;
        report.matches.push_back({fps[bi].z, known->points[bj], best});
        report.max_rel_error = std::max(report.max_rel_error, best);
    }
    for (std::size_t j = 0; j < known->points.size(); ++j)
        if (!used_known[j]) report.unmatched_known.push_back(known->points[j]);
    for (std::size_t i = 0; i < fps.size(); ++i)
        if (!used_found[i]) report.extra_found.push_back(fps[i].z);
    return report;
}

std::array<ChartPoint, 2> jensen_metrics(int k2)
{
    if (k2 < 2) throw ParameterOutOfRange("jensen_metrics requires k2 >= 2");
    const double root = std::sqrt(2.0 * k2 * k2 - 2.0 * k2 + 1.0);
    const double tm = (2.0 * k2 - 1.0 - root) / (k2 - 1.0);
    const double tp = (2.0 * k2 - 1.0 + root) / (k2 - 1.0);
    return {ChartPoint{{1.0, tm, tm}}, ChartPoint{{1.0, tp, tp}}};
}

namespace {

nlohmann::json format_points(const std::vector<std::vector<double>>& pts)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

}  // namespace

void to_json(nlohmann::json& j, const FixedPointRecord& fp)
{
    nlohmann::json eig = nlohmann::json::array();
    for (const auto& ev : fp.eigenvalues) eig.push_back({{"re", ev.real()}, {"im", ev.imag()}});
    const MatchReport report = match_known(fp.space, {fp});
    nlohmann::json matched;
    if (!report.matches.empty() && report.matches.front().rel_error < 1e-3)
        matched = report.matches.front().known;
    j = {{"space", fp.space.canonical()},
         {"chart", "U1"},
         {"z", fp.z},
         {"residual", fp.residual},
         {"metric", fp.metric},
         {"einstein_constant", fp.einstein_constant},
         {"einstein_residual", fp.einstein_residual},
         {"eigenvalues", std::move(eig)},
         {"multiplicity_hint", fp.multiplicity_hint},
         {"matched_paper_value", std::move(matched)}};
}

void to_json(nlohmann::json& j, const MatchReport& report)
{
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& m : report.matches)
        matches.push_back({{"found", m.found}, {"known", m.known}, {"rel_error", m.rel_error}});
    j = {{"space", report.space},
         {"source", report.source},
         {"matches", std::move(matches)},
         {"max_rel_error", report.max_rel_error},
         {"unmatched_known", format_points(report.unmatched_known)},
         {"extra_found", format_points(report.extra_found)}};
}

}  // namespace ricci
