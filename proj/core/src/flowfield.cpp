#include "ricci/flowfield.hpp"

#include "ricci/reference_systems.hpp"

#include <cmath>

namespace ricci {

std::vector<double> flow_rhs(const IsotropyData& iso, std::span<const double> x, long long n_dim)
{
    if (n_dim != iso.manifold_dim()) throw DegreeMismatch("n_dim must equal sum of summand dimensions");
    const RicciData rd = ricci_general(iso, x);
    double S = 0;
    for (int i = 0; i < iso.q; ++i)
        S += static_cast<double>(iso.dims[static_cast<std::size_t>(i)]) * rd.components[static_cast<std::size_t>(i)];
    const double c = 2 * S / static_cast<double>(n_dim);
    std::vector<double> v(static_cast<std::size_t>(iso.q));
    for (int i = 0; i < iso.q; ++i)
        v[static_cast<std::size_t>(i)] = x[i] * (-2 * rd.components[static_cast<std::size_t>(i)] + c);
    return v;
}

ClearingFactor clearing_factor(const SpaceSpec& spec)
{
    const IsotropyData iso = catalog_lookup(spec);
    if (std::holds_alternative<SpaceSpec::Gws>(spec.family))
        return {Rational(iso.manifold_dim()), {1, 1, 1}};
    if (const auto* v = std::get_if<SpaceSpec::StiefelV2>(&spec.family)) {
        const long long n = v->n;
        return {Rational(2 * (n - 2) * (2 * n - 3)), {1, 1, 1}};
    }
    if (const auto* s = std::get_if<SpaceSpec::StiefelBlock>(&spec.family)) {
        const long long k2 = s->k2, k3 = s->k3;
        // the tabulated factor carries the negative scalar (-k2 - 2 k3)
        return {Rational(-2 * (k2 + 1) * (k2 + k3 - 1) * (k2 + 2 * k3)), {1, 2, 1, 2}};
    }
    Rational c(iso.manifold_dim());
    for (long long d : iso.dims) c *= d;
    return {c, {2, 2, 1, 1}};
}

PolyVectorField polynomial_system(const SpaceSpec& spec, RicciSign sign)
{
    const IsotropyData iso = catalog_lookup(spec);
    const int q = iso.q;
    const long long n = iso.manifold_dim();
    const Rational s = sign == RicciSign::negative ? Rational(-2) : Rational(2);

    auto unit = [&](int i) {
        Exponents e(static_cast<std::size_t>(q), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return e;
    };

    // Laurent form of the Ricci components
    std::vector<MultiPoly> r(static_cast<std::size_t>(q), MultiPoly(q));
    for (int k = 0; k < q; ++k) {
        MultiPoly& rk = r[static_cast<std::size_t>(k)];
        Exponents e(static_cast<std::size_t>(q), 0);
        e[static_cast<std::size_t>(k)] = -1;
        rk.add_term(e, Rational(1, 2));
        const Rational dk(iso.dims[static_cast<std::size_t>(k)]);
        for (int j = 0; j < q; ++j) {
            for (int i = 0; i < q; ++i) {
                const Rational Ajik = iso.triple(j, i, k);
                if (Ajik != 0) {
                    Exponents t(static_cast<std::size_t>(q), 0);
                    t[static_cast<std::size_t>(k)] += 1;
                    t[static_cast<std::size_t>(j)] -= 1;
                    t[static_cast<std::size_t>(i)] -= 1;
                    rk.add_term(t, Ajik / (4 * dk));
                }
                const Rational Akij = iso.triple(k, i, j);
                if (Akij != 0) {
                    Exponents t(static_cast<std::size_t>(q), 0);
                    t[static_cast<std::size_t>(j)] += 1;
                    t[static_cast<std::size_t>(k)] -= 1;
                    t[static_cast<std::size_t>(i)] -= 1;
                    rk.add_term(t, -Akij / (2 * dk));
                }
            }
        }
    }

    MultiPoly S(q);
    for (int i = 0; i < q; ++i)
        S += Rational(iso.dims[static_cast<std::size_t>(i)]) * r[static_cast<std::size_t>(i)];

    const ClearingFactor factor = clearing_factor(spec);
    std::vector<MultiPoly> comps;
    comps.reserve(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        MultiPoly vi = s * r[static_cast<std::size_t>(i)] + Rational(2, n) * S;
        vi = vi.shifted(unit(i), 1);               // times x_i
        vi = vi.shifted(factor.exps, factor.scalar);
        if (!vi.is_polynomial())
            throw NonPolynomialResult("clearing factor does not cancel all denominators for " + spec.canonical());
        comps.push_back(std::move(vi));
    }
    return PolyVectorField(q, std::move(comps));
}

PolyVectorField transcribed_system(const SpaceSpec& spec)
{
    if (std::holds_alternative<SpaceSpec::Gws>(spec.family))
        return transcribed_gws_x_system(spec);
    if (const auto* v = std::get_if<SpaceSpec::StiefelV2>(&spec.family))
        return transcribed_v2_x_system(v->n);
    if (const auto* s = std::get_if<SpaceSpec::StiefelBlock>(&spec.family))
        return transcribed_stiefel_x_system(s->k2, s->k3);
    return transcribed_flag_x_system(std::get<SpaceSpec::Flag4>(spec.family).id);
}

Rational recorded_constant(const SpaceSpec& spec)
{
    if (std::holds_alternative<SpaceSpec::Gws>(spec.family)) return Rational(1);
    if (std::holds_alternative<SpaceSpec::StiefelV2>(spec.family)) return Rational(1, 2);
    if (std::holds_alternative<SpaceSpec::StiefelBlock>(spec.family)) return Rational(-1);
    return Rational(2);
}

}  // namespace ricci
