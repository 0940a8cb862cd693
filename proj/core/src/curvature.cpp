#include "ricci/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace ricci {

namespace {

template <typename Real>
void check_positive(std::span<const Real> x, std::size_t q)
{
    if (x.size() != q) throw DegreeMismatch("metric length does not match summand count");
    for (Real v : x)
        if (!(v > 0)) throw NonPositiveMetric("metric coordinates must be strictly positive");
}

template <typename Real>
struct Ricci {
    std::vector<Real> r;
    Real scalar;
};

template <typename Real>
Ricci<Real> ricci_general_t(const IsotropyData& iso, std::span<const Real> x)
{
    const int q = iso.q;
    check_positive(x, static_cast<std::size_t>(q));
    std::vector<Real> r(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) {
        Real s1 = 0, s2 = 0;
        for (int j = 0; j < q; ++j) {
            for (int i = 0; i < q; ++i) {
                const Rational Ajik = iso.triple(j, i, k);
                if (Ajik != 0)
                    s1 += static_cast<Real>(to_long_double(Ajik)) * x[k] / (x[j] * x[i]);
                const Rational Akij = iso.triple(k, i, j);
                if (Akij != 0)
                    s2 += static_cast<Real>(to_long_double(Akij)) * x[j] / (x[k] * x[i]);
            }
        }
        const Real dk = static_cast<Real>(iso.dims[static_cast<std::size_t>(k)]);
        r[static_cast<std::size_t>(k)] = 1 / (2 * x[k]) + s1 / (4 * dk) - s2 / (2 * dk);
    }

    // independent scalar formula: S = 1/2 sum d_i/x_i - 1/4 sum_{ijk} A_ijk x_k/(x_i x_j),
    // the triple sum running over ordered index triples
    Real S = 0;
    for (int i = 0; i < q; ++i) S += static_cast<Real>(iso.dims[static_cast<std::size_t>(i)]) / (2 * x[i]);
    for (const auto& [key, A] : iso.triples) {
        const Real a = static_cast<Real>(to_long_double(A));
        const int i = key[0], j = key[1], k = key[2];
        Real sum = 0;
        if (i == j && j == k) {
            sum = 1 / x[i];
        } else if (i == j) {  // (a,a,b)
            sum = x[k] / (x[i] * x[i]) + 2 / x[k];
        } else if (j == k) {  // (a,b,b)
            sum = x[i] / (x[j] * x[j]) + 2 / x[i];
        } else {
            sum = 2 * x[k] / (x[i] * x[j]) + 2 * x[j] / (x[i] * x[k]) + 2 * x[i] / (x[j] * x[k]);
        }
        S -= a * sum / 4;
    }
    return {std::move(r), S};
}

template <typename Real, typename Out>
Out finalize(std::vector<Real> r, Real scalar)
{
    Out out;
    Real mean = 0;
    for (Real v : r) mean += v;
    mean /= static_cast<Real>(r.size());
    Real res = 0;
    for (Real v : r) res = std::max<Real>(res, std::abs(v - mean));
    out.components.assign(r.begin(), r.end());
    out.scalar = scalar;
    out.einstein_constant = mean;
    out.einstein_residual = res;
    return out;
}

}  // namespace

RicciData ricci_general(const IsotropyData& iso, std::span<const double> x)
{
    auto [r, S] = ricci_general_t<double>(iso, x);
    return finalize<double, RicciData>(std::move(r), S);
}

RicciDataExt ricci_general_ext(const IsotropyData& iso, std::span<const long double> x)
{
    auto [r, S] = ricci_general_t<long double>(iso, x);
    return finalize<long double, RicciDataExt>(std::move(r), S);
}

RicciData ricci_wallach(const IsotropyData& iso, std::span<const double> x)
{
    if (!iso.wallach_a) throw DegreeMismatch("ricci_wallach needs three-summand data with a_i");
    check_positive(x, 3);
    const auto& aq = *iso.wallach_a;
    const double A = to_double(iso.triple(0, 1, 2));
    std::vector<double> r(3);
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double ai = to_double(aq[static_cast<std::size_t>(i)]);
        r[static_cast<std::size_t>(i)] =
            1 / (2 * x[i]) + (ai / 2) * (x[i] / (x[j] * x[k]) - x[k] / (x[i] * x[j]) - x[j] / (x[i] * x[k]));
    }
    double S = 0;
    for (int i = 0; i < 3; ++i) S += static_cast<double>(iso.dims[static_cast<std::size_t>(i)]) / (2 * x[i]);
    S -= (A / 2) * (x[0] / (x[1] * x[2]) + x[1] / (x[0] * x[2]) + x[2] / (x[0] * x[1]));
    return finalize<double, RicciData>(std::move(r), S);
}

RicciData ricci_v2(int n, std::span<const double> x)
{
    check_positive(x, 3);
    const double nn = n;
    std::vector<double> r(3);
    r[0] = 1 / (2 * x[0]) - 0.25 * (x[1] / (x[0] * x[2]) + x[2] / (x[0] * x[1]) - x[0] / (x[1] * x[2]));
    r[1] = 1 / (2 * x[1]) - (x[0] / (x[1] * x[2]) + x[2] / (x[0] * x[1]) - x[1] / (x[0] * x[2])) / (4 * (nn - 2));
    r[2] = 1 / (2 * x[2]) - (x[0] / (x[1] * x[2]) + x[1] / (x[0] * x[2]) - x[2] / (x[0] * x[1])) / (4 * (nn - 2));
    const double S = 1 / (2 * x[0])
        + 0.25 * (-x[1] / (x[0] * x[2]) - x[2] / (x[0] * x[1]) - x[0] / (x[1] * x[2]))
        + (nn - 2) / 2 * (1 / x[2] + 1 / x[1]);
    return finalize<double, RicciData>(std::move(r), S);
}

RicciData ricci_stiefel_block(int k2i, int k3i, std::span<const double> x)
{
    check_positive(x, 4);
    const double k2 = k2i, k3 = k3i;
    const double nm2 = k2 + k3 - 1;  // n - 2 with n = 1 + k2 + k3
    const double x2 = x[0], x12 = x[1], x13 = x[2], x23 = x[3];
    std::vector<double> r(4);
    r[0] = (k2 - 2) / (4 * nm2 * x2)
         + (x2 / (x12 * x12) + k3 * x2 / (x23 * x23)) / (4 * nm2);
    r[1] = 1 / (2 * x12)
         + k3 / (4 * nm2) * (x12 / (x13 * x23) - x13 / (x12 * x23) - x23 / (x12 * x13))
         - (k2 - 1) * x2 / (x12 * x12) / (4 * nm2);
    r[3] = 1 / (2 * x23)
         + (x23 / (x13 * x12) - x13 / (x12 * x23) - x12 / (x23 * x13)) / (4 * nm2)
         - (k2 - 1) * x2 / (x23 * x23) / (4 * nm2);
    r[2] = 1 / (2 * x13)
         + k2 / (4 * nm2) * (x13 / (x12 * x23) - x12 / (x13 * x23) - x23 / (x12 * x13));

    // trace-consistent scalar; the grouped A_2.. terms carry both the 2/x2
    // and the x2/x_ab^2 halves
    const double d2 = k2 * (k2 - 1) / 2, d12 = k2, d13 = k3, d23 = k2 * k3;
    const double A222 = k2 >= 3 ? k2 * (k2 - 1) * (k2 - 2) / (2 * nm2) : 0.0;
    const double A212 = k2 * (k2 - 1) / (2 * nm2);
    const double A223 = k2 * k3 * (k2 - 1) / (2 * nm2);
    const double A123 = k2 * k3 / (2 * nm2);
    double S = (d2 / x2 + d12 / x12 + d13 / x13 + d23 / x23) / 2;
    S -= A222 / (4 * x2);
    S -= (A212 * (2 / x2 + x2 / (x12 * x12)) + A223 * (2 / x2 + x2 / (x23 * x23))) / 4;
    S -= (A123 / 2) * (x12 / (x13 * x23) + x13 / (x12 * x23) + x23 / (x12 * x13));
    return finalize<double, RicciData>(std::move(r), S);
}

RicciData ricci_flag4(FlagId id, std::span<const double> x)
{
    check_positive(x, 4);
    const auto iso = catalog_lookup(SpaceSpec::flag(id));
    const double d1 = static_cast<double>(iso.dims[0]), d2 = static_cast<double>(iso.dims[1]),
                 d3 = static_cast<double>(iso.dims[2]), d4 = static_cast<double>(iso.dims[3]);
    const double A112 = to_double(iso.triple(0, 0, 1)), A123 = to_double(iso.triple(0, 1, 2)),
                 A134 = to_double(iso.triple(0, 2, 3)), A224 = to_double(iso.triple(1, 1, 3));
    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
    std::vector<double> r(4);
    r[0] = 1 / (2 * x1) - A112 / (2 * d1) * x2 / (x1 * x1)
         + A123 / (2 * d1) * (x1 / (x2 * x3) - x2 / (x1 * x3) - x3 / (x1 * x2))
         + A134 / (2 * d1) * (x1 / (x3 * x4) - x3 / (x1 * x4) - x4 / (x1 * x3));
    r[1] = 1 / (2 * x2) - A224 / (2 * d2) * x4 / (x2 * x2)
         + A112 / (4 * d2) * (x2 / (x1 * x1) - 2 / x2)
         + A123 / (2 * d2) * (x2 / (x1 * x3) - x1 / (x2 * x3) - x3 / (x1 * x2));
    r[2] = 1 / (2 * x3)
         + A123 / (2 * d3) * (x3 / (x1 * x2) - x2 / (x1 * x3) - x1 / (x2 * x3))
         + A134 / (2 * d3) * (x3 / (x1 * x4) - x1 / (x3 * x4) - x4 / (x1 * x3));
    r[3] = 1 / (2 * x4)
         + A224 / (4 * d4) * (x4 / (x2 * x2) - 2 / x4)
         + A134 / (2 * d4) * (x4 / (x1 * x3) - x1 / (x3 * x4) - x3 / (x1 * x4));
    double S = (d1 / x1 + d2 / x2 + d3 / x3 + d4 / x4) / 2
        + A112 / 4 * (-2 / x2 - x2 / (x1 * x1))
        + A123 / 2 * (-x1 / (x2 * x3) - x2 / (x1 * x3) - x3 / (x1 * x2))
        + A224 / 4 * (-2 / x4 - x4 / (x2 * x2))
        + A134 / 2 * (-x1 / (x3 * x4) - x3 / (x1 * x4) - x4 / (x1 * x3));
    return finalize<double, RicciData>(std::move(r), S);
}

RicciData ricci_specialized(const SpaceSpec& spec, std::span<const double> x)
{
    if (std::holds_alternative<SpaceSpec::Gws>(spec.family))
        return ricci_wallach(catalog_lookup(spec), x);
    if (const auto* v = std::get_if<SpaceSpec::StiefelV2>(&spec.family))
        return ricci_v2(v->n, x);
    if (const auto* s = std::get_if<SpaceSpec::StiefelBlock>(&spec.family))
        return ricci_stiefel_block(s->k2, s->k3, x);
    return ricci_flag4(std::get<SpaceSpec::Flag4>(spec.family).id, x);
}

CompiledIsotropy::CompiledIsotropy(const IsotropyData& iso)
    : q_(iso.q), n_(static_cast<double>(iso.manifold_dim()))
{
    if (q_ < 1 || q_ > 8) throw DegreeMismatch("compiled tables support up to eight summands");
    dims_.reserve(static_cast<std::size_t>(q_));
    for (long long d : iso.dims) dims_.push_back(static_cast<double>(d));
    const std::size_t q3 = static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_)
                           * static_cast<std::size_t>(q_);
    t1_.assign(q3, 0.0);
    t2_.assign(q3, 0.0);
    for (int k = 0; k < q_; ++k) {
        const double dk = dims_[static_cast<std::size_t>(k)];
        for (int j = 0; j < q_; ++j) {
            for (int i = 0; i < q_; ++i) {
                const std::size_t at = static_cast<std::size_t>((k * q_ + j) * q_ + i);
                t1_[at] = to_double(iso.triple(j, i, k)) / (4 * dk);
                t2_[at] = to_double(iso.triple(k, i, j)) / (2 * dk);
            }
        }
    }
}

void CompiledIsotropy::components(std::span<const double> x, std::span<double> r) const
{
    double inv[8];
    for (int i = 0; i < q_; ++i) inv[i] = 1.0 / x[static_cast<std::size_t>(i)];
    for (int k = 0; k < q_; ++k) {
        double s1 = 0, s2 = 0;
        const std::size_t base = static_cast<std::size_t>(k * q_) * static_cast<std::size_t>(q_);
        for (int j = 0; j < q_; ++j) {
            for (int i = 0; i < q_; ++i) {
                const std::size_t at = base + static_cast<std::size_t>(j * q_ + i);
                s1 += t1_[at] * inv[j] * inv[i];
                s2 += t2_[at] * x[static_cast<std::size_t>(j)] * inv[i];
            }
        }
        r[static_cast<std::size_t>(k)] =
            0.5 * inv[k] + s1 * x[static_cast<std::size_t>(k)] - s2 * inv[k];
    }
}

}  // namespace ricci
