#include "ricci/compactify.hpp"

#include "ricci/errors.hpp"

#include <cmath>

namespace ricci {

namespace {

void check_chart(const Chart& chart, int q)
{
    if (chart.dimension != q)
        throw DegreeMismatch("chart dimension does not match the field");
    if (chart.index < 1 || chart.index > q + 1)
        throw ChartDomain("chart index out of range");
}

}  // namespace

std::string Chart::name() const
{
    return (kind == ChartKind::U ? "U" : "V") + std::to_string(index);
}

PolyVectorField compactified_field(const PolyVectorField& field, const Chart& chart)
{
    const int q = field.vars;
    check_chart(chart, q);
    for (const auto& c : field.components)
        if (!c.is_polynomial())
            throw DegreeMismatch("compactified_field requires a polynomial field");

    const int d = field.degree();
    const Rational flip = (chart.kind == ChartKind::V && (d - 1) % 2 != 0) ? Rational(-1) : Rational(1);

    if (chart.index == q + 1) {
        PolyVectorField out = field;
        if (flip != 1)
            for (auto& c : out.components) c *= flip;
        return out;
    }

    const int i = chart.index - 1;  // 0-based distinguished slot
    // x_i = 1/z_q, x_{j_s} = z_s/z_q for the remaining coordinates in order
    std::vector<std::pair<Rational, Exponents>> subs(static_cast<std::size_t>(q));
    {
        Exponents e(static_cast<std::size_t>(q), 0);
        e[static_cast<std::size_t>(q - 1)] = -1;
        subs[static_cast<std::size_t>(i)] = {Rational(1), e};
        int slot = 0;
        for (int j = 0; j < q; ++j) {
            if (j == i) continue;
            Exponents ej(static_cast<std::size_t>(q), 0);
            ej[static_cast<std::size_t>(slot)] = 1;
            ej[static_cast<std::size_t>(q - 1)] = -1;
            subs[static_cast<std::size_t>(j)] = {Rational(1), ej};
            ++slot;
        }
    }

    std::vector<MultiPoly> composed;
    composed.reserve(static_cast<std::size_t>(q));
    for (const auto& c : field.components)
        composed.push_back(c.substitute_monomials(q, subs));

    Exponents zq_d(static_cast<std::size_t>(q), 0);
    zq_d[static_cast<std::size_t>(q - 1)] = d;

    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(q));
    int slot = 0;
    for (int j = 0; j < q; ++j) {
        if (j == i) continue;
        MultiPoly zs = MultiPoly::variable(q, slot);
        MultiPoly comp = composed[static_cast<std::size_t>(j)] - zs * composed[static_cast<std::size_t>(i)];
        comp = comp.shifted(zq_d, flip);
        if (!comp.is_polynomial())
            throw DegreeMismatch("field degree inconsistent with the clearing power");
        out.push_back(std::move(comp));
        ++slot;
    }
    Exponents zq_d1 = zq_d;
    zq_d1[static_cast<std::size_t>(q - 1)] = d + 1;
    MultiPoly last = composed[static_cast<std::size_t>(i)].shifted(zq_d1, -flip);
    if (!last.is_polynomial())
        throw DegreeMismatch("field degree inconsistent with the clearing power");
    out.push_back(std::move(last));
    return PolyVectorField(q, std::move(out));
}

PolyVectorField infinity_system(const PolyVectorField& cfield)
{
    const int q = cfield.vars;
    // the last component must vanish identically on the infinity slice,
    // i.e. carry the infinity parameter as a factor; fields from the finite
    // chart do not and are rejected
    for (const auto& [e, c] : cfield.components.back().terms())
        if (e[static_cast<std::size_t>(q - 1)] < 1)
            throw DegreeMismatch("infinity_system needs a field from a chart with an infinity slice");
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(q - 1));
    for (int s = 0; s + 1 < q; ++s)
        out.push_back(cfield.components[static_cast<std::size_t>(s)].eliminate_variable(q - 1));
    return PolyVectorField(q - 1, std::move(out));
}

ChartPoint chart_coords(std::span<const double> x, const Chart& chart)
{
    const int q = chart.dimension;
    if (static_cast<int>(x.size()) != q) throw DegreeMismatch("point dimension does not match the chart");

    if (chart.index == q + 1) {
        if (chart.kind == ChartKind::V)
            throw ChartDomain("finite points project to the positive hemisphere only");
        return {std::vector<double>(x.begin(), x.end())};
    }

    const int i = chart.index - 1;
    const double xi = x[static_cast<std::size_t>(i)];
    const double sign = chart.kind == ChartKind::U ? 1.0 : -1.0;
    if (!(sign * xi > 0))
        throw ChartDomain("point is not in chart " + chart.name());

    std::vector<double> z;
    z.reserve(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        if (j == i) continue;
        z.push_back(sign * x[static_cast<std::size_t>(j)] / xi);
    }
    z.push_back(sign / xi);
    return {std::move(z)};
}

std::vector<double> chart_to_state(const ChartPoint& p, const Chart& chart)
{
    const int q = chart.dimension;
    if (static_cast<int>(p.z.size()) != q) throw DegreeMismatch("point dimension does not match the chart");
    if (chart.index == q + 1) {
        if (chart.kind == ChartKind::V) throw ChartDomain("finite chart has no negative patch image");
        return p.z;
    }
    const double zq = p.z[static_cast<std::size_t>(q - 1)];
    if (zq == 0) throw ChartDomain("point at infinity has no finite preimage");
    const double sign = chart.kind == ChartKind::U ? 1.0 : -1.0;
    std::vector<double> x(static_cast<std::size_t>(q));
    const int i = chart.index - 1;
    x[static_cast<std::size_t>(i)] = sign / zq;
    int slot = 0;
    for (int j = 0; j < q; ++j) {
        if (j == i) continue;
        x[static_cast<std::size_t>(j)] = p.z[static_cast<std::size_t>(slot)] / zq;
        ++slot;
    }
    return x;
}

}  // namespace ricci
