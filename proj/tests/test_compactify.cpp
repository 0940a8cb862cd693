#include "ricci/compactify.hpp"

#include "ricci/flowfield.hpp"
#include "ricci/reference_systems.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ricci;
using doctest::Approx;

namespace {

PolyVectorField reduced_u1(const SpaceSpec& spec, RicciSign sign = RicciSign::positive)
{
    const auto field = polynomial_system(spec, sign);
    return infinity_system(compactified_field(field, Chart{ChartKind::U, 1, field.vars}));
}

MultiPoly random_poly(std::mt19937& rng, int vars, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-5, 5);
    MultiPoly p(vars);
    for (int t = 0; t < 8; ++t) {
        Exponents e(static_cast<std::size_t>(vars));
        int total = 0;
        for (auto& v : e) {
            v = deg(rng);
            total += v;
        }
        if (total > max_deg) continue;
        p.add_term(e, Rational(num(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("the last chart leaves the field verbatim")
{
    const auto field = polynomial_system(SpaceSpec::gws(7));
    const auto same = compactified_field(field, Chart{ChartKind::U, 4, 3});
    CHECK(same.components == field.components);
    const auto flag = polynomial_system(SpaceSpec::flag(FlagId::F4));
    const auto same5 = compactified_field(flag, Chart{ChartKind::U, 5, 4});
    CHECK(same5.components == flag.components);
}

TEST_CASE("V charts equal U charts times (-1)^(d-1), exactly")
{
    const auto field = polynomial_system(SpaceSpec::gws(9));  // degree 3
    const auto u = compactified_field(field, Chart{ChartKind::U, 2, 3});
    const auto v = compactified_field(field, Chart{ChartKind::V, 2, 3});
    CHECK(u.components == v.components);  // (-1)^2 = 1 for degree 3

    const auto block = polynomial_system(SpaceSpec::stiefel_block(4, 2));  // degree 6
    const auto ub = compactified_field(block, Chart{ChartKind::U, 1, 4});
    const auto vb = compactified_field(block, Chart{ChartKind::V, 1, 4});
    for (std::size_t i = 0; i < ub.components.size(); ++i) {
        MultiPoly neg = ub.components[i];
        neg *= Rational(-1);
        CHECK(vb.components[i] == neg);
    }
}

TEST_CASE("so-family infinity displays match the compactified construction")
{
    // constants are 1 for the fixed spaces except the second component of
    // gws12, whose tabulated prefactor is 3x off a single global constant
    for (int id : {6, 7, 8, 9, 11, 13, 14, 15}) {
        const auto red = reduced_u1(SpaceSpec::gws(id));
        const auto disp = gws_chart_display(id);
        const auto c = proportionality_constant(disp, red);
        REQUIRE_MESSAGE(c.has_value(), "gws" << id);
        CHECK(*c == Rational(1));
    }
    const auto red12 = reduced_u1(SpaceSpec::gws(12));
    const auto disp12 = gws_chart_display(12);
    const auto c1 = proportionality_constant(disp12.components[0], red12.components[0]);
    const auto c2 = proportionality_constant(disp12.components[1], red12.components[1]);
    REQUIRE(c1.has_value());
    REQUIRE(c2.has_value());
    CHECK(*c1 == Rational(1));
    CHECK(*c2 == Rational(3));
}

TEST_CASE("parameterized chart displays match with the expected constants")
{
    for (const auto& [k, l, m] : {std::array{2, 2, 2}, std::array{1, 2, 3}, std::array{3, 4, 5}}) {
        const auto red = reduced_u1(SpaceSpec::gws(1, k, l, m));
        const auto disp = gws1_chart_display(k, l, m);
        const auto c = proportionality_constant(disp, red);
        REQUIRE(c.has_value());
        CHECK(*c == Rational(2 * (k + l + m - 2)));
    }
    for (int l : {2, 3, 5}) {
        const auto red = reduced_u1(SpaceSpec::gws(4, 0, l));
        const auto c = proportionality_constant(gws4_chart_display(l), red);
        REQUIRE(c.has_value());
        CHECK(*c == Rational(4 * l));
    }
}

TEST_CASE("v2 chart system matches all three components including the infinity slot")
{
    for (int n : {4, 5, 9}) {
        const auto field = polynomial_system(SpaceSpec::v2(n), RicciSign::positive);
        const auto chart = compactified_field(field, Chart{ChartKind::U, 1, 3});
        const auto c = proportionality_constant(v2_chart_display(n), chart);
        REQUIRE(c.has_value());
        CHECK(*c == Rational(1, 2));
    }
}

TEST_CASE("block chart system matches in the tabulated variable order")
{
    // the tabulated charts list the 23 summand before 13
    const std::vector<int> perm{0, 1, 3, 2};
    for (const auto& [k2, k3] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{6, 6}}) {
        const auto field = polynomial_system(SpaceSpec::stiefel_block(k2, k3), RicciSign::positive);
        const auto chart = compactified_field(field.permuted(perm), Chart{ChartKind::U, 1, 4});
        const auto c = proportionality_constant(stiefel_chart_display(k2, k3), chart);
        REQUIRE(c.has_value());
        CHECK(*c == Rational(-1));
    }
    for (int k2 : {2, 6, 9}) {
        const auto field = polynomial_system(SpaceSpec::stiefel_block(k2, k2), RicciSign::positive);
        const auto red = infinity_system(compactified_field(field.permuted(perm), Chart{ChartKind::U, 1, 4}));
        const auto c = proportionality_constant(stiefel_diag_chart_display(k2), red);
        REQUIRE(c.has_value());
        CHECK(*c == Rational(-1));
    }
}

TEST_CASE("flag chart systems match the three tabulated components")
{
    for (FlagId id : {FlagId::F4, FlagId::E7, FlagId::E8a3, FlagId::E8a6}) {
        const auto field = polynomial_system(SpaceSpec::flag(id), RicciSign::positive);
        const auto chart = compactified_field(field, Chart{ChartKind::U, 1, 4});
        const auto disp = flag_chart_display(id);
        for (int i = 0; i < 3; ++i) {
            const auto c = proportionality_constant(disp.components[static_cast<std::size_t>(i)],
                                                    chart.components[static_cast<std::size_t>(i)]);
            REQUIRE(c.has_value());
            CHECK(*c == Rational(2));
        }
    }
}

TEST_CASE("known singularities at infinity are zeros of the reduced systems")
{
    const auto g7 = reduced_u1(SpaceSpec::gws(7)).normalized();
    for (const auto& z : {std::vector<double>{1, 1}, {2, 1}, {1, 2}, {0.5, 0.5}}) {
        for (const auto& comp : g7.components)
            CHECK(std::abs(comp.evaluate<double>(z)) < 1e-13);
    }
    for (int n : {5, 8}) {
        const auto red = reduced_u1(SpaceSpec::v2(n)).normalized();
        const double t = (n - 1) / (2.0 * (n - 2));
        const std::vector<double> z{t, t};
        for (const auto& comp : red.components) CHECK(std::abs(comp.evaluate<double>(z)) < 1e-13);
    }
    const auto f4 = reduced_u1(SpaceSpec::flag(FlagId::F4)).normalized();
    const std::vector<double> kahler{2, 3, 4};
    for (const auto& comp : f4.components) CHECK(std::abs(comp.evaluate<double>(kahler)) < 1e-12);
}

TEST_CASE("generic fields without an infinity slice are rejected")
{
    // a constant field passed through the finite chart has a last component
    // free of the would-be infinity parameter
    const MultiPoly one = MultiPoly::constant(3, 1);
    const PolyVectorField constant_field(3, {one, one, one});
    const auto finite = compactified_field(constant_field, Chart{ChartKind::U, 4, 3});
    CHECK_THROWS_AS(infinity_system(finite), DegreeMismatch);
}

TEST_CASE("chart coordinates and their inverse")
{
    const Chart u1{ChartKind::U, 1, 3};
    const auto p = chart_coords(std::vector<double>{1, 0.3, 0.9}, u1);
    CHECK(p.z == std::vector<double>{0.3, 0.9, 1.0});
    const auto p2 = chart_coords(std::vector<double>{2, 2, 2}, u1);
    CHECK(p2.z == std::vector<double>{1, 1, 0.5});

    std::mt19937 rng(77);
    std::uniform_real_distribution<double> dist(0.2, 3.0);
    for (int chart_index = 1; chart_index <= 4; ++chart_index) {
        const Chart chart{ChartKind::U, chart_index, 3};
        for (int t = 0; t < 10; ++t) {
            const std::vector<double> x{dist(rng), dist(rng), dist(rng)};
            const auto back = chart_to_state(chart_coords(x, chart), chart);
            for (int i = 0; i < 3; ++i) CHECK(back[static_cast<std::size_t>(i)] == Approx(x[static_cast<std::size_t>(i)]).epsilon(1e-14));
        }
    }
    // negative defining coordinate lands in the V chart instead
    CHECK_THROWS_AS(chart_coords(std::vector<double>{-1, 1, 1}, u1), ChartDomain);
    const Chart v1{ChartKind::V, 1, 3};
    const std::vector<double> xneg{-2, 1, 1};
    const auto pv = chart_coords(xneg, v1);
    const auto backv = chart_to_state(pv, v1);
    for (int i = 0; i < 3; ++i) CHECK(backv[static_cast<std::size_t>(i)] == Approx(xneg[static_cast<std::size_t>(i)]).epsilon(1e-14));
    CHECK_THROWS_AS(chart_to_state(ChartPoint{{1.0, 1.0, 0.0}}, u1), ChartDomain);
}

TEST_CASE("compactified trajectories correspond to chart-projected ones up to a positive factor")
{
    // pushforward of the field under the chart map, times z_q^(d-1),
    // equals the cleared compactified field
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> dist(0.3, 2.0);
    for (int trial = 0; trial < 12; ++trial) {
        PolyVectorField field(3, {random_poly(rng, 3, 3), random_poly(rng, 3, 3), random_poly(rng, 3, 3)});
        const int d = std::max(field.degree(), 1);
        const Chart u1{ChartKind::U, 1, 3};
        const auto cf = compactified_field(field, u1);

        const std::vector<double> x{dist(rng), dist(rng), dist(rng)};
        const auto p = chart_coords(x, u1);
        const auto px = field.evaluate<double>(x);

        // d/dt of (x2/x1, x3/x1, 1/x1) along the flow
        const std::vector<double> pushforward{
            px[1] / x[0] - x[1] * px[0] / (x[0] * x[0]),
            px[2] / x[0] - x[2] * px[0] / (x[0] * x[0]),
            -px[0] / (x[0] * x[0]),
        };
        const double zq = p.z[2];
        const double scale = std::pow(zq, d - 1);
        const auto cfv = cf.evaluate<double>(p.z);
        for (int i = 0; i < 3; ++i)
            CHECK(cfv[static_cast<std::size_t>(i)]
                  == Approx(scale * pushforward[static_cast<std::size_t>(i)]).epsilon(1e-10).scale(1.0));
    }
}
