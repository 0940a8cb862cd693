#include "ricci/reference_systems.hpp"

#include "ricci/errors.hpp"

namespace ricci {

namespace {

MultiPoly operator*(long long c, MultiPoly p) { return p *= Rational(c); }
MultiPoly sq(const MultiPoly& p) { return p * p; }

struct Vars {
    int q;
    MultiPoly x(int i) const { return MultiPoly::variable(q, i); }
    MultiPoly c(const Rational& r) const { return MultiPoly::constant(q, r); }
    MultiPoly c(long long r) const { return MultiPoly::constant(q, Rational(r)); }
};

}  // namespace

PolyVectorField transcribed_gws_x_system(const SpaceSpec& spec)
{
    const IsotropyData iso = catalog_lookup(spec);
    if (!iso.wallach_a) throw NotTranscribed("not a three-summand space: " + spec.canonical());
    const Rational d1(iso.dims[0]), d2(iso.dims[1]), d3(iso.dims[2]);
    const Rational a1 = (*iso.wallach_a)[0], a2 = (*iso.wallach_a)[1], a3 = (*iso.wallach_a)[2];
    Vars V{3};
    const MultiPoly x1 = V.x(0), x2 = V.x(1), x3 = V.x(2);

    MultiPoly P1 = x1 * (sq(x2) * (-2 * a1 * d1) + sq(x3) * (-2 * a1 * d1)
        + sq(x1) * (a1 * d2) + sq(x2) * (-a1 * d2) + sq(x3) * (-a1 * d2)
        + sq(x1) * (a1 * d3) + sq(x2) * (-a1 * d3) + sq(x3) * (-a1 * d3)
        + x2 * x3 * (2 * d1) + x1 * x3 * d2 + x2 * x3 * d2 + x1 * x2 * d3 + x2 * x3 * d3);
    MultiPoly P2 = x2 * (sq(x1) * (-a1 * d1) + sq(x2) * (-a1 * d1) + sq(x3) * (-a1 * d1)
        + sq(x1) * (-a2 * d1) + sq(x2) * (a2 * d1) + sq(x3) * (-a2 * d1)
        + sq(x1) * (-a2 * d2) + sq(x2) * (a2 * d2) + sq(x3) * (-a2 * d2)
        + sq(x1) * (-a2 * d3) + sq(x2) * (a2 * d3) + sq(x3) * (-a2 * d3)
        + x1 * x3 * d1 + x2 * x3 * d1 + x1 * x3 * (2 * d2) + x1 * x2 * d3 + x1 * x3 * d3);
    MultiPoly P3 = x3 * (sq(x1) * (-a1 * d1) + sq(x2) * (-a1 * d1) + sq(x3) * (-a1 * d1)
        + sq(x1) * (-a3 * d1) + sq(x2) * (-a3 * d1) + sq(x3) * (a3 * d1)
        + sq(x1) * (-a3 * d2) + sq(x2) * (-a3 * d2) + sq(x3) * (a3 * d2)
        + sq(x1) * (-a3 * d3) + sq(x2) * (-a3 * d3) + sq(x3) * (a3 * d3)
        + x1 * x2 * d1 + x2 * x3 * d1 + x1 * x2 * d2 + x1 * x3 * d2 + x1 * x2 * (2 * d3));
    return PolyVectorField(3, {P1, P2, P3});
}

PolyVectorField transcribed_v2_x_system(int n_)
{
    const Rational n(n_);
    Vars V{3};
    const MultiPoly x0 = V.x(0), x1 = V.x(1), x2 = V.x(2);
    MultiPoly P0 = (sq(x0) * n + x0 * x1 * n + x0 * x2 * n - sq(x1) * n + x1 * x2 * (2 * n) - sq(x2) * n
        - 2 * sq(x0) - 2 * (x0 * x1) - 2 * (x0 * x2) + sq(x1) - 2 * (x1 * x2) + sq(x2)) * (n - 2) * x0;
    MultiPoly P1 = (x0 * x1 * (2 * n * n) + x0 * x2 * (6 * n * n) - sq(x0) * (3 * n) - x0 * x1 * (8 * n)
        - x0 * x2 * (22 * n) + sq(x1) * n + x1 * x2 * (2 * n) - sq(x2) * (3 * n)
        + 5 * sq(x0) + 8 * (x0 * x1) + 20 * (x0 * x2) - sq(x1) - 4 * (x1 * x2) + 5 * sq(x2))
        * Rational(1, 2) * x1;
    MultiPoly P2 = (x0 * x1 * (6 * n * n) + x0 * x2 * (2 * n * n) - sq(x0) * (3 * n) - x0 * x1 * (22 * n)
        - x0 * x2 * (8 * n) - sq(x1) * (3 * n) + x1 * x2 * (2 * n) + sq(x2) * n
        + 5 * sq(x0) + 20 * (x0 * x1) + 8 * (x0 * x2) + 5 * sq(x1) - 4 * (x1 * x2) - sq(x2))
        * Rational(1, 2) * x2;
    return PolyVectorField(3, {P0, P1, P2});
}

PolyVectorField transcribed_stiefel_x_system(int k2_, int k3_)
{
    const Rational k2(k2_), k3(k3_);
    Vars V{4};
    // catalog order (x2, x12, x13, x23)
    const MultiPoly X2 = V.x(0), X12 = V.x(1), X13 = V.x(2), X23 = V.x(3);
    const MultiPoly one = V.c(1);

    MultiPoly P2 = 2 * (X2
        * (X12 * X2 * X23 * (k2 * k3) * (X12 * X13 * (2 * (k2 + k3 - 1)) - sq(X12) - sq(X13))
           + sq(X23) * (sq(X12) * X13 * ((k2 - 2) * (k2 * (k2 + k3) + k3))
                        + X12 * X2 * (2 * (k2 + k3 - 1)) * (X13 * k2 + X12 * k3)
                        + X13 * sq(X2) * (k2 * k3 + k2 + k3))
           + sq(X12) * X13 * sq(X2) * (k3 * (k2 * k3 + k2 + k3))
           + X12 * X2 * sq(X23) * X23 * (-k2 * k3)));
    MultiPoly P12 = X12 * (X13 * sq(X23) * (k2 * k2 * k2) * (sq(X12) + X12 * X2 * 2 - sq(X2))
        + (X12 * X2 * X23 * (k2 * k2 * k3) * (sq(X12) + X12 * X13 * 4 - sq(X13))
           - sq(X12) * X13 * sq(X2) * (k2 * k2 * k3)
           - X13 * sq(X23) * (k2 * k2) * ((3 * X12 - X2) * (X12 - X2 * (2 * k3 + 1)))
           - X12 * X2 * sq(X23) * X23 * (k2 * k2 * k3))
        + (X12 * X2 * X23 * (2 * k2 * k3 * k3) * (sq(X12) + X12 * X13 * 2 - sq(X13 - X23))
           + X12 * X2 * (k2 * k3) * (X12 * X13 * X2 + sq(X23) * (4 * X12 + 6 * X13)
                                     - X23 * ((X12 + X13) * (X12 + X13 * 3)) - sq(X23) * X23 * 3)
           + X13 * sq(X23) * (2 * k2) * (sq(X12) - X12 * X2 * 3 + sq(X2)))
        + X2 * X23 * (2 * k3) * (X12 * k3 * (sq(X12) + X12 * X23 * 2 - sq(X13 - X23))
                                 - X12 * X23 * 2 * (X12 + X13) + X13 * X2 * X23));
    MultiPoly P13 = X13 * (X12 * X23 * (k2 * k2 * k2)
            * (sq(X12) * (-one) * X2 + X12 * X23 * (X13 + X2 * 2) + X2 * ((X13 - X23) * (X13 + X23)))
        - (X12 * X2 * (k2 * k2 * k3) * (X23 * 2 * (sq(X12) - X12 * X13 * 2 - sq(X13))
                                        + X12 * X13 * X2 - X12 * sq(X23) * 6 + sq(X23) * X23 * 2)
           + X23 * (k2 * k2) * (X13 * X23 * ((X12 - X2) * (X12 * 3 - X2))
                                + X12 * X2 * ((X12 - X13) * (X12 + X13)) + X12 * X2 * sq(X23)))
        + (sq(X12) * X2 * X23 * (4 * k2 * k3 * k3) * (X13 + X23)
           + X12 * X2 * (k2 * k3) * (X12 * X13 * X2 + sq(X23) * (6 * X12 + 4 * X13)
                                     - X12 * X23 * 4 * (X12 + X13) - sq(X23) * X23 * 4)
           + sq(X23) * k2 * (sq(X12) * X13 * 2 - X12 * X2 * 2 * (X12 + X13 * 2) + X13 * sq(X2)))
        + sq(X12) * X2 * sq(X23) * (8 * (k3 - 1) * k3));
    MultiPoly P23 = X23 * (X12 * X2 * X23 * (k2 * k2 + 4 * k2 * k3 + k2 + 2 * k3)
            * (X12 * X13 * (2 * (k2 + k3 - 1)) - sq(X12) - sq(X13))
        + sq(X12) * X13 * sq(X2) * ((1 - k2) * (k2 * k2 + 3 * k2 * k3 + k2 + 2 * k3))
        + X12 * X2 * sq(X23) * X23 * (k2 * k2 + k2 + 2 * k3)
        + sq(X23) * (X12 * X2 * (4 * (k2 + k3 - 1)) * (X13 * k2 + X12 * k3)
                     + sq(X12) * X13 * ((k2 - 2) * (k2 - 1) * k2)
                     + X13 * sq(X2) * (-(k2 - 1) * k2)));
    return PolyVectorField(4, {P2, P12, P13, P23});
}

PolyVectorField transcribed_flag_x_system(FlagId id)
{
    const IsotropyData iso = catalog_lookup(SpaceSpec::flag(id));
    const Rational d1(iso.dims[0]), d2(iso.dims[1]), d3(iso.dims[2]), d4(iso.dims[3]);
    const Rational A112 = iso.triple(0, 0, 1), A123 = iso.triple(0, 1, 2),
                   A134 = iso.triple(0, 2, 3), A224 = iso.triple(1, 1, 3);
    Vars V{4};
    const MultiPoly x1 = V.x(0), x2 = V.x(1), x3 = V.x(2), x4 = V.x(3);

    MultiPoly P1 = Rational(-1) * d2 * d3 * d4
        * x1 * (x2 * x4 * (x3 * (sq(x2) * (A112 * (3 * d1 + 2 * (d2 + d3 + d4)))
                                 + sq(x1) * (2 * d1) * (V.c(A112) - V.c(d2))
                                 - x1 * x2 * (2 * d1 * (2 * d1 + d2 + d3 + d4)))
                          + x1 * (2 * A123) * ((sq(x2) + sq(x3)) * (2 * d1)
                                              + (sq(x1) - sq(x2) - sq(x3)) * (-d2 - d3 - d4))
                          - sq(x1) * x2 * (2 * d1 * d3))
                + x1 * sq(x2) * 2 * (sq(x3) * (A134 * (2 * d1 + d2 + d3 + d4))
                                     - sq(x1) * (A134 * (d2 + d3 + d4))
                                     + x1 * x3 * (d1 * (A224 - d4)))
                + x1 * sq(x4) * (sq(x2) * (2 * A134 * (2 * d1 + d2 + d3 + d4))
                                 + x1 * x3 * (A224 * d1)));
    MultiPoly P2 = d1 * d3 * d4
        * x2 * (x2 * x4 * (x3 * (sq(x1) * (-2 * (A112 - d2) * (d1 + 2 * d2 + d3 + d4))
                                 + sq(x2) * (A112 * (d1 + d3 + d4))
                                 + x1 * x2 * (2 * d1 * d2))
                          + x1 * 2 * (sq(x1) * (-A123 * (d1 + 2 * d2 + d3 + d4))
                                      + sq(x2) * (A123 * (d1 + d3 + d4))
                                      + x1 * x2 * (d2 * d3))
                          - x1 * sq(x3) * (2 * A123 * (d1 + 2 * d2 + d3 + d4)))
                - x1 * sq(x2) * (2 * A134 * d2) * (sq(x1) + sq(x3) + sq(x4))
                - sq(x1) * x3 * sq(x4) * (A224 * (2 * d1 + 3 * d2 + 2 * (d3 + d4)))
                + sq(x1) * sq(x2) * x3 * (2 * d2 * (d4 - A224)));
    MultiPoly P3 = Rational(-1) * d1 * d2 * d4
        * x3 * (x2 * x4 * (x3 * d3 * ((sq(x1) * 2 + sq(x2)) * A112
                                      - x1 * 2 * (x2 * d1 + x1 * d2))
                          + x1 * 2 * ((sq(x1) + sq(x2)) * A123 - x1 * x2 * d3)
                                * (d1 + d2 + 2 * d3 + d4)
                          - x1 * sq(x3) * (2 * A123 * (d1 + d2 + d4)))
                + x1 * sq(x2) * 2 * (sq(x1) * (A134 * (d1 + d2 + 2 * d3 + d4))
                                     - sq(x3) * (A134 * (d1 + d2 + d4))
                                     + x1 * x3 * (d3 * (A224 - d4)))
                + x1 * sq(x4) * (sq(x2) * (2 * A134 * (d1 + d2 + 2 * d3 + d4))
                                 + x1 * x3 * (A224 * d3)));
    MultiPoly P4 = d1 * d2 * d3
        * x4 * (x2 * x4 * (-d4) * (x3 * (sq(x1) * (2 * (A112 - d2)) + sq(x2) * A112
                                         - x1 * x2 * (2 * d1))
                                   + x1 * (2 * A123) * (sq(x1) + sq(x2) + sq(x3))
                                   - sq(x1) * x2 * (2 * d3))
                - x1 * sq(x2) * (2 * (d1 + d2 + d3 + 2 * d4))
                      * ((sq(x1) + sq(x3)) * A134 + x1 * x3 * (A224 - d4))
                + x1 * sq(x4) * (d1 + d2 + d3)
                      * (sq(x2) * (2 * A134) + x1 * x3 * A224));
    return PolyVectorField(4, {P1, P2, P3, P4});
}

PolyVectorField gws_chart_display(int id)
{
    Vars V{2};
    const MultiPoly z1 = V.x(0), z2 = V.x(1);
    const MultiPoly one = V.c(1);
    switch (id) {
    case 6:
        return PolyVectorField(2, {
            28 * ((z1 - one) * z1 * (z1 - 2 * z2 + one)),
            (z2 * (sq(z1) - 12 * (z1 * (z2 - one)) + 5 * sq(z2) - V.c(5))) * Rational(14, 3)});
    case 7:
        return PolyVectorField(2, {
            16 * ((z1 - one) * z1 * (z1 - 3 * z2 + one)),
            16 * (z2 * ((-3) * (z1 * (z2 - one)) + sq(z2) - one))});
    case 8:
        return PolyVectorField(2, {
            (z1 * (3 * sq(z1) - 8 * (z1 * z2) + z2 * (z2 + V.c(8)) - V.c(3))) * Rational(27, 4),
            (z2 * (sq(z1) + 24 * (z1 * (z2 - one)) - 13 * sq(z2) + V.c(13))) * Rational(-9, 4)});
    case 9:
        return PolyVectorField(2, {
            ((z1 - one) * z1 * (4 * z1 - 9 * z2 + V.c(4))) * Rational(32, 3),
            ((z2 - one) * z2 * ((-9) * z1 + 4 * z2 + V.c(4))) * Rational(32, 3)});
    case 11:
        return PolyVectorField(2, {
            ((z1 - one) * z1 * (5 * z1 - 9 * z2 + V.c(5))) * Rational(35, 3),
            ((z2 - one) * z2 * ((-9) * z1 + 5 * z2 + V.c(5))) * Rational(35, 3)});
    case 12:
        // as tabulated; the second component's prefactor is 3x the value
        // consistent with a single global constant (see tests)
        return PolyVectorField(2, {
            ((z1 - one) * z1 * (2 * z1 - 5 * z2 + V.c(2))) * Rational(176, 5),
            (z2 * (sq(z1) + 15 * (z1 * (z2 - one)) - 7 * sq(z2) + V.c(7))) * Rational(-176, 5)});
    case 13:
        return PolyVectorField(2, {
            ((z1 - one) * z1 * (8 * z1 - 15 * z2 + V.c(8))) * Rational(64, 5),
            ((z2 - one) * z2 * ((-15) * z1 + 8 * z2 + V.c(8))) * Rational(64, 5)});
    case 14:
        return PolyVectorField(2, {
            4 * ((z1 - one) * z1 * (5 * z1 - 9 * z2 + V.c(5))),
            2 * (z2 * ((-18) * (z1 * z2) + 3 * (z1 * (z1 + V.c(6))) + 7 * sq(z2) - V.c(7)))});
    case 15:
        return PolyVectorField(2, {
            ((z1 - one) * z1 * (2 * z1 - 9 * z2 + V.c(2))) * Rational(8, 3),
            ((z2 - one) * z2 * ((-9) * z1 + 2 * z2 + V.c(2))) * Rational(8, 3)});
    default:
        throw NotTranscribed("no tabulated chart display for gws" + std::to_string(id));
    }
}

PolyVectorField gws1_chart_display(int k_, int l_, int m_)
{
    const Rational k(k_), l(l_), m(m_);
    Vars V{2};
    const MultiPoly z1 = V.x(0), z2 = V.x(1);
    const MultiPoly one = V.c(1);
    const Rational pref = -k * (l + m) - l * m;
    MultiPoly D1 = z1 * pref
        * ((z1 - one) * z2 * (2 * (k + l + m - 2)) + (sq(z1) - one) * (-l - m) + sq(z2) * (l - m));
    MultiPoly D2 = z2 * pref
        * ((z1 * z2 * 2 + sq(z1 - one) - sq(z2)) * k + (z1 * (z2 - one)) * (2 * (l - 2))
           - ((z1 * z2 * (-2)) + z1 * (z1 + V.c(2)) + sq(z2) - one) * m);
    return PolyVectorField(2, {D1, D2});
}

PolyVectorField gws4_chart_display(int l_)
{
    const Rational l(l_);
    Vars V{2};
    const MultiPoly z1 = V.x(0), z2 = V.x(1);
    const MultiPoly one = V.c(1);
    MultiPoly D1 = z1 * (2 * (3 * l * l - 1)) * ((z1 - one) * (z1 - 2 * z2 + one) * l + sq(z2));
    MultiPoly D2 = z2 * (3 * l * l - 1)
        * (((z1 * (z2 - one)) * (-2) + sq(z2) - one) * (2 * l) + sq(z1) + sq(z2) - one);
    return PolyVectorField(2, {D1, D2});
}

PolyVectorField v2_chart_display(int n_)
{
    const Rational n(n_);
    Vars V{3};
    const MultiPoly z1 = V.x(0), z2 = V.x(1), z3 = V.x(2);
    const MultiPoly one = V.c(1);
    MultiPoly D1 = z1 * Rational(1, 2) * (2 * n - 3)
        * ((sq(z1) - one) * (n - 1) - ((z1 - one) * z2) * (2 * (n - 2)) + sq(z2) * (n - 3));
    MultiPoly D2 = z2 * Rational(1, 2) * (2 * n - 3)
        * ((z1 * z2 * (-2) + z1 * (z1 + V.c(2)) + sq(z2) - one) * n
           - 3 * sq(z1) + 4 * (z1 * (z2 - one)) - sq(z2) + one);
    MultiPoly D3 = z3 * (n - 2)
        * ((sq(z1) - z1 * (2 * z2 + one) + (z2 - one) * z2 - one) * n
           - sq(z1 - z2) + 2 * (z1 + z2 + one));
    return PolyVectorField(3, {D1, D2, D3});
}

PolyVectorField stiefel_chart_display(int k2_, int k3_)
{
    const Rational k2(k2_), k3(k3_);
    Vars V{4};
    const MultiPoly z1 = V.x(0), z2 = V.x(1), z3 = V.x(2), z4 = V.x(3);
    const MultiPoly one = V.c(1);
    MultiPoly D1 = z1 * ((k2 + 1) * (k2 + 2 * k3))
        * ((z1 - one) * sq(z2) * z3 * (2 * z1 - (z1 - one) * k2)
           + z1 * k3 * (sq(z1) * z2 - z1 * z3 - z2 * sq(z2 - z3)));
    MultiPoly D2 = z2 * ((k2 + 1) * (k2 + 2 * k3))
        * (Rational(-1) * z3 * (sq(z1) * (z2 * (-2 * (k2 + k3 - 1)) + sq(z2) * (k2 - 2) + V.c(k2 + k3 - 1))
                                + sq(z2))
           - z1 * z2 * sq(z3) + z1 * z2 * ((z2 - z1) * (z1 + z2)));
    MultiPoly D3 = z3 * ((-k2 - 1) * (k2 + 2 * k3))
        * (z1 * z2 * k2 * (z1 * z2 * z3 + sq(z1 - z2) - sq(z3))
           + sq(z1) * (z3 * k3 - sq(z2) * 2 * (z3 + V.c(k3 - 1)))
           + sq(z2) * z3);
    MultiPoly D4 = 2 * (z4
        * (Rational(-1) * sq(z2) * (sq(z1) * z3 * ((k2 - 2) * (k2 * (k2 + k3) + k3))
                                    + z1 * (2 * (k2 + k3 - 1)) * (z3 * k2 + z1 * k3)
                                    + z3 * (k2 * k3 + k2 + k3))
           + z1 * z2 * (k2 * k3) * (z1 * z3 * (-2 * (k2 + k3 - 1)) + sq(z1) + sq(z3))
           - sq(z1) * z3 * (k3 * (k2 * k3 + k2 + k3))
           + z1 * z2 * sq(z2) * (k2 * k3)));
    return PolyVectorField(4, {D1, D2, D3, D4});
}

PolyVectorField stiefel_diag_chart_display(int k2_)
{
    const Rational k2(k2_);
    Vars V{3};
    const MultiPoly z1 = V.x(0), z2 = V.x(1), z3 = V.x(2);
    const MultiPoly one = V.c(1);
    const Rational pref = 3 * (-k2 - 1) * k2;
    MultiPoly E1 = z1 * pref
        * (z1 * k2 * (sq(z1) * z2 * Rational(-1) + z1 * z3 + z2 * sq(z2 - z3))
           + (z1 - one) * sq(z2) * z3 * ((z1 - one) * k2 - 2 * z1));
    MultiPoly E2 = z2 * pref
        * (sq(z1) * z3 * (sq(z2) * (k2 - 2) + z2 * (2 - 4 * k2) + V.c(2 * k2 - 1))
           + sq(z1) * z1 * z2 + z1 * z2 * (sq(z3) - sq(z2)) + sq(z2) * z3);
    MultiPoly E3 = z3 * pref
        * (z1 * k2 * (sq(z1) * z2 + z1 * (sq(z2) * (z3 - V.c(4)) + z3) + sq(z2) * z2 - z2 * sq(z3))
           + sq(z2) * (z3 - sq(z1) * 2 * (z3 - one)));
    return PolyVectorField(3, {E1, E2, E3});
}

PolyVectorField flag_chart_display(FlagId id)
{
    Vars V{4};
    const MultiPoly z1 = V.x(0), z2 = V.x(1), z3 = V.x(2);
    const MultiPoly one = V.c(1);
    MultiPoly C1(4), C2(4), C3(4);
    switch (id) {
    case FlagId::F4:
        C1 = 11520 * (z1 * (sq(z1) * z1 * ((8 * z2 + V.c(5)) * z3)
                            + sq(z1) * 2 * (sq(z2) - 18 * (z2 * z3) + sq(z3) - one)
                            + z1 * ((z2 * (z2 + V.c(32)) - V.c(5)) * z3)
                            - 4 * (z2 * sq(z3))));
        C2 = 23040 * (z1 * z2 * (3 * ((z2 - one) * z3 * (sq(z1) - 6 * z1 + 2 * z2 + V.c(2)))
                                 + 4 * (z1 * (sq(z2) - one)) - 2 * (z1 * sq(z3))));
        C3 = (-2880) * (z3 * ((-12) * (z1 * z3 * (sq(z1) + 2 * ((z1 - V.c(6)) * z1 * z2) + sq(z2) - one))
                              - 24 * (sq(z3) * (sq(z1) + z2))
                              + 8 * (sq(z1) * ((z2 - V.c(12)) * z2 + V.c(3)))));
        break;
    case FlagId::E7:
        C1 = 976896 * (z1 * (sq(z1) * z1 * ((10 * z2 + V.c(7)) * z3)
                             + sq(z1) * (sq(z2) - 36 * (z2 * z3) + sq(z3) - one)
                             - z1 * (((z2 - V.c(28)) * z2 + V.c(7)) * z3)
                             - 2 * (z2 * sq(z3))));
        C2 = 1953792 * (z1 * z2 * (3 * ((z2 - one) * z3 * (sq(z1) - 6 * z1 + 2 * z2 + V.c(2)))
                                   + 2 * (z1 * (sq(z2) - one)) - z1 * sq(z3)));
        C3 = 976896 * (z3 * (3 * (z1 * z3 * (sq(z1) + 2 * ((z1 - V.c(6)) * z1 * z2) + sq(z2) - one))
                             + 3 * (sq(z3) * (3 * sq(z1) + 2 * z2))
                             + sq(z1) * ((V.c(3) - z2) * (7 * z2 - V.c(3)))));
        break;
    case FlagId::E8a6:
        C1 = 15059072 * (z1 * (sq(z1) * z1 * ((16 * z2 + V.c(11)) * z3)
                               + sq(z1) * 2 * (sq(z2) - 30 * (z2 * z3) + sq(z3) - one)
                               - z1 * (((z2 - V.c(48)) * z2 + V.c(11)) * z3)
                               - 4 * (z2 * sq(z3))));
        C2 = 30118144 * (z1 * z2 * (5 * ((z2 - one) * z3 * (sq(z1) - 6 * z1 + 2 * z2 + V.c(2)))
                                    + 4 * (z1 * (sq(z2) - one)) - 2 * (z1 * sq(z3))));
        C3 = 15059072 * (z3 * (5 * (z1 * z3 * (sq(z1) + 2 * ((z1 - V.c(6)) * z1 * z2) + sq(z2) - one))
                               + 2 * (sq(z3) * (7 * sq(z1) + 5 * z2))
                               - 2 * (sq(z1) * (5 * ((z2 - V.c(4)) * z2) + V.c(7)))));
        break;
    case FlagId::E8a3:
        C1 = 7151616 * (z1 * (sq(z1) * z1 * ((18 * z2 + V.c(13)) * z3)
                              + sq(z1) * (sq(z2) - 60 * (z2 * z3) + sq(z3) - one)
                              + z1 * (((V.c(44) - 3 * z2) * z2 - V.c(13)) * z3)
                              - 2 * (z2 * sq(z3))));
        C2 = 14303232 * (z1 * z2 * (5 * ((z2 - one) * z3 * (sq(z1) - 6 * z1 + 2 * z2 + V.c(2)))
                                    + 2 * (z1 * (sq(z2) - one)) - z1 * sq(z3)));
        C3 = 7151616 * (z3 * (5 * (z1 * z3 * (sq(z1) + 2 * ((z1 - V.c(6)) * z1 * z2) + sq(z2) - one))
                              + sq(z3) * (17 * sq(z1) + 10 * z2)
                              + sq(z1) * (5 * ((V.c(8) - 3 * z2) * z2) - V.c(17))));
        break;
    }
    return PolyVectorField(4, {C1, C2, C3});
}

}  // namespace ricci
