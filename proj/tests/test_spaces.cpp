#include "ricci/spaces.hpp"

#include <doctest.h>

using namespace ricci;

TEST_CASE("parameter validation enforces the family constraints")
{
    CHECK_THROWS_AS(validate(SpaceSpec::gws(4, 0, 1)), ParameterOutOfRange);  // su(2l)/u(l) needs l >= 2
    CHECK_NOTHROW(validate(SpaceSpec::gws(4, 0, 2)));
    CHECK_THROWS_AS(validate(SpaceSpec::gws(5, 0, 3)), ParameterOutOfRange);
    CHECK_NOTHROW(validate(SpaceSpec::v2(4)));
    CHECK_THROWS_AS(validate(SpaceSpec::v2(3)), ParameterOutOfRange);
    CHECK_NOTHROW(validate(SpaceSpec::gws(1, 2, 2, 2)));
    CHECK_THROWS_AS(validate(SpaceSpec::gws(1, 0, 2, 2)), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SpaceSpec::stiefel_block(1, 2)), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SpaceSpec::gws(16)), UnknownSpace);
}

TEST_CASE("catalog values for the four-summand flags")
{
    const auto iso = catalog_lookup(SpaceSpec::flag(FlagId::F4));
    CHECK(iso.q == 4);
    CHECK(iso.dims == std::vector<long long>{12, 18, 4, 6});
    CHECK(iso.triple(1, 1, 3) == Rational(2));      // A_224
    CHECK(iso.triple(0, 0, 1) == Rational(2));      // A_112
    CHECK(iso.triple(0, 1, 2) == Rational(1));      // A_123
    CHECK(iso.triple(0, 2, 3) == Rational(2, 3));   // A_134
    const auto e7 = catalog_lookup(SpaceSpec::flag(FlagId::E7));
    CHECK(e7.dims == std::vector<long long>{48, 36, 16, 6});
}

TEST_CASE("catalog values for gws7 and the block family")
{
    const auto g7 = catalog_lookup(SpaceSpec::gws(7));
    CHECK(g7.dims == std::vector<long long>{16, 16, 16});
    CHECK((*g7.wallach_a)[0] == Rational(1, 6));
    CHECK(g7.triple(0, 1, 2) == Rational(8, 3));

    // A_222 = k2(k2-1)(k2-2)/(2(n-2)) = 4*3*2/(2*5) for (k2,k3) = (4,2)
    const auto b = catalog_lookup(SpaceSpec::stiefel_block(4, 2));
    CHECK(b.dims == std::vector<long long>{6, 4, 2, 8});
    CHECK(b.triple(0, 0, 0) == Rational(12, 5));
    CHECK(b.triple(0, 1, 1) == Rational(6, 5));
    CHECK(b.triple(0, 3, 3) == Rational(12, 5));
    CHECK(b.triple(1, 2, 3) == Rational(4, 5));
    CHECK(b.manifold_dim() == 20);  // dim so(7)/so(2)

    // k2 = 2 has no so(k2) self-bracket
    const auto b2 = catalog_lookup(SpaceSpec::stiefel_block(2, 3));
    CHECK(b2.triple(0, 0, 0) == Rational(0));
}

TEST_CASE("stored triples are symmetric under all index permutations")
{
    const auto iso = catalog_lookup(SpaceSpec::flag(FlagId::E8a6));
    const int idx[4][3] = {{0, 2, 3}, {2, 0, 3}, {3, 2, 0}, {2, 3, 0}};
    for (const auto& p : idx) CHECK(iso.triple(p[0], p[1], p[2]) == Rational(14, 5));
    CHECK(iso.triple(1, 2, 2) == Rational(0));
}

TEST_CASE("wallach consistency: a_i d_i is a single constant in (0, 1/2]")
{
    for (int id = 1; id <= 15; ++id) {
        SpaceSpec spec = id <= 3 ? SpaceSpec::gws(id, 2, 3, 4)
                                 : (id <= 5 ? SpaceSpec::gws(id, 0, 5) : SpaceSpec::gws(id));
        const auto iso = catalog_lookup(spec);
        const Rational A = iso.triple(0, 1, 2);
        for (int i = 0; i < 3; ++i) {
            const Rational ai = (*iso.wallach_a)[static_cast<std::size_t>(i)];
            CHECK(ai * iso.dims[static_cast<std::size_t>(i)] == A);
            CHECK(ai > 0);
            CHECK(ai <= Rational(1, 2));
        }
    }
    // permutation symmetry of the parameterized family with equal parameters
    const auto eq = catalog_lookup(SpaceSpec::gws(1, 3, 3, 3));
    CHECK((*eq.wallach_a)[0] == (*eq.wallach_a)[1]);
    CHECK((*eq.wallach_a)[1] == (*eq.wallach_a)[2]);
}

TEST_CASE("v2 catalog is the (1,1,n-2) instance of the so-family")
{
    for (int n : {4, 5, 9}) {
        const auto v = catalog_lookup(SpaceSpec::v2(n));
        const auto g = catalog_lookup(SpaceSpec::gws(1, 1, 1, n - 2));
        CHECK(v.dims == g.dims);
        CHECK(v.triple(0, 1, 2) == g.triple(0, 1, 2));
        CHECK(v.triple(0, 1, 2) == Rational(1, 2));
    }
}

TEST_CASE("canonical text forms round trip")
{
    const char* names[] = {"gws1:k=2,l=2,m=2", "gws3:k=1,l=2,m=3", "gws4:l=3", "gws7",
                           "gws15", "v2:n=5", "stiefel:k2=4,k3=2", "flag:f4", "flag:e8a3"};
    for (const char* n : names) CHECK(SpaceSpec::parse(n).canonical() == n);
    CHECK_THROWS_AS(SpaceSpec::parse("flag:g2"), UnknownSpace);
    CHECK_THROWS_AS(SpaceSpec::parse("wallach:k=2"), UnknownSpace);
    CHECK_THROWS_AS(SpaceSpec::parse("gws1:k=2"), ParameterOutOfRange);
    CHECK_THROWS_AS(SpaceSpec::parse("gws7:l=2"), ParameterOutOfRange);
}

TEST_CASE("catalog listing covers 15 + 2 + 4 families")
{
    const auto rows = catalog_rows();
    CHECK(rows.size() == 21);
    bool gws15 = false, e7 = false;
    for (const auto& row : rows) {
        if (row.key == "gws15") {
            gws15 = true;
            CHECK(row.constants == "a=(1/9, 1/9, 1/9)");
        }
        if (row.key == "flag:e7") {
            e7 = true;
            CHECK(row.dims == "48, 36, 16, 6");
        }
    }
    CHECK(gws15);
    CHECK(e7);
}
