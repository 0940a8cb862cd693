#include "ricci/certificates.hpp"

#include "ricci/rootfind.hpp"

#include <doctest.h>

#include <cmath>

using namespace ricci;
using doctest::Approx;

namespace {

// Rational evaluation of the two brackets of the l = m system, used to
// recompute the elimination polynomials without any basis machinery.
Rational line_bracket(long long k, long long m, const Rational& z1, const Rational& z2)
{
    return Rational(m) * (z1 + 1) - z2 * (k + 2 * m - 2);
}

Rational f2_bracket(long long k, long long m, const Rational& z1, const Rational& z2)
{
    return Rational(k) * (2 * z1 * z2 + (z1 - 1) * (z1 - 1) - z2 * z2)
           + Rational(4 * (m - 1)) * z1 * z2 - Rational(m) * z1 * (z1 + 4) - Rational(m) * z2 * z2
           + Rational(m) + 4 * z1;
}

// Eliminate z1 linearly: substitute z1 = (z2 (k+2m-2) - m)/m and clear m^2.
Rational h_resultant(long long k, long long m, const Rational& z2)
{
    const Rational z1 = (z2 * (k + 2 * m - 2) - m) / m;
    return f2_bracket(k, m, z1, z2) * m * m;
}

// Eliminate z2: substitute z2 = m (z1+1)/(k+2m-2) and clear (k+2m-2)^2.
Rational g_resultant(long long k, long long m, const Rational& z1)
{
    const Rational z2 = Rational(m) * (z1 + 1) / (k + 2 * m - 2);
    return f2_bracket(k, m, z1, z2) * (k + 2 * m - 2) * (k + 2 * m - 2);
}

Rational cert_at(CertificateName name, std::initializer_list<long long> params, long long z)
{
    std::vector<long long> p(params);
    return Rational(evaluate_certificate(certificate(name), p, z));
}

}  // namespace

TEST_CASE("H equals m(2k+m) times the one-step elimination of the line system")
{
    for (const auto& [k, m] : {std::pair{3LL, 3LL}, {5LL, 3LL}, {7LL, 5LL}, {9LL, 7LL}, {12LL, 11LL}}) {
        const Rational scale = Rational(m) * (2 * k + m);
        for (long long z = 0; z <= 2; ++z)
            CHECK(cert_at(CertificateName::H, {k, m}, z) == scale * h_resultant(k, m, Rational(z)));
    }
}

TEST_CASE("G equals m(2k+m) times the complementary elimination")
{
    for (const auto& [k, m] : {std::pair{3LL, 3LL}, {6LL, 9LL}, {8LL, 13LL}}) {
        const Rational scale = Rational(m) * (2 * k + m);
        for (long long z = 0; z <= 2; ++z)
            CHECK(cert_at(CertificateName::G, {k, m}, z) == scale * g_resultant(k, m, Rational(z)));
    }
}

TEST_CASE("H sample signs: the claimed pattern holds only on part of the admissible grid")
{
    // the quoted instantiations: positive at 0 and 2 on the whole grid
    for (long long m = 3; m <= 30; ++m)
        for (long long k = 1; k <= 30; ++k) {
            if (k * k <= 4 * (m - 1)) continue;
            CHECK(cert_at(CertificateName::H, {k, m}, 0) > 0);
            CHECK(cert_at(CertificateName::H, {k, m}, 2) > 0);
        }
    // H(1) < 0 holds for, e.g., (6,9) but fails at k = m (where H(1) = 0
    // identically) and for k large against m; (3,3) sits exactly on the
    // boundary, so the sign triple quoted for it cannot all hold
    CHECK(cert_at(CertificateName::H, {6, 9}, 1) < 0);
    CHECK(cert_at(CertificateName::H, {8, 13}, 1) < 0);
    CHECK(cert_at(CertificateName::H, {3, 3}, 1) == 0);
    CHECK(cert_at(CertificateName::H, {5, 5}, 1) == 0);
    CHECK(cert_at(CertificateName::H, {5, 3}, 1) > 0);

    const long long p69[] = {6, 9};
    CHECK(certificate_check(certificate(CertificateName::H), p69).matches_claim);
    const long long p53[] = {5, 3};
    CHECK_FALSE(certificate_check(certificate(CertificateName::H), p53).matches_claim);
}

TEST_CASE("F reproduces the quoted evaluations exactly")
{
    for (long long l = 2; l <= 30; ++l) {
        CHECK(cert_at(CertificateName::F, {l}, 0) == Rational(12 * l * l * l * l + 20 * l * l * l + 7 * l * l - 2 * l - 1));
        CHECK(cert_at(CertificateName::F, {l}, 1) == Rational(-4 * l * l));
        CHECK(cert_at(CertificateName::F, {l}, 4)
              == Rational(972 * l * l * l * l - 2700 * l * l * l + 1799 * l * l + 30 * l - 225));
        const long long params[] = {l};
        CHECK(certificate_check(certificate(CertificateName::F), params).matches_claim);
    }
}

TEST_CASE("F1 matches its quoted value at 1 and its sign pattern on the stated range")
{
    for (long long q = 6; q <= 20; ++q) {
        const BigInt k2(q);
        const BigInt quoted = 16 * pow(k2, 12) + 464 * pow(k2, 11) + 1356 * pow(k2, 10) - 2920 * pow(k2, 9)
                              - 3910 * pow(k2, 8) + 10638 * pow(k2, 7) - 17384 * pow(k2, 6)
                              + 16884 * pow(k2, 5) - 10454 * pow(k2, 4) + 4566 * pow(k2, 3)
                              - 792 * pow(k2, 2);
        const long long params[] = {q};
        CHECK(evaluate_certificate(certificate(CertificateName::F1), params, 1) == quoted);
        CHECK(certificate_check(certificate(CertificateName::F1), params).matches_claim);
    }
}

TEST_CASE("F1 vanishes at the non-diagonal fixed points of the k2 = k3 family")
{
    const auto fps = find_fixed_points(SpaceSpec::stiefel_block(6, 6));
    int off_diagonal = 0;
    for (const auto& fp : fps) {
        if (std::abs(fp.z[0] - 1.0) < 1e-6) continue;  // diagonal closed-form pair
        ++off_diagonal;
        // relative residual of the degree-10 certificate at z1
        const auto& f1 = certificate(CertificateName::F1);
        const long long params[] = {6};
        const auto rep = certificate_check(f1, params);
        long double value = 0, scale = 0;
        std::size_t idx = 0;
        for (const auto& coef : f1.coefficients) {
            const long double c = Rational(rep.coefficient_values[idx++]).convert_to<long double>();
            const long double zp = std::pow(static_cast<long double>(fp.z[0]), coef.power);
            value += c * zp;
            scale += std::abs(c * zp);
        }
        CHECK(std::abs(static_cast<double>(value / scale)) < 1e-10);
    }
    CHECK(off_diagonal == 2);
}

TEST_CASE("alternation claims: G everywhere on its grid, F2/F3 when compiled in")
{
    for (long long m = 3; m <= 30; ++m)
        for (long long k = 1; k <= 30; ++k) {
            const long long params[] = {k, m};
            const auto rep = certificate_check(certificate(CertificateName::G), params);
            REQUIRE(rep.alternation_ok.has_value());
            CHECK(*rep.alternation_ok);
        }
    if (certificate_available(CertificateName::F2)) {
        for (long long q = 6; q <= 20; ++q) {
            const long long params[] = {q};
            CHECK(*certificate_check(certificate(CertificateName::F2), params).alternation_ok);
            CHECK(*certificate_check(certificate(CertificateName::F3), params).alternation_ok);
        }
    }
}

TEST_CASE("F2/F3 vanish at the k2 = 6 fixed point coordinates")
{
    if (!certificate_available(CertificateName::F2)) return;
    const auto fps = find_fixed_points(SpaceSpec::stiefel_block(6, 6));
    // the catalog orders coordinates (12, 13, 23); the tabulated certificate
    // variables are z2 = x23/x2 and z3 = x13/x2
    auto rel_residual = [](CertificateName name, double zv) {
        const auto& cert = certificate(name);
        const long long params[] = {6};
        const auto rep = certificate_check(cert, params);
        long double value = 0, scale = 0;
        std::size_t idx = 0;
        for (const auto& coef : cert.coefficients) {
            const long double c = Rational(rep.coefficient_values[idx++]).convert_to<long double>();
            const long double zp = std::pow(static_cast<long double>(zv), coef.power);
            value += c * zp;
            scale += std::abs(c * zp);
        }
        return std::abs(static_cast<double>(value / scale));
    };
    int checked = 0;
    for (const auto& fp : fps) {
        if (std::abs(fp.z[0] - 1.0) < 1e-6) continue;
        ++checked;
        CHECK(rel_residual(CertificateName::F2, fp.z[2]) < 1e-9);
        CHECK(rel_residual(CertificateName::F3, fp.z[1]) < 1e-9);
    }
    CHECK(checked == 2);
}

TEST_CASE("constraint checking and checksums freeze the transcriptions")
{
    const long long bad_m[] = {3, 2};
    CHECK_THROWS_AS(certificate_check(certificate(CertificateName::H), bad_m), ConstraintViolation);
    const long long bad_l[] = {1};
    CHECK_THROWS_AS(certificate_check(certificate(CertificateName::F), bad_l), ConstraintViolation);
    const long long bad_k2[] = {5};
    CHECK_THROWS_AS(certificate_check(certificate(CertificateName::F1), bad_k2), ConstraintViolation);

    CHECK(certificate_checksum(certificate(CertificateName::H)) == 13625351793257181638ULL);
    CHECK(certificate_checksum(certificate(CertificateName::G)) == 13027889180671087230ULL);
    CHECK(certificate_checksum(certificate(CertificateName::F)) == 15954876443818720580ULL);
    CHECK(certificate_checksum(certificate(CertificateName::F1)) == 8028106933612050212ULL);
    if (certificate_available(CertificateName::F2)) {
        CHECK(certificate_checksum(certificate(CertificateName::F2)) == 16183697070616650905ULL);
        CHECK(certificate_checksum(certificate(CertificateName::F3)) == 17239618675345851841ULL);
    }
}
