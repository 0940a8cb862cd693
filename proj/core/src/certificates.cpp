#include "ricci/certificates.hpp"

#include <sstream>

namespace ricci {

namespace {

using PT = SignCertificate::ParamTerm;
using Coef = SignCertificate::Coefficient;

/// Dense single-parameter coefficient, powers descending from `top`.
Coef dense(int zpow, int top, std::initializer_list<long long> cs)
{
    Coef c;
    c.power = zpow;
    int e = top;
    for (long long v : cs) {
        if (v != 0) c.poly.push_back({{e}, BigInt(v)});
        --e;
    }
    return c;
}

bool h_constraint(std::span<const long long> p)
{
    const long long k = p[0], m = p[1];
    return k >= 1 && m > 2 && k * k > 4 * (m - 1);
}

bool g_constraint(std::span<const long long> p) { return p[0] >= 1 && p[1] >= 3; }
bool f_constraint(std::span<const long long> p) { return p[0] >= 2; }
bool f1_constraint(std::span<const long long> p) { return p[0] >= 6; }

SignCertificate make_h()
{
    SignCertificate c;
    c.name = "H";
    c.params = {"k", "m"};
    c.shifts = {0, 0};
    c.constraint = h_constraint;
    c.constraint_desc = "m > 2 and k^2 > 4(m-1)";
    // exponents are (k, m); the constant coefficient carries the corrected
    // -8km^3 term (the +8km^3 variant fails the resultant cross-check)
    c.coefficients = {
        {2, {{{4, 1}, 2}, {{3, 2}, 11}, {{3, 1}, -8}, {{2, 3}, 19}, {{2, 2}, -28}, {{2, 1}, 8},
             {{1, 4}, 13}, {{1, 3}, -28}, {{1, 2}, 12}, {{0, 5}, 3}, {{0, 4}, -8}, {{0, 3}, 4}}},
        {1, {{{3, 2}, -8}, {{2, 3}, -28}, {{2, 2}, 24}, {{1, 4}, -28}, {{1, 3}, 44}, {{1, 2}, -16},
             {{0, 5}, -8}, {{0, 4}, 16}, {{0, 3}, -8}}},
        {0, {{{2, 3}, 8}, {{1, 4}, 12}, {{1, 3}, -8}, {{0, 5}, 4}, {{0, 4}, -4}}},
    };
    c.samples = {{0, +1}, {1, -1}, {2, +1}};
    return c;
}

SignCertificate make_g()
{
    SignCertificate c;
    c.name = "G";
    c.params = {"k", "m"};
    c.shifts = {0, 3};  // coefficients tabulated in powers of m - 3
    c.constraint = g_constraint;
    c.constraint_desc = "m >= 3";
    const std::vector<PT> even = {
        {{4, 0}, 6},  {{3, 0}, 75},  {{2, 0}, 285},  {{1, 0}, 405},  {{0, 0}, 189},
        {{4, 1}, 2},  {{3, 1}, 58},  {{2, 1}, 353},  {{1, 1}, 720},  {{0, 1}, 459},
        {{3, 2}, 11}, {{2, 2}, 143}, {{1, 2}, 462},  {{0, 2}, 414},
        {{2, 3}, 19}, {{1, 3}, 128}, {{0, 3}, 178},
        {{1, 4}, 13}, {{0, 4}, 37},
        {{0, 5}, 3},
    };
    const std::vector<PT> odd = {
        {{4, 0}, -12}, {{3, 0}, -126}, {{2, 0}, -558},  {{1, 0}, -1110}, {{0, 0}, -774},
        {{4, 1}, -4},  {{3, 1}, -108}, {{2, 1}, -738},  {{1, 1}, -1888}, {{0, 1}, -1578},
        {{3, 2}, -22}, {{2, 2}, -322}, {{1, 2}, -1220}, {{0, 2}, -1316},
        {{2, 3}, -46}, {{1, 3}, -352}, {{0, 3}, -556},
        {{1, 4}, -38}, {{0, 4}, -118},
        {{0, 5}, -10},
    };
    c.coefficients = {{2, even}, {1, odd}, {0, even}};
    c.alternation_claim = true;
    return c;
}

SignCertificate make_f()
{
    SignCertificate c;
    c.name = "F";
    c.params = {"l"};
    c.shifts = {0};
    c.constraint = f_constraint;
    c.constraint_desc = "l >= 2";
    c.coefficients = {
        dense(4, 4, {12, -20, 7, 2, -1}),
        dense(3, 4, {-48, 40, 8, -8, 0}),
        dense(2, 4, {72, 0, -34, 0, 2}),
        dense(1, 4, {-48, -40, 8, 8, 0}),
        dense(0, 4, {12, 20, 7, -2, -1}),
    };
    c.samples = {{0, +1}, {1, -1}, {4, +1}};
    return c;
}

SignCertificate make_f1()
{
    SignCertificate c;
    c.name = "F1";
    c.params = {"k2"};
    c.shifts = {0};
    c.constraint = f1_constraint;
    c.constraint_desc = "k2 >= 6";
    c.coefficients = {
        dense(10, 12, {289, -2414, 7267, -7656, -4925, 16858, -10115, -1924, 4556, -4032, 2864, -832, 64}),
        dense(9, 12, {-3094, 21740, -53420, 43474, 25150, -59760, 32856, -11070, 1676, 4944, -3104, 672, -64}),
        dense(8, 12, {11951, -62636, 87727, 63904, -306211, 405020, -357771, 244112, -115968, 37280, -9200, 1664, -128}),
        dense(7, 12, {-23556, 81980, 1572, -381432, 817168, -1006372, 869836, -522872, 212404, -61192, 12816, -1760, 128}),
        dense(6, 12, {27243, -54638, -133224, 635796, -1177180, 1342266, -995716, 467944, -133163, 19352, 376, -672, 80}),
        dense(5, 12, {-20366, 17416, 186738, -653354, 1066178, -1003674, 537954, -128838, -18604, 23530, -7564, 1176, -80}),
        dense(4, 12, {10457, 3504, -152744, 427896, -550638, 347496, -51536, -73272, 54525, -17048, 2464, -64, -16}),
        dense(3, 12, {-3592, -7144, 75380, -160756, 138300, -14956, -63900, 50796, -15124, 196, 1016, -232, 16}),
        dense(2, 12, {768, 3264, -20788, 32264, -10448, -20736, 23488, -7528, -1728, 1904, -508, 48, 0}),
        dense(1, 12, {-88, -656, 3024, -3152, -1552, 4816, -2496, -624, 1064, -384, 48, 0, 0}),
        dense(0, 12, {4, 48, -176, 96, 248, -320, 16, 160, -92, 16, 0, 0, 0}),
    };
    c.samples = {{1, +1}, {3, -1}, {6, +1}};
    return c;
}

BigInt eval_param_poly(const std::vector<PT>& poly, std::span<const BigInt> shifted)
{
    BigInt acc = 0;
    for (const auto& t : poly) {
        BigInt v = t.coeff;
        for (std::size_t i = 0; i < shifted.size(); ++i) {
            for (int e = 0; e < t.exps[i]; ++e) v *= shifted[i];
        }
        acc += v;
    }
    return acc;
}

}  // namespace

bool certificate_available(CertificateName name)
{
#ifdef RICCI_ENABLE_BIG_CERTIFICATES
    (void)name;
    return true;
#else
    return name != CertificateName::F2 && name != CertificateName::F3;
#endif
}

const SignCertificate& certificate(CertificateName name)
{
    static const SignCertificate h = make_h();
    static const SignCertificate g = make_g();
    static const SignCertificate f = make_f();
    static const SignCertificate f1 = make_f1();
    switch (name) {
    case CertificateName::H: return h;
    case CertificateName::G: return g;
    case CertificateName::F: return f;
    case CertificateName::F1: return f1;
#ifdef RICCI_ENABLE_BIG_CERTIFICATES
    case CertificateName::F2: return certificate_f2();
    case CertificateName::F3: return certificate_f3();
#else
    default: break;
#endif
    }
    throw ConstraintViolation("certificate not compiled in; enable RICCI_ENABLE_BIG_CERTIFICATES");
}

BigInt evaluate_certificate(const SignCertificate& cert, std::span<const long long> params, long long z)
{
    std::vector<BigInt> shifted;
    for (std::size_t i = 0; i < params.size(); ++i)
        shifted.emplace_back(params[i] - cert.shifts[i]);
    BigInt acc = 0;
    for (const auto& coef : cert.coefficients) {
        BigInt v = eval_param_poly(coef.poly, shifted);
        for (int e = 0; e < coef.power; ++e) v *= z;
        acc += v;
    }
    return acc;
}

SignReport certificate_check(const SignCertificate& cert, std::span<const long long> params)
{
    if (params.size() != cert.params.size())
        throw ConstraintViolation("wrong parameter count for certificate " + cert.name);
    if (cert.constraint && !cert.constraint(params))
        throw ConstraintViolation("parameters violate '" + cert.constraint_desc + "' for " + cert.name);

    std::vector<BigInt> shifted;
    for (std::size_t i = 0; i < params.size(); ++i)
        shifted.emplace_back(params[i] - cert.shifts[i]);

    SignReport report;
    for (const auto& coef : cert.coefficients)
        report.coefficient_values.push_back(eval_param_poly(coef.poly, shifted));

    for (const auto& s : cert.samples) {
        BigInt v = 0;
        std::size_t idx = 0;
        for (const auto& coef : cert.coefficients) {
            BigInt t = report.coefficient_values[idx++];
            for (int e = 0; e < coef.power; ++e) t *= s.point;
            v += t;
        }
        const int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
        report.sample_values.push_back(std::move(v));
        report.sample_signs.push_back(sign);
        if (sign != s.sign) report.samples_match = false;
    }

    if (cert.alternation_claim) {
        bool ok = true;
        std::size_t idx = 0;
        for (const auto& coef : cert.coefficients) {
            const BigInt& v = report.coefficient_values[idx++];
            if (coef.power % 2 == 0 ? !(v > 0) : !(v < 0)) ok = false;
        }
        report.alternation_ok = ok;
    }
    report.matches_claim = report.samples_match && (!report.alternation_ok || *report.alternation_ok);
    return report;
}

std::uint64_t certificate_checksum(const SignCertificate& cert)
{
    std::ostringstream os;
    os << cert.name;
    for (std::size_t i = 0; i < cert.params.size(); ++i)
        os << '|' << cert.params[i] << ':' << cert.shifts[i];
    for (const auto& coef : cert.coefficients) {
        os << "|z^" << coef.power << ':';
        for (const auto& t : coef.poly) {
            for (int e : t.exps) os << e << ',';
            os << '=' << t.coeff.str() << ';';
        }
    }
    const std::string s = os.str();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace ricci
