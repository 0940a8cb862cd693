#pragma once

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ricci {

enum class CertificateName { H, G, F, F1, F2, F3 };

/// Univariate elimination polynomial with integer coefficients that are
/// themselves integer polynomials in the family parameters. Sign patterns of
/// these certify root counts; the polynomials are consumed as given, the
/// small ones cross-checked against resultants in the tests.
struct SignCertificate {
    std::string name;
    std::vector<std::string> params;     // e.g. {"k", "m"}
    std::vector<long long> shifts;       // coefficients are in powers of p_i - shift_i

    struct ParamTerm {
        std::vector<int> exps;           // exponents over the shifted parameters
        BigInt coeff;
    };
    struct Coefficient {
        int power = 0;                   // power of the certificate variable
        std::vector<ParamTerm> poly;
    };
    std::vector<Coefficient> coefficients;  // descending by power

    struct Sample {
        long long point = 0;
        int sign = 0;                    // expected sign: +1 or -1
    };
    std::vector<Sample> samples;         // empty for alternation-only certificates
    bool alternation_claim = false;      // even powers positive, odd negative
    std::string constraint_desc;
    bool (*constraint)(std::span<const long long>) = nullptr;
};

/// H, G, F, F1 are always available; F2/F3 only when the big-certificate
/// tables are compiled in.
bool certificate_available(CertificateName name);
const SignCertificate& certificate(CertificateName name);

struct SignReport {
    std::vector<BigInt> coefficient_values;  // evaluated, descending by power
    std::vector<BigInt> sample_values;       // aligned with certificate samples
    std::vector<int> sample_signs;
    bool samples_match = true;
    std::optional<bool> alternation_ok;
    bool matches_claim = false;
};

/// Exact integer evaluation at the certificate's sample points; throws
/// ConstraintViolation when the parameters violate the stated constraints.
SignReport certificate_check(const SignCertificate& cert, std::span<const long long> params);

/// Exact value of the certificate polynomial at an integer point.
BigInt evaluate_certificate(const SignCertificate& cert, std::span<const long long> params, long long z);

/// FNV-1a over the canonical serialization of the coefficient table.
std::uint64_t certificate_checksum(const SignCertificate& cert);

#ifdef RICCI_ENABLE_BIG_CERTIFICATES
const SignCertificate& certificate_f2();
const SignCertificate& certificate_f3();
#endif

}  // namespace ricci
