#pragma once

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ricci {

enum class FlagId { F4, E7, E8a3, E8a6 };

struct GwsFamily {
    int id = 0;               // 1..15
    int k = 0, l = 0, m = 0;  // families 1-3 use (k,l,m); 4-5 use l; 6-15 none
    bool operator==(const GwsFamily&) const = default;
};
struct StiefelV2Family {
    int n = 0;
    bool operator==(const StiefelV2Family&) const = default;
};
struct StiefelBlockFamily {
    int k2 = 0, k3 = 0;
    bool operator==(const StiefelBlockFamily&) const = default;
};
struct Flag4Family {
    FlagId id = FlagId::F4;
    bool operator==(const Flag4Family&) const = default;
};

/// Tagged identifier of a homogeneous space family plus its integer parameters.
///
/// Canonical text forms: "gws1:k=2,l=2,m=2", "gws4:l=3", "gws7",
/// "v2:n=5", "stiefel:k2=4,k3=2", "flag:f4".
struct SpaceSpec {
    using Gws = GwsFamily;
    using StiefelV2 = StiefelV2Family;
    using StiefelBlock = StiefelBlockFamily;
    using Flag4 = Flag4Family;

    std::variant<Gws, StiefelV2, StiefelBlock, Flag4> family;

    bool operator==(const SpaceSpec&) const = default;

    static SpaceSpec gws(int id, int k = 0, int l = 0, int m = 0);
    static SpaceSpec v2(int n);
    static SpaceSpec stiefel_block(int k2, int k3);
    static SpaceSpec flag(FlagId id);

    static SpaceSpec parse(std::string_view text);
    std::string canonical() const;
};

/// Summand dimensions and the nonzero structure constants A_ijk, exact.
struct IsotropyData {
    int q = 0;
    std::vector<long long> dims;
    std::map<std::array<int, 3>, Rational> triples;  // keys sorted ascending, 0-based
    std::optional<std::array<Rational, 3>> wallach_a;

    /// A_ijk under any permutation of the indices; 0 if not stored.
    Rational triple(int i, int j, int k) const;
    long long manifold_dim() const;
};

/// Throws ParameterOutOfRange unless the parameters satisfy the family's
/// constraints (all >= 1; gws4 l >= 2; gws5 l >= 4; v2 n >= 4;
/// stiefel k2 >= 2, k3 >= 1).
void validate(const SpaceSpec& spec);

IsotropyData catalog_lookup(const SpaceSpec& spec);

struct CatalogRow {
    std::string key;          // e.g. "gws1", "flag:e7"
    std::string description;  // parameter constraints or the concrete group quotient
    std::string dims;         // numeric or symbolic in the family parameters
    std::string constants;    // a_i for Wallach-type rows, A_ijk otherwise
};

/// One row per supported family: 15 GWS + 2 Stiefel + 4 flags.
std::vector<CatalogRow> catalog_rows();

}  // namespace ricci
