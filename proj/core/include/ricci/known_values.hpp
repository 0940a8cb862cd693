#pragma once

#include "ricci/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ricci {

/// Published infinity fixed points for a space, in catalog coordinate order
/// (for the block Stiefel family the tabulated triples are stored with their
/// last two coordinates swapped into the (12,13,23) order).
struct KnownPoints {
    std::string source;                           // table label the values come from
    std::vector<std::vector<double>> points;
};

std::optional<KnownPoints> known_infinity_points(const SpaceSpec& spec);

}  // namespace ricci
