#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace ricci {

struct ClaimCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ClaimResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::vector<ClaimCheck> checks;
};

/// All registered reproduction claims, in report order.
std::vector<std::string> claim_ids();

/// Execute one claim; throws UnknownSpace for unknown ids.
ClaimResult run_claim(const std::string& id);

/// Execute every claim.
std::vector<ClaimResult> run_all_claims();

void to_json(nlohmann::json& j, const ClaimResult& r);

}  // namespace ricci
