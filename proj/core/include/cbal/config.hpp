#pragma once
#include <string>
#include <string_view>

#include "cbal/baselines.hpp"
#include "cbal/environment.hpp"
#include "cbal/params.hpp"

namespace cbal {

struct LandscapeSpec {
    LandscapeFamily family = LandscapeFamily::peak;
    double steepness = 0.5;

    Landscape build(int context_dim, int arm_dim) const {
        return Landscape(family, steepness, context_dim, arm_dim);
    }
};

// One experiment: a policy, an environment, a horizon and seeded
// replications. Replication r runs on seed + r, so results are reproducible
// and merge in a fixed order.
struct RunConfig {
    AlgoParams params;
    LandscapeSpec landscape;
    std::uint64_t horizon = 10000;
    PolicyKind policy = PolicyKind::cbal;
    std::uint64_t seed = 1;
    int replications = 20;
    std::string out_dir;  // empty: no files written
    ArmPick arm_pick = ArmPick::center;
    bool record_trace = false;

    // finalize+validate params, check run-level constraints
    void finalize();
};

// Defaults used by the bundled experiments: 1-D peak landscape with
// steepness 0.5, matching Lipschitz constants, cost scale 0.5.
RunConfig default_config();

// Flat key-value config file (key = value, '#' comments). Unknown keys and
// malformed values raise std::invalid_argument with the line number.
// Omitted keys keep the defaults; alpha/gamma/margin default to their
// dimension-derived values. Parsing does not finalize.
RunConfig load_config(const std::string& path);
RunConfig parse_config(std::string_view text, std::string_view origin = "<config>");

std::string to_string(ArmPick pick);
ArmPick parse_arm_pick(std::string_view name);
std::string to_string(LandscapeFamily family);
LandscapeFamily parse_landscape_family(std::string_view name);

}  // namespace cbal
