#include "cbal/baselines.hpp"

#include <stdexcept>

namespace cbal {

std::string to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::cbal: return "cbal";
        case PolicyKind::cbal_no_prior: return "cbal_no_prior";
        case PolicyKind::always_query: return "always_query";
        case PolicyKind::oracle: return "oracle";
    }
    return "cbal";
}

PolicyKind parse_policy_kind(std::string_view name) {
    if (name == "cbal") return PolicyKind::cbal;
    if (name == "cbal_no_prior") return PolicyKind::cbal_no_prior;
    if (name == "always_query") return PolicyKind::always_query;
    if (name == "oracle") return PolicyKind::oracle;
    throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

PolicyOptions options_for(PolicyKind kind, ArmPick arm_pick) {
    PolicyOptions o;
    o.arm_pick = arm_pick;
    switch (kind) {
        case PolicyKind::cbal:
            break;
        case PolicyKind::cbal_no_prior:
            o.learned_priors = false;
            break;
        case PolicyKind::always_query:
            o.learned_priors = false;
            o.stopping_enabled = false;
            break;
        case PolicyKind::oracle:
            throw std::invalid_argument("the oracle benchmark has no bandit policy");
    }
    return o;
}

}  // namespace cbal
