#pragma once
/*
Comparison policies. All bandit kinds share the Policy state machine, so the
harness is policy-agnostic and payoff differences isolate exactly (a) the
query-stopping rule and (b) the learned priors:

  cbal           learned priors, stopping enabled
  cbal_no_prior  every query carries (0, 1, 0) at cost c, stopping enabled
  always_query   queries every slot with (0, 1, 0), never stops; elimination
                 still runs
  oracle         debug benchmark: plays the best arm, never queries

Under one seed, cbal and cbal_no_prior traverse identical states; only the
emitted priors and the query costs differ.
*/
#include <string>
#include <string_view>

#include "cbal/policy.hpp"

namespace cbal {

enum class PolicyKind { cbal, cbal_no_prior, always_query, oracle };

PolicyOptions options_for(PolicyKind kind, ArmPick arm_pick);

std::string to_string(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view name);

}  // namespace cbal
