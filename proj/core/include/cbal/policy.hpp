#pragma once
/*
The decision engine: per-epoch, per-context-cluster successive elimination
with a query-stopping rule.

Within an epoch each context cluster runs rounds; a round selects every
active arm cluster once (ascending index), queries the annotator with a
prior interval, and at round end removes arm clusters whose sample-mean gap
reaches D1. Once every surviving gap is within D2 the cluster stops
querying and exploits the lowest-indexed survivor for the rest of the epoch.

Call order per slot, for the located context cluster m:
  step() -> record_reward() if the decision queried -> end_of_round() once
  round_complete(m). Instances are single-threaded; run one per replication.
*/
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbal/controls.hpp"
#include "cbal/geometry.hpp"
#include "cbal/params.hpp"
#include "cbal/rng.hpp"

namespace cbal {

// Interval [lo, hi] claimed to contain the expected reward with probability
// at least 1 - delta. Deliberately not clamped to [0,1]; wide early-round
// intervals are legal output and priced as-is by the annotator.
struct PriorInfo {
    double lo = 0.0;
    double hi = 1.0;
    double delta = 0.0;

    double width() const { return hi - lo; }
};

enum class Phase { exploration, exploitation };
enum class ArmPick { center, random };

struct Decision {
    Point arm;
    std::size_t arm_cluster = 0;
    std::size_t context_cluster = 0;
    Phase phase = Phase::exploration;
    bool query = false;
    std::optional<PriorInfo> prior;  // present iff query
    std::uint64_t round = 1;         // round of the context cluster at decision time
    int epoch = 0;
};

struct ArmEstimate {
    double mean = 0.0;
    std::uint64_t count = 0;
};

// Learning state of one context cluster within the current epoch.
struct ContextClusterState {
    std::vector<std::size_t> active;   // ascending arm-cluster ids
    std::vector<ArmEstimate> estimates;  // dense over all arm clusters
    std::vector<char> selected;          // dense flags, current round
    std::size_t selected_count = 0;
    std::uint64_t round = 1;
    bool stopped = false;
    std::uint64_t stop_round = 0;  // set when stopped
};

struct RoundUpdate {
    std::vector<std::size_t> removed;
    bool stopped = false;
};

// Elimination and stopping applied to a completed round, against explicit
// thresholds. The empirical best always survives (its gap is 0 < d1).
// Increments the round counter and clears the selection flags.
RoundUpdate settle_round(ContextClusterState& st, double elim_threshold,
                         double stop_threshold, bool stopping_enabled);

// Prior interval sent with a query for arm cluster n: round 1 is the
// full-uncertainty prior (0, 1, 0); later rounds are the sample mean plus or
// minus 2 L_X rho + 2 L_K rho + 2 D(round-1), with delta = T^-(1+gamma).
PriorInfo prior_for(const ContextClusterState& st, std::size_t arm_cluster,
                    int epoch, const AlgoParams& p);

struct PolicyOptions {
    bool learned_priors = true;    // false: every query carries (0, 1, 0)
    bool stopping_enabled = true;  // false: never leaves exploration
    ArmPick arm_pick = ArmPick::center;
};

class Policy {
public:
    explicit Policy(AlgoParams params, PolicyOptions options = {});

    // Rebuilds both partitions at radius T_i^(-alpha) and resets all
    // learning state; nothing carries across epochs.
    void begin_epoch(int epoch);

    Decision step(const Point& context, Rng& rng);
    void record_reward(std::size_t context_cluster, std::size_t arm_cluster,
                       double reward);
    bool round_complete(std::size_t context_cluster) const;
    RoundUpdate end_of_round(std::size_t context_cluster);

    int epoch() const { return epoch_; }
    std::uint64_t current_epoch_length() const { return epoch_len_; }
    const Partition& context_partition() const { return context_part_; }
    const Partition& arm_partition() const { return arm_part_; }
    const ContextClusterState& cluster(std::size_t m) const;
    const AlgoParams& params() const { return params_; }
    const PolicyOptions& options() const { return options_; }

    // Key-value dump of the full epoch state, for golden-trace comparisons.
    std::string snapshot() const;

private:
    AlgoParams params_;
    PolicyOptions options_;
    int epoch_ = -1;
    std::uint64_t epoch_len_ = 0;
    Partition context_part_;
    Partition arm_part_;
    std::vector<ContextClusterState> clusters_;

    Point pick_arm(std::size_t arm_cluster, Rng& rng) const;
};

}  // namespace cbal
