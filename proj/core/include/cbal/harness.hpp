#pragma once
/*
Experiment orchestration: seeded replications over a horizon with the
doubling epoch schedule, per-slot trace logging, payoff and pseudo-regret
accounting, epoch checkpoints for the regret-slope fit, baseline comparison
and the cost sweep.

Accounting per slot t:
  payoff        += reward_sampled - cost
  pseudo_regret += (mu_star - mu) + cost
so pseudo_regret + expected_payoff == sum of mu_star exactly, where
expected_payoff uses mu in place of the sampled reward.

Replications run serially in ascending index; output files are
byte-deterministic for a fixed config.
*/
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbal/config.hpp"

namespace cbal {

struct TraceRecord {
    std::uint64_t t = 0;
    int epoch = 0;
    std::size_t context_cluster = 0;
    std::size_t arm_cluster = 0;
    Phase phase = Phase::exploration;
    bool query = false;
    double cost = 0.0;
    double reward_sampled = 0.0;
    double mu = 0.0;
    double mu_star = 0.0;
    std::optional<bool> prior_valid;
    double cum_payoff = 0.0;
    double cum_pseudo_regret = 0.0;
};

// Cumulative totals after slot t = 2^epoch.
struct EpochCheckpoint {
    int epoch = 0;
    std::uint64_t t = 0;
    double pseudo_regret = 0.0;
    double payoff = 0.0;
    double cost = 0.0;
};

// End-of-epoch survival snapshot for one context cluster, consumed by the
// elimination-safety verification.
struct ClusterEpochOutcome {
    int epoch = 0;
    std::size_t context_cluster = 0;
    bool epoch_completed = false;  // epoch ran its full 2^i slots
    std::uint64_t arrivals = 0;
    std::uint64_t rounds_completed = 0;
    bool stopped = false;
    std::uint64_t stop_round = 0;
    std::vector<std::size_t> active_at_end;
};

struct ReplicationResult {
    std::uint64_t slots = 0;
    double payoff = 0.0;
    double expected_payoff = 0.0;
    double pseudo_regret = 0.0;
    double oracle_mean_sum = 0.0;
    double total_cost = 0.0;
    std::uint64_t queries = 0;
    std::uint64_t round1_queries = 0;
    std::uint64_t round1_valid = 0;
    std::uint64_t later_queries = 0;  // priors from rounds > 1
    std::uint64_t later_valid = 0;
    std::uint64_t stop_events = 0;
    std::vector<EpochCheckpoint> checkpoints;
    std::vector<ClusterEpochOutcome> outcomes;
};

struct Aggregate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

struct RunSummary {
    RunConfig config;
    std::vector<ReplicationResult> reps;
    Aggregate payoff;
    Aggregate pseudo_regret;
    Aggregate total_cost;
    Aggregate queries;
    // mean cumulative pseudo-regret / payoff / cost at each epoch checkpoint
    std::vector<EpochCheckpoint> mean_checkpoints;
    std::uint64_t prior_checked = 0;  // rounds > 1
    std::uint64_t prior_valid = 0;
    std::uint64_t round1_queries = 0;
    std::uint64_t round1_valid = 0;
    std::uint64_t stop_events = 0;

    double prior_valid_rate() const {
        return prior_checked == 0 ? 1.0
                                  : static_cast<double>(prior_valid) / prior_checked;
    }
};

// Runs cfg.replications replications on seeds cfg.seed + r. When
// cfg.out_dir is set, writes trace.csv (if record_trace), summary.txt and
// checkpoints.csv. Stop events are checked against the stop-round bound and
// throw std::logic_error on violation.
RunSummary run(const RunConfig& cfg);

struct CompareRow {
    PolicyKind policy;
    Aggregate payoff;
};

struct CompareResult {
    std::vector<CompareRow> rows;  // cbal, cbal_no_prior, always_query
    // pct[a][b] = 100 * (U_a - U_b) / |U_b|
    double pct(std::size_t a, std::size_t b) const;
};

// Same environment and seeds across the three bandit kinds.
CompareResult compare(const RunConfig& base);

struct SweepRow {
    double cost_scale = 0.0;
    std::uint64_t horizon = 0;
    Aggregate payoff;
};

std::vector<SweepRow> sweep_cost(const RunConfig& base, const std::vector<double>& cost_values);

// OLS slope of log R against log T. Nonpositive regrets are dropped; fewer
// than 4 surviving points throws std::invalid_argument.
double fit_regret_exponent(const std::vector<std::pair<double, double>>& checkpoints);

struct DeviationCheck {
    std::uint64_t trials = 0;
    std::uint64_t abnormal = 0;
    double threshold = 0.0;  // deviation bound D(s)
    double theory_bound = 0.0;

    double rate() const { return static_cast<double>(abnormal) / trials; }
};

// Monte Carlo check of the per-round abnormal-event probability: mean of
// `samples` Bernoulli(mu) draws vs. D(samples) at the given epoch length.
DeviationCheck verify_deviation_bound(double mu = 0.5, std::uint64_t samples = 64,
                                      std::uint64_t epoch_len = 256, double gamma = 0.5,
                                      std::uint64_t trials = 1000000,
                                      std::uint64_t seed = 1);

struct SafetyCheck {
    std::uint64_t cases = 0;       // completed-epoch (epoch >= min_epoch, m) pairs
    std::uint64_t cases_safe = 0;  // every eps-optimal arm cluster survived
    std::uint64_t stop_events = 0;
    std::uint64_t survivors = 0;
    std::uint64_t survivors_two_eps = 0;

    double safety_rate() const {
        return cases == 0 ? 1.0 : static_cast<double>(cases_safe) / cases;
    }
    double two_eps_rate() const {
        return survivors == 0 ? 1.0
                              : static_cast<double>(survivors_two_eps) / survivors;
    }
};

// Runs cfg and grades every context-cluster epoch against the lattice
// cluster oracle: (a) did each eps(i)-optimal arm cluster survive a
// completed epoch, (b) at stop events, are survivors 2*eps(i)-optimal.
SafetyCheck verify_elimination_safety(const RunConfig& cfg, int grid_n = 9, int min_epoch = 6);
SafetyCheck grade_outcomes(const RunSummary& summary, int grid_n = 9, int min_epoch = 6);

// csv/text helpers shared by the writers and the CLI
std::string format_double(double v);  // shortest round-trip-safe form
void write_text_file(const std::string& path, const std::string& content);

std::string summary_text(const RunSummary& s);
std::string checkpoints_csv(const RunSummary& s);
std::string compare_csv(const CompareResult& r);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace cbal
