#include "cbal/policy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cbal {

RoundUpdate settle_round(ContextClusterState& st, double elim_threshold,
                         double stop_threshold, bool stopping_enabled) {
    if (st.stopped) throw std::logic_error("settle_round: cluster already stopped");
    if (st.selected_count != st.active.size())
        throw std::logic_error("settle_round: round incomplete");

    double best = 0.0;
    bool first = true;
    for (auto n : st.active) {
        const double m = st.estimates[n].mean;
        if (first || m > best) best = m;  // scan order keeps the lowest-index max
        first = false;
    }

    RoundUpdate update;
    std::vector<std::size_t> survivors;
    survivors.reserve(st.active.size());
    for (auto n : st.active) {
        if (best - st.estimates[n].mean >= elim_threshold)
            update.removed.push_back(n);
        else
            survivors.push_back(n);
    }
    st.active = std::move(survivors);

    if (stopping_enabled) {
        bool all_close = true;
        for (auto n : st.active)
            if (best - st.estimates[n].mean > stop_threshold) {
                all_close = false;
                break;
            }
        if (all_close) {
            st.stopped = true;
            st.stop_round = st.round;
            update.stopped = true;
        }
    }

    st.round += 1;
    std::fill(st.selected.begin(), st.selected.end(), char{0});
    st.selected_count = 0;
    return update;
}

PriorInfo prior_for(const ContextClusterState& st, std::size_t arm_cluster,
                    int epoch, const AlgoParams& p) {
    if (std::find(st.active.begin(), st.active.end(), arm_cluster) == st.active.end())
        throw std::logic_error("prior_for: arm cluster is not active");
    if (st.round == 1) return PriorInfo{0.0, 1.0, 0.0};

    const double rho = nominal_radius(epoch, p.alpha);
    const double slack = 2.0 * p.lip_context * rho + 2.0 * p.lip_arm * rho +
                         2.0 * deviation_bound(st.round - 1, epoch_length(epoch), p.gamma);
    const double mean = st.estimates[arm_cluster].mean;
    return PriorInfo{mean - slack, mean + slack, prior_delta(epoch, p.gamma)};
}

Policy::Policy(AlgoParams params, PolicyOptions options)
    : params_(params), options_(options) {
    params_.validate();
}

void Policy::begin_epoch(int epoch) {
    const double radius = nominal_radius(epoch, params_.alpha);
    epoch_ = epoch;
    epoch_len_ = epoch_length(epoch);
    context_part_ = Partition::build(params_.context_dim, radius);
    arm_part_ = Partition::build(params_.arm_dim, radius);

    const std::size_t arm_clusters = arm_part_.cluster_count();
    clusters_.assign(context_part_.cluster_count(), ContextClusterState{});
    for (auto& st : clusters_) {
        st.active.resize(arm_clusters);
        for (std::size_t n = 0; n < arm_clusters; ++n) st.active[n] = n;
        st.estimates.assign(arm_clusters, ArmEstimate{});
        st.selected.assign(arm_clusters, char{0});
    }
}

const ContextClusterState& Policy::cluster(std::size_t m) const {
    if (m >= clusters_.size()) throw std::out_of_range("Policy: context cluster index");
    return clusters_[m];
}

Point Policy::pick_arm(std::size_t arm_cluster, Rng& rng) const {
    if (options_.arm_pick == ArmPick::center) return arm_part_.center(arm_cluster);
    const Cell cell = arm_part_.bounds(arm_cluster);
    Point arm(cell.lo.size());
    for (std::size_t a = 0; a < arm.size(); ++a)
        arm[a] = rng.uniform(cell.lo[a], cell.hi[a]);
    return arm;
}

Decision Policy::step(const Point& context, Rng& rng) {
    if (epoch_ < 0) throw std::logic_error("Policy::step before begin_epoch");
    const std::size_t m = context_part_.locate(context);
    auto& st = clusters_[m];

    Decision d;
    d.context_cluster = m;
    d.epoch = epoch_;
    d.round = st.round;

    if (!st.stopped) {
        std::size_t chosen = st.active.size();
        for (std::size_t idx = 0; idx < st.active.size(); ++idx) {
            if (!st.selected[st.active[idx]]) {
                chosen = idx;
                break;
            }
        }
        if (chosen == st.active.size())
            throw std::logic_error("Policy::step: round complete but not settled");
        d.arm_cluster = st.active[chosen];
        d.phase = Phase::exploration;
        d.query = true;
        d.prior = options_.learned_priors ? prior_for(st, d.arm_cluster, epoch_, params_)
                                          : PriorInfo{0.0, 1.0, 0.0};
    } else {
        d.arm_cluster = st.active.front();
        d.phase = Phase::exploitation;
        d.query = false;
    }
    d.arm = pick_arm(d.arm_cluster, rng);
    return d;
}

void Policy::record_reward(std::size_t context_cluster, std::size_t arm_cluster,
                           double reward) {
    if (!(reward >= 0.0 && reward <= 1.0))
        throw std::invalid_argument("record_reward: reward outside [0,1]");
    auto& st = clusters_.at(context_cluster);
    if (st.stopped) throw std::logic_error("record_reward: cluster is exploiting");
    if (std::find(st.active.begin(), st.active.end(), arm_cluster) == st.active.end())
        throw std::logic_error("record_reward: arm cluster is not active");
    if (st.selected[arm_cluster])
        throw std::logic_error("record_reward: arm cluster already sampled this round");

    auto& est = st.estimates[arm_cluster];
    est.mean = (est.mean * static_cast<double>(est.count) + reward) /
               static_cast<double>(est.count + 1);
    est.count += 1;
    st.selected[arm_cluster] = 1;
    st.selected_count += 1;
}

bool Policy::round_complete(std::size_t context_cluster) const {
    const auto& st = clusters_.at(context_cluster);
    return !st.stopped && st.selected_count == st.active.size();
}

RoundUpdate Policy::end_of_round(std::size_t context_cluster) {
    auto& st = clusters_.at(context_cluster);
    const double d1 = elimination_threshold(epoch_, st.round, params_);
    const double d2 = stopping_threshold(epoch_, st.round, params_);
    RoundUpdate update = settle_round(st, d1, d2, options_.stopping_enabled);
    if (update.stopped) {
        // integer-corrected form of the analytic stop-round bound
        const double bound = std::max(1.0, std::ceil(stop_round_bound(epoch_, params_)));
        if (static_cast<double>(st.stop_round) > bound)
            throw std::logic_error("stop round exceeded the analytic bound");
    }
    return update;
}

std::string Policy::snapshot() const {
    std::ostringstream out;
    out << "epoch=" << epoch_ << "\n";
    out << "context_clusters=" << clusters_.size() << "\n";
    out << "arm_clusters=" << arm_part_.cluster_count() << "\n";
    for (std::size_t m = 0; m < clusters_.size(); ++m) {
        const auto& st = clusters_[m];
        out << "m=" << m << " round=" << st.round << " stopped=" << (st.stopped ? 1 : 0);
        if (st.stopped) out << " stop_round=" << st.stop_round;
        out << " active=";
        for (std::size_t i = 0; i < st.active.size(); ++i) {
            if (i) out << ',';
            out << st.active[i];
        }
        out << " means=";
        for (std::size_t n = 0; n < st.estimates.size(); ++n) {
            if (n) out << ',';
            out << st.estimates[n].mean << ':' << st.estimates[n].count;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cbal
