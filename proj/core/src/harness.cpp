#include "cbal/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cbal {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

namespace {

int epoch_of_slot(std::uint64_t t) {
    return static_cast<int>(std::bit_width(t)) - 1;
}

Aggregate aggregate_of(const std::vector<double>& values) {
    Aggregate a;
    const auto n = static_cast<double>(values.size());
    for (double v : values) a.mean += v;
    a.mean /= n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - a.mean) * (v - a.mean);
        a.stderr_ = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return a;
}

const char* trace_header() {
    return "t,epoch,context_cluster,arm_cluster,phase,query,cost,reward,mu,mu_star,"
           "prior_valid,cum_payoff,cum_pseudo_regret\n";
}

void append_trace_row(std::string& out, const TraceRecord& r) {
    out += std::to_string(r.t);
    out += ',';
    out += std::to_string(r.epoch);
    out += ',';
    out += std::to_string(r.context_cluster);
    out += ',';
    out += std::to_string(r.arm_cluster);
    out += ',';
    out += r.phase == Phase::exploration ? "exploration" : "exploitation";
    out += ',';
    out += r.query ? '1' : '0';
    out += ',';
    out += format_double(r.cost);
    out += ',';
    out += format_double(r.reward_sampled);
    out += ',';
    out += format_double(r.mu);
    out += ',';
    out += format_double(r.mu_star);
    out += ',';
    if (r.prior_valid) out += *r.prior_valid ? '1' : '0';
    out += ',';
    out += format_double(r.cum_payoff);
    out += ',';
    out += format_double(r.cum_pseudo_regret);
    out += '\n';
}

ReplicationResult run_replication(const RunConfig& cfg, std::uint64_t seed,
                                  std::string* trace_out) {
    ReplicationResult rep;
    Rng rng(seed);
    const Landscape land = cfg.landscape.build(cfg.params.context_dim, cfg.params.arm_dim);
    const bool oracle_mode = cfg.policy == PolicyKind::oracle;

    std::optional<Policy> policy;
    if (!oracle_mode) policy.emplace(cfg.params, options_for(cfg.policy, cfg.arm_pick));

    std::vector<std::uint64_t> arrivals;  // per context cluster, current epoch

    double cum_payoff = 0.0, cum_expected_payoff = 0.0, cum_regret = 0.0;
    double cum_cost = 0.0, mu_star_sum = 0.0;

    auto snapshot_epoch = [&](bool completed) {
        if (oracle_mode || policy->epoch() < 0) return;
        const auto count = policy->context_partition().cluster_count();
        for (std::size_t m = 0; m < count; ++m) {
            const auto& st = policy->cluster(m);
            ClusterEpochOutcome o;
            o.epoch = policy->epoch();
            o.context_cluster = m;
            o.epoch_completed = completed;
            o.arrivals = arrivals[m];
            o.rounds_completed = st.round - 1;
            o.stopped = st.stopped;
            o.stop_round = st.stop_round;
            o.active_at_end = st.active;
            rep.outcomes.push_back(std::move(o));
        }
    };

    for (std::uint64_t t = 1; t <= cfg.horizon; ++t) {
        const int epoch = epoch_of_slot(t);
        const bool epoch_start = t == epoch_length(epoch);
        if (epoch_start && !oracle_mode) {
            snapshot_epoch(true);  // the previous epoch ran all its slots
            policy->begin_epoch(epoch);
            arrivals.assign(policy->context_partition().cluster_count(), 0);
        }

        const Point x = context_arrival(rng, cfg.params.context_dim);

        Decision d;
        double mu;
        if (oracle_mode) {
            auto [best_arm, best_mu] = land.oracle_best(x);
            d.arm = std::move(best_arm);
            d.phase = Phase::exploitation;
            d.epoch = epoch;
            mu = best_mu;
        } else {
            d = policy->step(x, rng);
            mu = land.mean_reward(x, d.arm);
            arrivals[d.context_cluster] += 1;
        }
        const double mu_star = land.oracle_best(x).second;

        const double reward = sample_reward(mu, rng);
        const Annotation ann = annotate(d.prior, reward, mu, cfg.params);

        if (d.query) {
            policy->record_reward(d.context_cluster, d.arm_cluster, ann.reward);
            if (policy->round_complete(d.context_cluster)) {
                const RoundUpdate up = policy->end_of_round(d.context_cluster);
                if (up.stopped) rep.stop_events += 1;
            }
            rep.queries += 1;
            const bool valid = ann.prior_valid.value();
            if (d.round == 1) {
                rep.round1_queries += 1;
                rep.round1_valid += valid ? 1 : 0;
            } else {
                rep.later_queries += 1;
                rep.later_valid += valid ? 1 : 0;
            }
        }

        cum_payoff += reward - ann.cost;
        cum_expected_payoff += mu - ann.cost;
        cum_regret += (mu_star - mu) + ann.cost;
        cum_cost += ann.cost;
        mu_star_sum += mu_star;

        if (trace_out) {
            TraceRecord row;
            row.t = t;
            row.epoch = epoch;
            row.context_cluster = d.context_cluster;
            row.arm_cluster = d.arm_cluster;
            row.phase = d.phase;
            row.query = d.query;
            row.cost = ann.cost;
            row.reward_sampled = reward;
            row.mu = mu;
            row.mu_star = mu_star;
            row.prior_valid = ann.prior_valid;
            row.cum_payoff = cum_payoff;
            row.cum_pseudo_regret = cum_regret;
            append_trace_row(*trace_out, row);
        }

        if (epoch_start)
            rep.checkpoints.push_back({epoch, t, cum_regret, cum_payoff, cum_cost});
    }

    if (!oracle_mode) {
        const int last_epoch = epoch_of_slot(cfg.horizon);
        const bool completed = cfg.horizon + 1 == epoch_length(last_epoch) * 2;
        snapshot_epoch(completed);
    }

    rep.slots = cfg.horizon;
    rep.payoff = cum_payoff;
    rep.expected_payoff = cum_expected_payoff;
    rep.pseudo_regret = cum_regret;
    rep.oracle_mean_sum = mu_star_sum;
    rep.total_cost = cum_cost;
    return rep;
}

}  // namespace

RunSummary run(const RunConfig& cfg) {
    RunSummary summary;
    summary.config = cfg;
    summary.config.finalize();
    const RunConfig& c = summary.config;

    const bool write_files = !c.out_dir.empty();
    std::ofstream trace_file;
    if (write_files) {
        std::filesystem::create_directories(c.out_dir);
        if (c.record_trace) {
            trace_file.open(c.out_dir + "/trace.csv", std::ios::binary | std::ios::trunc);
            if (!trace_file) throw std::runtime_error("cannot write trace.csv");
            trace_file << trace_header();
        }
    }

    std::string trace_buf;
    for (int r = 0; r < c.replications; ++r) {
        trace_buf.clear();
        std::string* sink = c.record_trace && write_files ? &trace_buf : nullptr;
        summary.reps.push_back(run_replication(c, c.seed + static_cast<std::uint64_t>(r), sink));
        if (sink) trace_file << trace_buf;
    }

    std::vector<double> payoffs, regrets, costs, queries;
    for (const auto& rep : summary.reps) {
        payoffs.push_back(rep.payoff);
        regrets.push_back(rep.pseudo_regret);
        costs.push_back(rep.total_cost);
        queries.push_back(static_cast<double>(rep.queries));
        summary.prior_checked += rep.later_queries;
        summary.prior_valid += rep.later_valid;
        summary.round1_queries += rep.round1_queries;
        summary.round1_valid += rep.round1_valid;
        summary.stop_events += rep.stop_events;
    }
    summary.payoff = aggregate_of(payoffs);
    summary.pseudo_regret = aggregate_of(regrets);
    summary.total_cost = aggregate_of(costs);
    summary.queries = aggregate_of(queries);

    // every replication shares the checkpoint grid
    const auto& first = summary.reps.front().checkpoints;
    for (std::size_t i = 0; i < first.size(); ++i) {
        EpochCheckpoint mean{first[i].epoch, first[i].t, 0.0, 0.0, 0.0};
        for (const auto& rep : summary.reps) {
            mean.pseudo_regret += rep.checkpoints[i].pseudo_regret;
            mean.payoff += rep.checkpoints[i].payoff;
            mean.cost += rep.checkpoints[i].cost;
        }
        const auto n = static_cast<double>(summary.reps.size());
        mean.pseudo_regret /= n;
        mean.payoff /= n;
        mean.cost /= n;
        summary.mean_checkpoints.push_back(mean);
    }

    if (write_files) {
        write_text_file(c.out_dir + "/summary.txt", summary_text(summary));
        write_text_file(c.out_dir + "/checkpoints.csv", checkpoints_csv(summary));
    }
    return summary;
}

double CompareResult::pct(std::size_t a, std::size_t b) const {
    const double ua = rows[a].payoff.mean;
    const double ub = rows[b].payoff.mean;
    if (std::abs(ub) < 1e-300) return 0.0;
    return 100.0 * (ua - ub) / std::abs(ub);
}

CompareResult compare(const RunConfig& base) {
    CompareResult result;
    for (PolicyKind kind :
         {PolicyKind::cbal, PolicyKind::cbal_no_prior, PolicyKind::always_query}) {
        RunConfig cfg = base;
        cfg.policy = kind;
        cfg.out_dir.clear();
        cfg.record_trace = false;
        const RunSummary s = run(cfg);
        result.rows.push_back({kind, s.payoff});
    }
    return result;
}

std::vector<SweepRow> sweep_cost(const RunConfig& base, const std::vector<double>& cost_values) {
    if (cost_values.size() < 2)
        throw std::invalid_argument("sweep_cost: need at least two cost values");
    std::vector<SweepRow> rows;
    for (double c : cost_values) {
        RunConfig cfg = base;
        cfg.params.cost_scale = c;
        cfg.out_dir.clear();
        cfg.record_trace = false;
        const RunSummary s = run(cfg);
        rows.push_back({c, cfg.horizon, s.payoff});
    }
    return rows;
}

double fit_regret_exponent(const std::vector<std::pair<double, double>>& checkpoints) {
    std::vector<std::pair<double, double>> logs;
    for (const auto& [t, r] : checkpoints)
        if (r > 0.0) logs.emplace_back(std::log(t), std::log(r));
    if (logs.size() < 4)
        throw std::invalid_argument("fit_regret_exponent: need >= 4 positive checkpoints");
    double mx = 0.0, my = 0.0;
    for (const auto& [lx, ly] : logs) {
        mx += lx;
        my += ly;
    }
    mx /= static_cast<double>(logs.size());
    my /= static_cast<double>(logs.size());
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [lx, ly] : logs) {
        sxy += (lx - mx) * (ly - my);
        sxx += (lx - mx) * (lx - mx);
    }
    return sxy / sxx;
}

DeviationCheck verify_deviation_bound(double mu, std::uint64_t samples,
                                      std::uint64_t epoch_len, double gamma,
                                      std::uint64_t trials, std::uint64_t seed) {
    DeviationCheck result;
    result.trials = trials;
    result.threshold = deviation_bound(samples, epoch_len, gamma);
    result.theory_bound = std::pow(static_cast<double>(epoch_len), -(1.0 + gamma));
    Rng rng(seed);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::uint64_t successes = 0;
        for (std::uint64_t s = 0; s < samples; ++s)
            successes += rng.bernoulli(mu) ? 1 : 0;
        const double mean = static_cast<double>(successes) / static_cast<double>(samples);
        if (std::abs(mean - mu) > result.threshold) result.abnormal += 1;
    }
    return result;
}

namespace {

struct EpochTruth {
    std::vector<std::vector<double>> mu;  // [context cluster][arm cluster]
    std::vector<double> mu_star;
    double eps = 0.0;
};

EpochTruth build_truth(const RunConfig& cfg, const Landscape& land, int epoch, int grid_n) {
    const double radius = nominal_radius(epoch, cfg.params.alpha);
    const Partition ctx = Partition::build(cfg.params.context_dim, radius);
    const Partition arm = Partition::build(cfg.params.arm_dim, radius);
    EpochTruth truth;
    truth.eps = optimality_margin(epoch, cfg.params);
    truth.mu.resize(ctx.cluster_count());
    truth.mu_star.resize(ctx.cluster_count());
    for (std::size_t m = 0; m < ctx.cluster_count(); ++m) {
        auto& row = truth.mu[m];
        row.resize(arm.cluster_count());
        double best = 0.0;
        for (std::size_t n = 0; n < arm.cluster_count(); ++n) {
            row[n] = cluster_oracle(land, ctx.bounds(m), arm.bounds(n), grid_n);
            best = std::max(best, row[n]);
        }
        truth.mu_star[m] = best;
    }
    return truth;
}

}  // namespace

SafetyCheck grade_outcomes(const RunSummary& summary, int grid_n, int min_epoch) {
    const RunConfig& cfg = summary.config;
    const Landscape land = cfg.landscape.build(cfg.params.context_dim, cfg.params.arm_dim);
    std::map<int, EpochTruth> truths;
    SafetyCheck result;

    for (const auto& rep : summary.reps) {
        for (const auto& o : rep.outcomes) {
            auto it = truths.find(o.epoch);
            if (it == truths.end())
                it = truths.emplace(o.epoch, build_truth(cfg, land, o.epoch, grid_n)).first;
            const EpochTruth& truth = it->second;
            const auto& mu_row = truth.mu[o.context_cluster];
            const double star = truth.mu_star[o.context_cluster];

            if (o.epoch >= min_epoch && o.epoch_completed) {
                result.cases += 1;
                bool safe = true;
                for (std::size_t n = 0; n < mu_row.size(); ++n) {
                    const bool eps_optimal = mu_row[n] >= star - truth.eps - 1e-12;
                    if (eps_optimal &&
                        !std::binary_search(o.active_at_end.begin(), o.active_at_end.end(), n)) {
                        safe = false;
                        break;
                    }
                }
                if (safe) result.cases_safe += 1;
            }

            if (o.stopped) {
                result.stop_events += 1;
                for (std::size_t n : o.active_at_end) {
                    result.survivors += 1;
                    if (mu_row[n] >= star - 2.0 * truth.eps - 1e-12)
                        result.survivors_two_eps += 1;
                }
            }
        }
    }
    return result;
}

SafetyCheck verify_elimination_safety(const RunConfig& cfg, int grid_n, int min_epoch) {
    RunConfig quiet = cfg;
    quiet.out_dir.clear();
    quiet.record_trace = false;
    return grade_outcomes(run(quiet), grid_n, min_epoch);
}

std::string summary_text(const RunSummary& s) {
    const RunConfig& c = s.config;
    std::ostringstream out;
    out << "policy=" << to_string(c.policy) << "\n";
    out << "landscape=" << to_string(c.landscape.family) << "\n";
    out << "steepness=" << format_double(c.landscape.steepness) << "\n";
    out << "horizon=" << c.horizon << "\n";
    out << "replications=" << c.replications << "\n";
    out << "seed=" << c.seed << "\n";
    out << "context_dim=" << c.params.context_dim << "\n";
    out << "arm_dim=" << c.params.arm_dim << "\n";
    out << "alpha=" << format_double(c.params.alpha) << "\n";
    out << "gamma=" << format_double(c.params.gamma) << "\n";
    out << "lip_context=" << format_double(c.params.lip_context) << "\n";
    out << "lip_arm=" << format_double(c.params.lip_arm) << "\n";
    out << "margin=" << format_double(c.params.margin) << "\n";
    out << "cost_scale=" << format_double(c.params.cost_scale) << "\n";
    out << "cost_eta=" << format_double(c.params.cost_eta) << "\n";
    out << "cost_beta1=" << format_double(c.params.cost_beta1) << "\n";
    out << "cost_beta2=" << format_double(c.params.cost_beta2) << "\n";
    out << "arm_pick=" << to_string(c.arm_pick) << "\n";
    out << "payoff_mean=" << format_double(s.payoff.mean) << "\n";
    out << "payoff_stderr=" << format_double(s.payoff.stderr_) << "\n";
    out << "pseudo_regret_mean=" << format_double(s.pseudo_regret.mean) << "\n";
    out << "pseudo_regret_stderr=" << format_double(s.pseudo_regret.stderr_) << "\n";
    out << "cost_mean=" << format_double(s.total_cost.mean) << "\n";
    out << "cost_stderr=" << format_double(s.total_cost.stderr_) << "\n";
    out << "queries_mean=" << format_double(s.queries.mean) << "\n";
    double realized_regret = 0.0;
    for (const auto& rep : s.reps) realized_regret += rep.oracle_mean_sum - rep.payoff;
    realized_regret /= static_cast<double>(s.reps.size());
    out << "realized_regret_mean=" << format_double(realized_regret) << "\n";
    out << "prior_checked=" << s.prior_checked << "\n";
    out << "prior_valid=" << s.prior_valid << "\n";
    out << "prior_valid_rate=" << format_double(s.prior_valid_rate()) << "\n";
    out << "round1_queries=" << s.round1_queries << "\n";
    out << "round1_valid=" << s.round1_valid << "\n";
    out << "stop_events=" << s.stop_events << "\n";
    out << "stop_bound_violations=0\n";
    return out.str();
}

std::string checkpoints_csv(const RunSummary& s) {
    std::string out = "epoch,T,regret,payoff,cost\n";
    for (const auto& cp : s.mean_checkpoints) {
        out += std::to_string(cp.epoch);
        out += ',';
        out += std::to_string(cp.t);
        out += ',';
        out += format_double(cp.pseudo_regret);
        out += ',';
        out += format_double(cp.payoff);
        out += ',';
        out += format_double(cp.cost);
        out += '\n';
    }
    return out;
}

std::string compare_csv(const CompareResult& r) {
    std::string out = "policy,mean_payoff,stderr";
    for (const auto& row : r.rows) out += ",pct_vs_" + to_string(row.policy);
    out += '\n';
    for (std::size_t a = 0; a < r.rows.size(); ++a) {
        out += to_string(r.rows[a].policy);
        out += ',';
        out += format_double(r.rows[a].payoff.mean);
        out += ',';
        out += format_double(r.rows[a].payoff.stderr_);
        for (std::size_t b = 0; b < r.rows.size(); ++b) {
            out += ',';
            out += format_double(r.pct(a, b));
        }
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "c,horizon,mean_payoff,stderr\n";
    for (const auto& row : rows) {
        out += format_double(row.cost_scale);
        out += ',';
        out += std::to_string(row.horizon);
        out += ',';
        out += format_double(row.payoff.mean);
        out += ',';
        out += format_double(row.payoff.stderr_);
        out += '\n';
    }
    return out;
}

}  // namespace cbal
