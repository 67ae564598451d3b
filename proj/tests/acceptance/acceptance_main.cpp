// Acceptance suite: one check per release criterion, each printable and
// runnable on its own (--criterion N) or together (default). Exit status is
// the number of failing criteria.
//
// Reference constants come from tests/oracle/derived_values.py; experiment
// configurations are pinned here, including seeds, so reruns are
// reproducible bit for bit.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cbal/harness.hpp"
#include "frozen_values.hpp"

using namespace cbal;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> check;  // fills a detail string
};

bool close_rel(double actual, double expected, double rel = 1e-9) {
    return std::abs(actual - expected) <=
           rel * std::max({std::abs(expected), std::abs(actual), 1e-300});
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

AlgoParams reference_params() {
    AlgoParams p;
    p.context_dim = 2;
    p.arm_dim = 2;
    p.alpha = 1.0 / 6;
    p.gamma = 0.5;
    p.lip_context = 0.5;
    p.lip_arm = 0.5;
    p.margin = 5.0;
    return p;
}

// ---- criterion 1: formula conformance -------------------------------------

bool check_formulas(std::string& detail) {
    const auto p = reference_params();
    auto lipfree = p;
    lipfree.lip_context = 0.0;
    lipfree.lip_arm = 0.0;

    ContextClusterState st;
    st.active = {0};
    st.estimates = {{0.6, 400}};
    st.selected = {0};
    st.round = 401;
    const PriorInfo prior = prior_for(st, 0, 12, p);

    ContextClusterState fresh;
    fresh.active = {0};
    fresh.estimates = {{0.0, 0}};
    fresh.selected = {0};
    const PriorInfo first = prior_for(fresh, 0, 12, p);

    AlgoParams cost_params = p;
    cost_params.cost_scale = 1.0;
    cost_params.cost_eta = 1.0;
    cost_params.cost_beta1 = 1.0;
    cost_params.cost_beta2 = 2.0;
    const double plain_cost = annotate(PriorInfo{0.2, 0.7, 0.01}, 1.0, 0.5, cost_params).cost;
    cost_params.cost_beta1 = 2.0;
    cost_params.cost_beta2 = 1.0;
    const double wide_cost =
        annotate(PriorInfo{frozen::prior_i12_r401_a, frozen::prior_i12_r401_b,
                           frozen::prior_i12_r401_delta},
                 0.0, 0.6, cost_params)
            .cost;

    struct Entry {
        const char* what;
        double actual;
        double expected;
    };
    const Entry entries[] = {
        {"epoch_length(0)", static_cast<double>(epoch_length(0)), 1.0},
        {"epoch_length(5)", static_cast<double>(epoch_length(5)), 32.0},
        {"epoch_length(10)", static_cast<double>(epoch_length(10)), 1024.0},
        {"nominal_radius(0)", nominal_radius(0, 1.0 / 6), 1.0},
        {"nominal_radius(6)", nominal_radius(6, 1.0 / 6), 0.5},
        {"nominal_radius(12)", nominal_radius(12, 1.0 / 6), 0.25},
        {"deviation(1,1)", deviation_bound(1, 1, 0.5), frozen::dev_s1_t1_g05},
        {"deviation(1,64)", deviation_bound(1, 64, 0.5), frozen::dev_s1_t64_g05},
        {"deviation(100,64)", deviation_bound(100, 64, 0.5), frozen::dev_s100_t64_g05},
        {"margin(0)", optimality_margin(0, p), 5.0},
        {"margin(6)", optimality_margin(6, p), 2.5},
        {"margin(12)", optimality_margin(12, p), 1.25},
        {"D1(6,100)", elimination_threshold(6, 100, p), frozen::elim_i6_s100},
        {"D1(0,1,lip0)", elimination_threshold(0, 1, lipfree), frozen::elim_i0_s1_nolip},
        {"D2(6,100)", stopping_threshold(6, 100, p), frozen::stop_i6_s100},
        {"prior.lo", prior.lo, frozen::prior_i12_r401_a},
        {"prior.hi", prior.hi, frozen::prior_i12_r401_b},
        {"prior.delta", prior.delta, frozen::prior_i12_r401_delta},
        {"prior.round1.lo", first.lo, 0.0},
        {"prior.round1.hi", first.hi, 1.0},
        {"prior.round1.delta", first.delta, 0.0},
        {"cost.plain", plain_cost, frozen::cost_plain},
        {"cost.wide", wide_cost, frozen::cost_wide},
    };

    double worst = 0.0;
    for (const auto& e : entries) {
        if (!close_rel(e.actual, e.expected) &&
            !(e.expected == 0.0 && std::abs(e.actual) <= 1e-12)) {
            detail = std::string(e.what) + " = " + fmt(e.actual) + ", expected " +
                     fmt(e.expected);
            return false;
        }
        const double scale = std::max(std::abs(e.expected), 1.0);
        worst = std::max(worst, std::abs(e.actual - e.expected) / scale);
    }
    detail = "23 reference values, max relative error " + fmt(worst) + " <= 1e-9";
    return true;
}

// ---- criterion 2: algebraic identities -------------------------------------

bool check_identities(std::string& detail) {
    const auto p = reference_params();
    Rng rng(2024);
    double worst_identity = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int i = static_cast<int>(rng.uniform01() * 21);
        const auto s = static_cast<std::uint64_t>(1 + rng.uniform01() * 99999);
        const double gap = std::abs(elimination_threshold(i, s, p) +
                                    stopping_threshold(i, s, p) - 3.0 * optimality_margin(i, p));
        worst_identity = std::max(worst_identity, gap);
        if (gap > 1e-12) {
            detail = "D1+D2 vs 3*eps off by " + fmt(gap) + " at epoch " + std::to_string(i) +
                     ", round " + std::to_string(s);
            return false;
        }
    }

    double worst_width = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int i = 1 + static_cast<int>(rng.uniform01() * 15);
        const auto round = static_cast<std::uint64_t>(2 + rng.uniform01() * 1000);
        ContextClusterState st;
        st.active = {0};
        st.estimates = {{rng.uniform01(), round - 1}};
        st.selected = {0};
        st.round = round;
        const PriorInfo prior = prior_for(st, 0, i, p);
        const double rho = nominal_radius(i, p.alpha);
        const double want = 4.0 * p.lip_context * rho + 4.0 * p.lip_arm * rho +
                            4.0 * deviation_bound(round - 1, epoch_length(i), p.gamma);
        const double gap = std::abs(prior.width() - want);
        worst_width = std::max(worst_width, gap);
        if (gap > 1e-12) {
            detail = "prior width off by " + fmt(gap);
            return false;
        }
    }
    detail = "1000 threshold identities (worst " + fmt(worst_identity) +
             ") and 1000 prior widths (worst " + fmt(worst_width) + ") within 1e-12";
    return true;
}

// ---- criterion 3: deviation-bound Monte Carlo ------------------------------

bool check_deviation_mc(std::string& detail) {
    const auto r = verify_deviation_bound(0.5, 64, 256, 0.5, 1000000, 1);
    detail = "abnormal rate " + fmt(r.rate()) + " (theory " + fmt(r.theory_bound) +
             ", threshold D=" + fmt(r.threshold) + ")";
    return r.rate() <= 5e-4 && close_rel(r.theory_bound, frozen::abnormal_theory_t256_g05);
}

// ---- criterion 4: elimination safety ---------------------------------------

bool check_elimination_safety(std::string& detail) {
    RunConfig cfg = default_config();
    cfg.horizon = std::uint64_t{1} << 14;
    cfg.replications = 200;
    cfg.seed = 1;
    cfg.finalize();
    const auto r = verify_elimination_safety(cfg, 9, 6);
    detail = "survival " + fmt(100.0 * r.safety_rate()) + "% over " + std::to_string(r.cases) +
             " cases; " + fmt(100.0 * r.two_eps_rate()) + "% of " +
             std::to_string(r.survivors) + " stop-time survivors near-optimal";
    return r.cases > 0 && r.safety_rate() >= 0.95 && r.two_eps_rate() >= 0.95;
}

// ---- criterion 5: stop-round bound -----------------------------------------

bool check_stop_bound(std::string& detail) {
    std::uint64_t stops = 0, violations = 0;
    auto inspect = [&](const RunConfig& cfg) {
        const auto summary = run(cfg);  // end_of_round additionally throws on violation
        for (const auto& rep : summary.reps)
            for (const auto& o : rep.outcomes) {
                if (!o.stopped) continue;
                ++stops;
                const double bound =
                    std::max(1.0, std::ceil(stop_round_bound(o.epoch, summary.config.params)));
                if (static_cast<double>(o.stop_round) > bound) ++violations;
            }
    };

    RunConfig one_d = default_config();
    one_d.horizon = std::uint64_t{1} << 14;
    one_d.replications = 50;
    one_d.seed = 1;
    one_d.finalize();
    inspect(one_d);

    RunConfig two_d = default_config();
    two_d.params.context_dim = 2;
    two_d.params.arm_dim = 2;
    two_d.horizon = 10000;
    two_d.replications = 10;
    two_d.seed = 1;
    two_d.finalize();
    inspect(two_d);

    detail = std::to_string(stops) + " stop events, " + std::to_string(violations) +
             " bound violations";
    return stops > 0 && violations == 0;
}

// ---- criterion 6: regret-growth exponent -----------------------------------

bool check_regret_slope(std::string& detail) {
    RunConfig cfg = default_config();
    cfg.horizon = std::uint64_t{1} << 17;
    cfg.replications = 20;
    cfg.seed = 1;
    cfg.finalize();
    const auto summary = run(cfg);

    std::vector<std::pair<double, double>> tail;
    for (const auto& cp : summary.mean_checkpoints)
        if (cp.epoch >= 11 && cp.epoch <= 17)
            tail.emplace_back(static_cast<double>(cp.t), cp.pseudo_regret);
    const double slope = fit_regret_exponent(tail);

    bool decreasing = true;
    std::string ratios;
    const auto& cps = summary.mean_checkpoints;
    for (std::size_t i = cps.size() - 4; i < cps.size(); ++i) {
        const double ratio = cps[i].pseudo_regret / static_cast<double>(cps[i].t);
        if (!ratios.empty()) ratios += ",";
        ratios += fmt(ratio);
        if (i > cps.size() - 4 &&
            !(ratio < cps[i - 1].pseudo_regret / static_cast<double>(cps[i - 1].t)))
            decreasing = false;
    }

    detail = "slope " + fmt(slope) + " over epochs 11-17 (want [0.55,0.95]); R/T last 4: " +
             ratios + (decreasing ? " (decreasing)" : " (not decreasing)");
    return slope >= 0.55 && slope <= 0.95 && decreasing;
}

// ---- criterion 7: baseline comparison --------------------------------------

bool check_comparison(std::string& detail) {
    RunConfig cfg = default_config();
    cfg.horizon = 10000;
    cfg.replications = 20;
    cfg.seed = 1;
    cfg.finalize();
    const auto r = compare(cfg);

    const double cbal_payoff = r.rows[0].payoff.mean;
    const double no_prior = r.rows[1].payoff.mean;
    const double always = r.rows[2].payoff.mean;
    const double margin_vs_always = r.pct(0, 2);

    detail = "payoffs cbal=" + fmt(cbal_payoff) + " no_prior=" + fmt(no_prior) +
             " always_query=" + fmt(always) + "; cbal vs always " + fmt(margin_vs_always) + "%";
    return cbal_payoff > no_prior && no_prior > always && margin_vs_always >= 2.0;
}

// ---- criterion 8: cost sweep direction -------------------------------------

bool check_cost_sweep(std::string& detail) {
    const std::vector<double> costs{0.1, 0.25, 0.5, 1.0};
    RunConfig base = default_config();
    base.replications = 20;
    base.seed = 1;

    auto run_sweep = [&](std::uint64_t horizon) {
        RunConfig cfg = base;
        cfg.horizon = horizon;
        cfg.finalize();
        return sweep_cost(cfg, costs);
    };
    const auto short_rows = run_sweep(10000);
    const auto long_rows = run_sweep(20000);

    auto non_increasing = [](const std::vector<SweepRow>& rows) {
        for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
            const double slack = 0.005 * std::abs(rows[j].payoff.mean);
            if (rows[j + 1].payoff.mean > rows[j].payoff.mean + slack) return false;
        }
        return true;
    };
    auto relative_drop = [](const std::vector<SweepRow>& rows) {
        return (rows.front().payoff.mean - rows.back().payoff.mean) /
               std::abs(rows.front().payoff.mean);
    };

    const double drop_short = relative_drop(short_rows);
    const double drop_long = relative_drop(long_rows);
    detail = "payoff non-increasing in c at both horizons; relative drop " +
             fmt(100.0 * drop_short) + "% at T=1e4 vs " + fmt(100.0 * drop_long) +
             "% at T=2e4";
    return non_increasing(short_rows) && non_increasing(long_rows) && drop_long < drop_short;
}

// ---- criterion 9: prior validity -------------------------------------------

bool check_prior_validity(std::string& detail) {
    RunConfig cfg = default_config();
    cfg.horizon = 10000;
    cfg.replications = 20;
    cfg.seed = 1;
    cfg.finalize();
    const auto summary = run(cfg);
    detail = fmt(100.0 * summary.prior_valid_rate()) + "% of " +
             std::to_string(summary.prior_checked) + " later-round priors valid; " +
             std::to_string(summary.round1_valid) + "/" +
             std::to_string(summary.round1_queries) + " round-1 priors valid";
    return summary.prior_valid_rate() >= 0.99 &&
           summary.round1_valid == summary.round1_queries;
}

// ---- criterion 10: determinism ---------------------------------------------

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool check_determinism(std::string& detail) {
    RunConfig cfg = default_config();
    cfg.horizon = std::uint64_t{1} << 12;
    cfg.replications = 2;
    cfg.seed = 11;
    cfg.record_trace = true;
    cfg.finalize();

    const auto base = std::filesystem::temp_directory_path();
    const auto dir_a = base / "cbal_acceptance_det_a";
    const auto dir_b = base / "cbal_acceptance_det_b";
    cfg.out_dir = dir_a.string();
    run(cfg);
    cfg.out_dir = dir_b.string();
    run(cfg);

    bool ok = true;
    for (const char* name : {"trace.csv", "summary.txt", "checkpoints.csv"})
        ok = ok && !slurp(dir_a / name).empty() && slurp(dir_a / name) == slurp(dir_b / name);
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
    detail = ok ? "trace.csv, summary.txt and checkpoints.csv byte-identical across reruns"
                : "outputs differ between identical runs";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int a = 1; a < argc; ++a) {
        const std::string arg = argv[a];
        if (arg == "--criterion" && a + 1 < argc) {
            only = std::atoi(argv[++a]);
        } else if (arg == "--help" || arg == "-h") {
            std::printf("usage: cbal_acceptance [--criterion N]\n");
            return 0;
        } else {
            std::fprintf(stderr, "unknown argument '%s'\n", arg.c_str());
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "formula conformance", check_formulas},
        {2, "threshold and prior-width identities", check_identities},
        {3, "deviation-bound Monte Carlo", check_deviation_mc},
        {4, "elimination safety", check_elimination_safety},
        {5, "stop-round bound", check_stop_bound},
        {6, "regret-growth exponent", check_regret_slope},
        {7, "baseline payoff ordering", check_comparison},
        {8, "cost sweep direction", check_cost_sweep},
        {9, "prior validity", check_prior_validity},
        {10, "determinism", check_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool pass = false;
        try {
            pass = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures;
}
