// Command-line front end for the simulation harness.
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbal/harness.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> reps;
    std::optional<std::uint64_t> horizon;
    std::optional<std::string> out_dir;
    bool trace = false;
    std::optional<std::string> policy;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "flat key-value config file");
    cmd->add_option("--seed", flags.seed, "base seed; replication r uses seed + r");
    cmd->add_option("--reps", flags.reps, "number of replications");
    cmd->add_option("--horizon", flags.horizon, "number of time slots");
    cmd->add_option("--out", flags.out_dir, "output directory for csv/summary files");
    cmd->add_flag("--trace", flags.trace, "record the per-slot trace.csv");
    cmd->add_option("--policy", flags.policy,
                    "cbal | cbal_no_prior | always_query | oracle");
}

cbal::RunConfig make_config(const CommonFlags& flags) {
    cbal::RunConfig cfg =
        flags.config_path.empty() ? cbal::default_config() : cbal::load_config(flags.config_path);
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.reps) cfg.replications = *flags.reps;
    if (flags.horizon) cfg.horizon = *flags.horizon;
    if (flags.out_dir) cfg.out_dir = *flags.out_dir;
    if (flags.trace) cfg.record_trace = true;
    if (flags.policy) cfg.policy = cbal::parse_policy_kind(*flags.policy);
    cfg.finalize();
    return cfg;
}

int cmd_run(const CommonFlags& flags) {
    const auto summary = cbal::run(make_config(flags));
    std::cout << cbal::summary_text(summary);
    if (!summary.config.out_dir.empty())
        std::cout << "outputs written to " << summary.config.out_dir << "\n";
    return 0;
}

int cmd_compare(const CommonFlags& flags) {
    cbal::RunConfig cfg = make_config(flags);
    const auto result = cbal::compare(cfg);
    std::cout << cbal::compare_csv(result);
    if (!cfg.out_dir.empty()) {
        cbal::write_text_file(cfg.out_dir + "/compare.csv", cbal::compare_csv(result));
        std::cout << "compare.csv written to " << cfg.out_dir << "\n";
    }
    return 0;
}

int cmd_sweep(const CommonFlags& flags, const std::vector<double>& costs) {
    cbal::RunConfig cfg = make_config(flags);
    const auto rows = cbal::sweep_cost(cfg, costs);
    std::cout << cbal::sweep_csv(rows);
    if (!cfg.out_dir.empty()) {
        cbal::write_text_file(cfg.out_dir + "/sweep.csv", cbal::sweep_csv(rows));
        std::cout << "sweep.csv written to " << cfg.out_dir << "\n";
    }
    return 0;
}

int cmd_slope(const CommonFlags& flags, int fit_last, std::optional<int> fit_from,
              std::optional<int> fit_to) {
    cbal::RunConfig cfg = make_config(flags);
    const auto summary = cbal::run(cfg);

    const auto& cps = summary.mean_checkpoints;
    int lo = fit_from.value_or(cps.empty() ? 0 : cps.back().epoch - fit_last + 1);
    int hi = fit_to.value_or(cps.empty() ? 0 : cps.back().epoch);

    std::vector<std::pair<double, double>> tail;
    std::cout << "epoch,T,mean_regret,regret_over_T\n";
    for (const auto& cp : cps) {
        std::cout << cp.epoch << ',' << cp.t << ',' << cbal::format_double(cp.pseudo_regret)
                  << ',' << cbal::format_double(cp.pseudo_regret / static_cast<double>(cp.t))
                  << "\n";
        if (cp.epoch >= lo && cp.epoch <= hi)
            tail.emplace_back(static_cast<double>(cp.t), cp.pseudo_regret);
    }
    const double slope = cbal::fit_regret_exponent(tail);
    std::cout << "fit_epochs=" << lo << ".." << hi << "\n";
    std::cout << "slope=" << cbal::format_double(slope) << "\n";

    bool decreasing = true;
    for (std::size_t i = cps.size() >= 4 ? cps.size() - 4 : 0; i + 1 < cps.size(); ++i) {
        const double a = cps[i].pseudo_regret / static_cast<double>(cps[i].t);
        const double b = cps[i + 1].pseudo_regret / static_cast<double>(cps[i + 1].t);
        if (!(b < a)) decreasing = false;
    }
    std::cout << "regret_over_T_decreasing_last4=" << (decreasing ? "yes" : "no") << "\n";
    return 0;
}

int cmd_verify(const CommonFlags& flags, std::uint64_t deviation_trials, int grid_n,
               int min_epoch) {
    cbal::RunConfig cfg = make_config(flags);

    const auto l1 = cbal::verify_deviation_bound(0.5, 64, 256, 0.5, deviation_trials, cfg.seed);
    std::cout << "deviation_trials=" << l1.trials << "\n";
    std::cout << "deviation_threshold=" << cbal::format_double(l1.threshold) << "\n";
    std::cout << "deviation_abnormal_rate=" << cbal::format_double(l1.rate()) << "\n";
    std::cout << "deviation_theory_bound=" << cbal::format_double(l1.theory_bound) << "\n";

    const auto l2 = cbal::verify_elimination_safety(cfg, grid_n, min_epoch);
    std::cout << "safety_cases=" << l2.cases << "\n";
    std::cout << "safety_rate=" << cbal::format_double(l2.safety_rate()) << "\n";
    std::cout << "safety_stop_events=" << l2.stop_events << "\n";
    std::cout << "safety_survivors=" << l2.survivors << "\n";
    std::cout << "safety_two_eps_rate=" << cbal::format_double(l2.two_eps_rate()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contextual bandit with costly annotation: simulation harness"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::vector<double> costs{0.1, 0.25, 0.5, 1.0};
    int fit_last = 6;
    std::optional<int> fit_from, fit_to;
    std::uint64_t deviation_trials = 1000000;
    int grid_n = 9;
    int min_epoch = 6;

    auto* run_cmd = app.add_subcommand("run", "simulate one policy");
    add_common(run_cmd, flags);

    auto* compare_cmd = app.add_subcommand("compare", "payoff comparison of the three policies");
    add_common(compare_cmd, flags);

    auto* sweep_cmd = app.add_subcommand("sweep-cost", "payoff vs cost scale");
    add_common(sweep_cmd, flags);
    sweep_cmd->add_option("--costs", costs, "cost-scale values")->expected(2, 16);

    auto* slope_cmd = app.add_subcommand("slope-check", "regret-growth exponent fit");
    add_common(slope_cmd, flags);
    slope_cmd->add_option("--fit-last", fit_last, "fit the last N epoch checkpoints");
    slope_cmd->add_option("--fit-from", fit_from, "first epoch of the fit window");
    slope_cmd->add_option("--fit-to", fit_to, "last epoch of the fit window");

    auto* verify_cmd = app.add_subcommand("verify", "deviation-bound and elimination-safety suites");
    add_common(verify_cmd, flags);
    verify_cmd->add_option("--deviation-trials", deviation_trials, "Monte Carlo trials");
    verify_cmd->add_option("--grid-n", grid_n, "lattice points per axis for the cluster oracle");
    verify_cmd->add_option("--min-epoch", min_epoch, "first epoch graded for survival");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(flags);
        if (compare_cmd->parsed()) return cmd_compare(flags);
        if (sweep_cmd->parsed()) return cmd_sweep(flags, costs);
        if (slope_cmd->parsed()) return cmd_slope(flags, fit_last, fit_from, fit_to);
        if (verify_cmd->parsed()) return cmd_verify(flags, deviation_trials, grid_n, min_epoch);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
