#include <benchmark/benchmark.h>

#include "cbal/harness.hpp"

namespace {

void BM_partition_locate(benchmark::State& state) {
    const auto part = cbal::Partition::build(2, 0.01);
    cbal::Rng rng(1);
    cbal::Point x{0.0, 0.0};
    for (auto _ : state) {
        x[0] = rng.uniform01();
        x[1] = rng.uniform01();
        benchmark::DoNotOptimize(part.locate(x));
    }
}
BENCHMARK(BM_partition_locate);

void BM_policy_slot(benchmark::State& state) {
    cbal::AlgoParams params;
    params.context_dim = 2;
    params.arm_dim = 2;
    params.finalize();
    cbal::Policy policy(params);
    policy.begin_epoch(static_cast<int>(state.range(0)));
    const cbal::Landscape land(cbal::LandscapeFamily::peak, 0.5, 2, 2);
    cbal::Rng rng(1);
    for (auto _ : state) {
        const auto x = cbal::context_arrival(rng, 2);
        const auto d = policy.step(x, rng);
        if (d.query) {
            const double mu = land.mean_reward(x, d.arm);
            policy.record_reward(d.context_cluster, d.arm_cluster,
                                 cbal::sample_reward(mu, rng));
            if (policy.round_complete(d.context_cluster))
                policy.end_of_round(d.context_cluster);
        }
        benchmark::DoNotOptimize(d.arm_cluster);
    }
}
BENCHMARK(BM_policy_slot)->Arg(10)->Arg(14);

void BM_replication(benchmark::State& state) {
    cbal::RunConfig cfg = cbal::default_config();
    cfg.horizon = static_cast<std::uint64_t>(state.range(0));
    cfg.replications = 1;
    cfg.finalize();
    for (auto _ : state) {
        const auto summary = cbal::run(cfg);
        benchmark::DoNotOptimize(summary.payoff.mean);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_replication)->Arg(1 << 12)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
