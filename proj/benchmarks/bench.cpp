#include <benchmark/benchmark.h>

#include "frarl/env.hpp"
#include "frarl/oracle.hpp"
#include "frarl/qlearn.hpp"

namespace {

using namespace frarl;

void BM_FraRun(benchmark::State& state) {
    GridWorld env = make_office_world(1);
    const Fra& task = env.task_fra();
    std::vector<Label> labels;
    Rng rng(1);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < 200; ++i) labels.push_back(Label(std::string(1, 'a' + pick(rng))));
    for (auto _ : state) benchmark::DoNotOptimize(task.run(labels));
}
BENCHMARK(BM_FraRun);

void BM_EngineStep(benchmark::State& state) {
    GridWorld env = make_office_world(1);
    const Fra& task = env.task_fra();
    QTable q;
    Hyperparams hp;
    Rng rng(7);
    int x = env.reset();
    int w = task.initial();
    for (auto _ : state) {
        EngineStep s = engine_step(QueryKind::kEquivalence, task, q, x, w, env, hp, rng);
        x = s.x;
        w = s.w;
    }
}
BENCHMARK(BM_EngineStep);

void BM_ValueIteration(benchmark::State& state) {
    GridWorld env = make_office_world(1);
    ExplicitMdp m = product_mdp(env, env.task_fra());
    for (auto _ : state) benchmark::DoNotOptimize(value_iteration(m, 0.9, 1e-6));
}
BENCHMARK(BM_ValueIteration);

void BM_EpisodeOffice(benchmark::State& state) {
    GridWorld env = make_office_world(1);
    const Fra& task = env.task_fra();
    QTable q;
    Hyperparams hp;
    hp.eplength = 200;
    Rng rng(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_episode(QueryKind::kEquivalence, task, q, env, hp, rng));
}
BENCHMARK(BM_EpisodeOffice);

}  // namespace

BENCHMARK_MAIN();
