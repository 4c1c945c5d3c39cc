#include "frarl/qlearn.hpp"

#include <map>
#include <sstream>

namespace frarl {

void Hyperparams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0,1]");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must be in (0,1)");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must be in [0,1]");
    if (eplength <= 0) throw std::invalid_argument("eplength must be positive");
}

std::string QTable::dump_tsv() const {
    std::map<std::uint64_t, double> sorted(values_.begin(), values_.end());
    std::ostringstream os;
    os << "x\tw\ta\tvalue\n";
    for (const auto& [k, v] : sorted)
        os << (k >> 24) << "\t" << ((k >> 8) & 0xffff) << "\t" << (k & 0xff) << "\t" << v << "\n";
    return os.str();
}

int epsilon_greedy_action(const QTable& q, int x, int w, int num_actions, double eps, Rng& rng) {
    if (num_actions <= 0) throw std::invalid_argument("empty action set");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> uniform(0, num_actions - 1);
    if (coin(rng) < eps) return uniform(rng);
    double best = q.get(x, w, 0);
    std::vector<int> argmax{0};
    for (int a = 1; a < num_actions; ++a) {
        double v = q.get(x, w, a);
        if (v > best) {
            best = v;
            argmax.assign(1, a);
        } else if (v == best) {
            argmax.push_back(a);
        }
    }
    if (argmax.size() == 1) return argmax.front();
    std::uniform_int_distribution<std::size_t> pick(0, argmax.size() - 1);
    return argmax[pick(rng)];
}

void q_update(QTable& q, int x, int w, int a, double r, int x2, int w2, int num_actions,
              double alpha, double gamma) {
    double target = r + gamma * q.max_over_actions(x2, w2, num_actions);
    q.set(x, w, a, (1.0 - alpha) * q.get(x, w, a) + alpha * target);
}

EngineStep engine_step(QueryKind kind, const Fra& a, QTable& q, int x, int w, Environment& env,
                       const Hyperparams& hp, Rng& rng) {
    const int num_actions = env.num_actions();
    int action = epsilon_greedy_action(q, x, w, num_actions, hp.epsilon, rng);
    StepOutcome out = env.step(action, rng);
    auto [w2, automaton_reward] = a.step_total(w, out.label);

    double r = kind == QueryKind::kMembership ? automaton_reward.value() : out.reward.value();
    q_update(q, x, w, action, r, out.next_state, w2, num_actions, hp.alpha, hp.gamma);

    // Counterfactual updates for every other automaton state, rewards from
    // the automaton in both query modes.
    for (int wh = 0; wh < a.num_states(); ++wh) {
        if (wh == w) continue;
        auto [wh2, rh] = a.step_total(wh, out.label);
        q_update(q, x, wh, action, rh.value(), out.next_state, wh2, num_actions, hp.alpha,
                 hp.gamma);
    }
    return {out.next_state, w2, out.label, out.reward};
}

Trace run_episode(QueryKind kind, const Fra& a, QTable& q, Environment& env,
                  const Hyperparams& hp, Rng& rng, const StepCallback& on_step) {
    int x = env.reset();
    int w = a.initial();
    Trace trace;
    for (int t = 0; t < hp.eplength; ++t) {
        EngineStep s = engine_step(kind, a, q, x, w, env, hp, rng);
        trace.push_back(s.label, s.env_reward);
        if (on_step) on_step(s);
        x = s.x;
        w = s.w;
    }
    return trace;
}

}  // namespace frarl
