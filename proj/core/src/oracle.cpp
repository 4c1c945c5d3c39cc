#include "frarl/oracle.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

namespace frarl {

ExplicitMdp product_mdp(const GridWorld& env, const Fra& a) {
    const int cells = env.num_states();
    const int num_w = a.num_states();
    ExplicitMdp m;
    m.num_states = cells * num_w;
    m.num_actions = env.num_actions();
    m.initial = env.initial_cell() * num_w + a.initial();
    m.arcs.assign(m.num_states, std::vector<std::vector<ExplicitMdp::Arc>>(m.num_actions));
    for (int x = 0; x < cells; ++x) {
        for (int act = 0; act < m.num_actions; ++act) {
            auto env_arcs = env.transitions(x, act);
            for (int w = 0; w < num_w; ++w) {
                auto& row = m.arcs[x * num_w + w][act];
                for (const auto& [x2, p] : env_arcs) {
                    auto [w2, r] = a.step_total(w, env.cell_label(x2));
                    row.push_back({x2 * num_w + w2, p, r.value()});
                }
            }
        }
    }
    return m;
}

ValueIterationResult value_iteration(const ExplicitMdp& m, double gamma, double tol) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must be in (0,1)");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    ValueIterationResult res;
    res.values.assign(m.num_states, 0.0);
    std::vector<double> next(m.num_states, 0.0);
    for (;;) {
        double residual = 0.0;
        for (int s = 0; s < m.num_states; ++s) {
            double best = -std::numeric_limits<double>::infinity();
            for (int act = 0; act < m.num_actions; ++act) {
                double v = 0.0;
                for (const auto& arc : m.arcs[s][act])
                    v += arc.prob * (arc.reward + gamma * res.values[arc.next]);
                best = std::max(best, v);
            }
            next[s] = best;
            residual = std::max(residual, std::abs(best - res.values[s]));
        }
        res.values.swap(next);
        ++res.sweeps;
        if (residual < tol) break;
    }
    res.policy.assign(m.num_states, 0);
    for (int s = 0; s < m.num_states; ++s) {
        double best = -std::numeric_limits<double>::infinity();
        for (int act = 0; act < m.num_actions; ++act) {
            double v = 0.0;
            for (const auto& arc : m.arcs[s][act])
                v += arc.prob * (arc.reward + gamma * res.values[arc.next]);
            if (v > best + 1e-12) {
                best = v;
                res.policy[s] = act;
            }
        }
    }
    return res;
}

double finite_horizon_value(const ExplicitMdp& m, int horizon) {
    std::vector<double> value(m.num_states, 0.0), next(m.num_states, 0.0);
    for (int t = 0; t < horizon; ++t) {
        for (int s = 0; s < m.num_states; ++s) {
            double best = -std::numeric_limits<double>::infinity();
            for (int act = 0; act < m.num_actions; ++act) {
                double v = 0.0;
                for (const auto& arc : m.arcs[s][act]) v += arc.prob * (arc.reward + value[arc.next]);
                best = std::max(best, v);
            }
            next[s] = best;
        }
        value.swap(next);
    }
    return value[m.initial];
}

double policy_value(const ExplicitMdp& m, const std::vector<int>& policy, double gamma,
                    double tol) {
    std::vector<double> value(m.num_states, 0.0);
    for (;;) {
        double residual = 0.0;
        for (int s = 0; s < m.num_states; ++s) {
            double v = 0.0;
            for (const auto& arc : m.arcs[s][policy[s]])
                v += arc.prob * (arc.reward + gamma * value[arc.next]);
            residual = std::max(residual, std::abs(v - value[s]));
            value[s] = v;
        }
        if (residual < tol) break;
    }
    return value[m.initial];
}

std::vector<Trace> enumerate_attainable_traces(const GridWorld& env, int max_len,
                                               std::size_t limit) {
    const Fra& task = env.task_fra();
    // Label sequence determines the rewards, so track the set of cells
    // reachable under each label sequence.
    std::map<std::vector<Label>, std::vector<bool>> frontier;
    {
        std::vector<bool> cells(env.num_states(), false);
        cells[env.initial_cell()] = true;
        frontier[{}] = std::move(cells);
    }
    std::vector<Trace> out;
    out.push_back({});
    for (int len = 1; len <= max_len; ++len) {
        std::map<std::vector<Label>, std::vector<bool>> next;
        for (const auto& [labels, cells] : frontier) {
            for (int x = 0; x < env.num_states(); ++x) {
                if (!cells[x]) continue;
                for (int act = 0; act < env.num_actions(); ++act) {
                    for (const auto& [x2, p] : env.transitions(x, act)) {
                        if (p <= 0.0) continue;
                        auto ext = labels;
                        ext.push_back(env.cell_label(x2));
                        auto [it, inserted] =
                            next.try_emplace(std::move(ext), std::vector<bool>());
                        if (inserted) {
                            it->second.assign(env.num_states(), false);
                            if (next.size() + out.size() > limit)
                                throw std::runtime_error(
                                    "enumerate_attainable_traces: limit exceeded");
                        }
                        it->second[x2] = true;
                    }
                }
            }
        }
        for (const auto& [labels, cells] : next) {
            Trace t;
            t.labels = labels;
            t.rewards = task.run_total(labels);
            out.push_back(std::move(t));
        }
        frontier.swap(next);
    }
    return out;
}

long min_episode_length(int mdp_states, int fra_states) {
    return (1L << (mdp_states + 1)) * (fra_states + 1) - 1;
}

ExactTeacher::ExactTeacher(const Fra& target) : target_dfa_(mealy_to_dfa(target)) {}

bool ExactTeacher::membership(const Word& word) { return target_dfa_.accepts(word); }

std::optional<Word> ExactTeacher::counterexample(const Fra& hypothesis) {
    return dfa_distinguish(mealy_to_dfa(hypothesis), target_dfa_);
}

}  // namespace frarl
