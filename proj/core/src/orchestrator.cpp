#include "frarl/orchestrator.hpp"

#include <set>

namespace frarl {

Trace compress_trace(const Trace& trace) {
    Trace out;
    for (std::size_t i = 0; i < trace.size(); ++i)
        if (!trace.labels[i].empty() || !trace.rewards[i].is_zero())
            out.push_back(trace.labels[i], trace.rewards[i]);
    return out;
}

std::optional<Trace> find_counterexample(const Trace& trace, const Fra& hypothesis) {
    int w = hypothesis.initial();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        auto [next, predicted] = hypothesis.step_total(w, trace.labels[i]);
        if (predicted != trace.rewards[i]) return trace.prefix(i + 1);
        w = next;
    }
    return std::nullopt;
}

ActiveTrainer::ActiveTrainer(Environment& env, TrainerConfig config, std::uint64_t seed,
                             MetricsSink sink)
    : env_(env),
      cfg_(std::move(config)),
      rng_(seed),
      sink_(std::move(sink)),
      hypothesis_(Fra::constant_zero()) {
    cfg_.hp.validate();
}

Trace ActiveTrainer::observe(const Trace& raw) const {
    return cfg_.compress_empty ? compress_trace(raw) : raw;
}

std::optional<Trace> ActiveTrainer::bootstrap() {
    phase_ = Phase::kBootstrap;
    for (int ep = 0; ep < cfg_.bootstrap_episode_cap; ++ep) {
        if (!budget_left()) return std::nullopt;
        Trace raw = run_episode(QueryKind::kEquivalence, hypothesis_, q_h_, env_, cfg_.hp, rng_,
                                [&](const EngineStep& s) {
                                    ++steps_;
                                    if (sink_)
                                        sink_({steps_, s.env_reward.value(), phase_,
                                               hypothesis_.num_states()});
                                });
        Trace tr = observe(raw);
        store_.add_sample(tr);
        if (auto ce = find_counterexample(tr, hypothesis_)) return ce;
    }
    throw std::runtime_error(
        "bootstrap: no rewarded trace found within the episode cap; "
        "consider a larger eplength or episode cap");
}

bool ActiveTrainer::mquery(const std::vector<Word>& chi) {
    for (const auto& zeta_word : chi) {
        if (table_.cell(zeta_word) != Cell::kUnknown) continue;
        Trace zeta = to_trace(zeta_word);
        if (auto cached = check_sample(zeta, store_)) {
            table_.set_cell(zeta_word, *cached);
            ++result_.membership_queries_cached;
            continue;
        }
        ++result_.membership_queries_rl;
        Fra query_fra = build_query_fra(zeta);
        QTable& q_m = q_m_store_[zeta_word];
        int counter = 0;
        bool inconsistent = false;
        while (budget_left() && counter < cfg_.budget_c && !inconsistent &&
               !check_sample(zeta, store_)) {
            Trace raw = run_episode(QueryKind::kMembership, query_fra, q_m, env_, cfg_.hp, rng_,
                                    [&](const EngineStep& s) {
                                        ++steps_;
                                        if (sink_)
                                            sink_({steps_, s.env_reward.value(), phase_,
                                                   hypothesis_.num_states()});
                                    });
            Trace tr = observe(raw);
            if (traces_inconsistent(zeta, tr)) {
                inconsistent = true;
            } else {
                store_.add_sample(tr);
                if (check_nsample(tr, store_, table_)) return true;
                ++counter;
            }
        }
        // On loop exit the cache has the final say; undecided queries are
        // answered 0 and parked in nsample for later flipping.
        if (auto answer = check_sample(zeta, store_)) {
            table_.set_cell(zeta_word, *answer);
        } else {
            table_.set_cell(zeta_word, false);
            store_.add_nsample(zeta);
        }
    }
    return false;
}

void ActiveTrainer::repair_table() {
    phase_ = Phase::kMembership;
    while (budget_left()) {
        std::vector<Word> chi = table_.pending_words();
        if (chi.empty()) {
            if (table_.is_closed() && table_.is_consistent()) return;
            chi = table_.check_obs_table();
        }
        mquery(chi);  // a flip just re-enters the loop, regenerating chi
    }
}

std::optional<Trace> ActiveTrainer::equery() {
    phase_ = Phase::kEquivalence;
    while (budget_left()) {
        Trace raw = run_episode(QueryKind::kEquivalence, hypothesis_, q_h_, env_, cfg_.hp, rng_,
                                [&](const EngineStep& s) {
                                    ++steps_;
                                    if (sink_)
                                        sink_({steps_, s.env_reward.value(), phase_,
                                               hypothesis_.num_states()});
                                });
        Trace tr = observe(raw);
        store_.add_sample(tr);
        check_nsample(tr, store_, table_);
        if (auto ce = find_counterexample(tr, hypothesis_)) return ce;
    }
    return std::nullopt;
}

TrainResult ActiveTrainer::run() {
    if (cfg_.total_steps <= 0) {
        result_.hypothesis = hypothesis_;
        result_.q_h = q_h_;
        return result_;
    }

    std::set<Label> labels;
    std::set<RewardValue> rewards{kRewardZero, kRewardOne};

    auto ce = bootstrap();
    while (ce && budget_left()) {
        ++result_.counterexamples;
        // Alphabet: cross product of all labels and rewards seen so far.
        for (std::size_t i = 0; i < ce->size(); ++i) {
            labels.insert(ce->labels[i]);
            rewards.insert(ce->rewards[i]);
        }
        std::vector<Symbol> alphabet;
        for (const auto& l : labels)
            for (const auto& r : rewards) alphabet.push_back({l, r});
        table_.extend_alphabet(alphabet);
        table_.add_counterexample(to_word(*ce));

        repair_table();
        if (!budget_left()) break;

        hypothesis_ = table_.hypothesis();
        q_h_ = QTable();  // state spaces differ between hypotheses
        ce = equery();
    }

    result_.hypothesis = hypothesis_;
    result_.q_h = q_h_;
    result_.steps = steps_;
    return result_;
}

}  // namespace frarl
