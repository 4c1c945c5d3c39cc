#include <doctest.h>

#include "frarl/dfa.hpp"
#include "frarl/env.hpp"
#include "frarl/fra.hpp"
#include "helpers.hpp"

using namespace frarl;
using namespace frarl::test;

TEST_CASE("labels normalize to sorted deduplicated proposition sets") {
    CHECK(Label("ba").props() == "ab");
    CHECK(Label("aab").props() == "ab");
    CHECK(Label().str() == "{}");
    CHECK(Label("c").str() == "c");
    CHECK(Label::parse("{}") == Label());
    CHECK(Label::parse("ab") == Label("ba"));
}

TEST_CASE("reward values compare exactly and render minimally") {
    CHECK(RewardValue::from_double(0.1) == RewardValue::from_double(0.1));
    CHECK(RewardValue::from_double(0.1) != RewardValue::from_double(0.1000011));
    CHECK(RewardValue::from_int(1).str() == "1");
    CHECK(RewardValue::from_double(0.25).str() == "0.25");
    CHECK(RewardValue::from_double(-0.5).str() == "-0.5");
    CHECK(RewardValue::parse("0.25") == RewardValue::from_double(0.25));
    CHECK(RewardValue::parse("1") == kRewardOne);
    CHECK_THROWS_AS(RewardValue::parse("1x"), std::invalid_argument);
}

TEST_CASE("sequence task automaton pays once at completion") {
    GridWorld env = make_office_world(1);
    const Fra& task = env.task_fra();
    CHECK(task.num_states() == 5);

    auto rewards = task.run({lbl('a'), lbl('b'), lbl('a'), lbl('c')});
    std::vector<RewardValue> expected{kRewardZero, kRewardZero, kRewardZero, kRewardOne};
    CHECK(rewards == expected);

    // Distractors self-loop with 0, and the final state is absorbing.
    rewards = task.run({lbl('b'), lbl('a'), lbl('b'), lbl('a'), lbl('c'), lbl('c'), lbl('a')});
    expected = {kRewardZero, kRewardZero, kRewardZero, kRewardZero,
                kRewardOne,  kRewardZero, kRewardZero};
    CHECK(rewards == expected);

    CHECK_THROWS_AS(task.run({lbl('z')}), std::invalid_argument);
    CHECK(task.run_total({lbl('z'), lbl('a')}) ==
          std::vector<RewardValue>{kRewardZero, kRewardZero});
}

TEST_CASE("cyclic task automaton pays on every cycle") {
    GridWorld env = make_office_world(2);
    const Fra& task = env.task_fra();
    CHECK(task.num_states() == 3);
    auto rewards = task.run({lbl('b'), lbl('c'), lbl('a'), lbl('b'), lbl('c'), lbl('a')});
    std::vector<RewardValue> expected{kRewardZero, kRewardZero, kRewardOne,
                                      kRewardZero, kRewardZero, kRewardOne};
    CHECK(rewards == expected);
}

TEST_CASE("step_total self-loops with reward 0 on unknown labels") {
    Fra a = make_sequence_fra(letters("ab"), letters("ab"), false);
    auto [w, r] = a.step_total(1, Label("q"));
    CHECK(w == 1);
    CHECK(r == kRewardZero);
}

TEST_CASE("mealy to dfa adds exactly one sink state") {
    GridWorld env = make_office_world(1);
    Dfa d = mealy_to_dfa(env.task_fra());
    CHECK(d.num_states() == env.task_fra().num_states() + 1);

    Word good{{lbl('a'), kRewardZero},
              {lbl('b'), kRewardZero},
              {lbl('a'), kRewardZero},
              {lbl('c'), kRewardOne}};
    CHECK(d.accepts(good));
    CHECK(d.accepts(Word{}));
    CHECK(d.accepts(Word{good.begin(), good.begin() + 2}));

    Word bad = good;
    bad[3].reward = kRewardZero;  // completion must pay 1
    CHECK_FALSE(d.accepts(bad));
    CHECK_FALSE(d.accepts(Word{{lbl('a'), kRewardOne}}));
    // The sink is absorbing: no continuation of a rejected word is accepted.
    bad.push_back({lbl('c'), kRewardOne});
    CHECK_FALSE(d.accepts(bad));
}

TEST_CASE("dfa accepts a word iff the automaton reproduces its rewards") {
    std::mt19937_64 rng(20240811);
    auto labels = letters("ab");
    std::vector<RewardValue> rewards{kRewardZero, kRewardOne};
    std::vector<Symbol> sigma;
    for (const auto& l : labels)
        for (const auto& r : rewards) sigma.push_back({l, r});

    for (int trial = 0; trial < 12; ++trial) {
        Fra a = random_fra(rng, 4, labels, rewards);
        Dfa d = mealy_to_dfa(a);
        for (int len = 0; len <= 5; ++len) {
            enumerate_words(sigma, len, [&](const Word& w) {
                Trace t = to_trace(w);
                bool expect = a.run(t.labels) == t.rewards;
                CHECK(d.accepts(w) == expect);
            });
        }
    }
}

TEST_CASE("dfa_distinguish finds a shortest separating word") {
    Fra target = make_sequence_fra(letters("ab"), letters("ab"), false);
    Fra same = make_sequence_fra(letters("ab"), letters("ab"), false);
    CHECK(!dfa_distinguish(mealy_to_dfa(target), mealy_to_dfa(same)));

    Fra other = make_sequence_fra(letters("ab"), letters("ba"), false);
    auto w = dfa_distinguish(mealy_to_dfa(target), mealy_to_dfa(other));
    REQUIRE(w.has_value());
    Dfa dt = mealy_to_dfa(target), do_ = mealy_to_dfa(other);
    CHECK(dt.accepts(*w) != do_.accepts(*w));
    // Single-step behaviors coincide (both pay 0 on 'a' and 'b'); the first
    // disagreement is on completion words like (a,0)(b,1).
    CHECK(w->size() == 2);
}

TEST_CASE("dfa_distinguish treats missing symbols as rejecting") {
    // Hypothesis over a smaller alphabet: words using the unseen symbol are
    // rejected by it, so a difference is still found.
    Fra small = Fra::constant_zero({lbl('a')});
    Fra target = make_sequence_fra(letters("ab"), {lbl('b')}, false);
    auto w = dfa_distinguish(mealy_to_dfa(small), mealy_to_dfa(target));
    REQUIRE(w.has_value());
    CHECK(*w == Word{{lbl('b'), kRewardOne}});
}

TEST_CASE("query automaton rewards each advance along the trace") {
    Trace zeta = make_trace("aa", {0, 1});
    Fra q = build_query_fra(zeta);
    CHECK(q.num_states() == 3);
    // Advancing pays 1 regardless of the trace's own rewards.
    CHECK(q.run({lbl('a'), lbl('a')}) == std::vector<RewardValue>{kRewardOne, kRewardOne});
    // The final state is absorbing with reward 0.
    CHECK(q.run({lbl('a'), lbl('a'), lbl('a')}) ==
          std::vector<RewardValue>{kRewardOne, kRewardOne, kRewardZero});

    Trace zeta2 = make_trace("ab", {0, 1});
    Fra q2 = build_query_fra(zeta2);
    // Off-trace labels self-loop with 0 and do not reset progress.
    CHECK(q2.run({lbl('b'), lbl('a'), lbl('a'), lbl('b')}) ==
          std::vector<RewardValue>{kRewardZero, kRewardOne, kRewardZero, kRewardOne});
}

TEST_CASE("prefix tree automaton replays traces exactly") {
    std::vector<Trace> traces{make_trace("ab", {0, 1}), make_trace("ac", {0, 0})};
    Fra a = build_prefix_tree_fra(traces);
    CHECK(a.run({lbl('a'), lbl('b')}) == std::vector<RewardValue>{kRewardZero, kRewardOne});
    CHECK(a.run({lbl('a'), lbl('c')}) == std::vector<RewardValue>{kRewardZero, kRewardZero});
    // Unseen continuations self-loop with 0.
    CHECK(a.run({lbl('b'), lbl('a'), lbl('b')}) ==
          std::vector<RewardValue>{kRewardZero, kRewardZero, kRewardOne});
    // Shared prefixes share nodes: root + a + ab + ac.
    CHECK(a.num_states() == 4);
}

TEST_CASE("prefix tree rejects traces that disagree on a shared prefix") {
    std::vector<Trace> traces{make_trace("a", {0}), make_trace("a", {1})};
    CHECK_THROWS_WITH_AS(build_prefix_tree_fra(traces),
                         doctest::Contains("inconsistent traces"), std::invalid_argument);
}

TEST_CASE("reward quantization grid and nearest-point rounding") {
    auto grid = quantize_rewards(0.0, 1.0, 0.25);
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == kRewardZero);
    CHECK(grid[1] == RewardValue::from_double(0.25));
    CHECK(grid.back() == kRewardOne);

    CHECK(nearest_reward(grid, 0.6) == RewardValue::from_double(0.5));
    CHECK(nearest_reward(grid, 0.95) == kRewardOne);
    // Exact midpoint ties round toward the smaller grid value.
    CHECK(nearest_reward(grid, 0.125) == kRewardZero);
    // Quantization error is at most eps/2.
    for (double r : {0.01, 0.33, 0.49, 0.77, 0.99})
        CHECK(std::abs(nearest_reward(grid, r).value() - r) <= 0.125 + 1e-12);

    CHECK_THROWS_AS(quantize_rewards(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(quantize_rewards(1.0, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("text serialization round-trips byte for byte") {
    GridWorld env = make_office_world(1);
    std::string text = fra_to_text(env.task_fra());
    Fra back = fra_from_text(text);
    CHECK(fra_to_text(back) == text);
    CHECK(back.num_states() == env.task_fra().num_states());
    CHECK(back.run({lbl('a'), lbl('b'), lbl('a'), lbl('c')}) ==
          env.task_fra().run({lbl('a'), lbl('b'), lbl('a'), lbl('c')}));
    CHECK(!dfa_distinguish(mealy_to_dfa(back), mealy_to_dfa(env.task_fra())));
}

TEST_CASE("text parser reports the offending line") {
    CHECK_THROWS_AS(fra_from_text("nope\n"), ParseError);
    try {
        fra_from_text("fra\nstates 2\ninitial 0\nlabels a\nrewards 0 1\ntrans 0 a 5 1\nend\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
    }
    CHECK_THROWS_AS(fra_from_text("fra\nstates 1\ninitial 0\nlabels a\nrewards 0\n"), ParseError);
}

TEST_CASE("dot export lists every labeled transition") {
    Fra a = make_sequence_fra(letters("a"), letters("a"), false);
    std::string dot = fra_to_dot(a);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("w0 -> w1 [label=\"a/1\"]") != std::string::npos);
    CHECK(dot.find("__start -> w0") != std::string::npos);
    // One edge per (state, label) pair plus the start marker.
    std::size_t edges = 0, pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        ++edges;
        pos += 2;
    }
    CHECK(edges == 1 + a.num_states() * a.input_alphabet().size());
}
