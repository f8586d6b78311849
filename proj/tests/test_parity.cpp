#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treegames/parity.hpp"
#include "treegames/random.hpp"

using namespace tg;

namespace {

// The four-vertex arena as a plain graph (ranks irrelevant here).
ParityGame fig2_graph() {
    ParityGame g;
    g.name = "fig2_graph";
    g.verts = {
        {"0", 1, 0, {2, 3}},
        {"1", 1, 0, {2, 3}},
        {"a", 0, 0, {0, 1}},
        {"b", 0, 0, {0, 1}},
    };
    g.initial = 0;
    return g;
}

ParityGame self_loop(int rank) {
    ParityGame g;
    g.verts = {{"w", 0, rank, {0, 0}}};
    g.initial = 0;
    return g;
}

} // namespace

TEST_CASE("beta follows ordered successors") {
    ParityGame g = fig2_graph();
    CHECK(beta(g, 0, "") == 0);
    CHECK(beta(g, 0, "0") == 2); // vertex a is the smaller successor of 0
    CHECK(beta(self_loop(0), 0, "0110") == 0);
}

TEST_CASE("beta_path lists the whole path") {
    ParityGame g = fig2_graph();
    CHECK(beta_path(g, 0, "") == std::vector<int>{0});
    CHECK(beta_path(g, 0, "00") == std::vector<int>{0, 2, 0});
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        std::string u;
        for (int k = rng.below(6); k > 0; --k) u += static_cast<char>('0' + rng.below(2));
        CHECK(beta_path(g, rng.below(g.size()), u).size() == u.size() + 1);
    }
}

TEST_CASE("solve on one-vertex games") {
    CHECK(solve(self_loop(0)).winner_of[0] == 0);
    CHECK(solve(self_loop(1)).winner_of[0] == 1);
    CHECK(solve_naive(self_loop(0))[0] == 0);
    CHECK(solve_naive(self_loop(1))[0] == 1);
}

TEST_CASE("two-vertex mutual game agrees with the enumeration oracle") {
    ParityGame g;
    g.verts = {
        {"v", 0, 1, {1, 0}}, // owner 0, rank 1, successors w and itself
        {"w", 1, 0, {0, 1}}, // owner 1, rank 0, successors v and itself
    };
    g.initial = 0;
    Solution sol = solve(g);
    std::vector<int> oracle = solve_naive(g);
    CHECK(sol.winner_of == oracle);
}

TEST_CASE("solver matches the oracle on random games") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        ParityGame g = random_parity_game(rng, 8, 4);
        Solution sol = solve(g);
        std::vector<int> oracle = solve_naive(g);
        for (int v = 0; v < g.size(); ++v) {
            CHECK(sol.winner_of[v] == oracle[v]);
            // Exactly one winner per vertex by construction of winner_of.
            CHECK((sol.winner_of[v] == 0 || sol.winner_of[v] == 1));
        }
    }
}

TEST_CASE("play_out classifies the cycle") {
    PlayOut po = play_out(self_loop(0), {0}, {0}, 0);
    CHECK(po.cycle_ranks == std::vector<int>{0});
    CHECK(po.winner == 0);
    PlayOut p1 = play_out(self_loop(1), {0}, {0}, 0);
    CHECK(p1.cycle_ranks == std::vector<int>{1});
    CHECK(p1.winner == 1);
    CHECK_THROWS_AS(play_out(self_loop(0), {-1}, {-1}, 0), Error);
}

TEST_CASE("solver strategies win their own plays") {
    Rng rng(23);
    for (int i = 0; i < 150; ++i) {
        ParityGame g = random_parity_game(rng, 6, 3);
        Solution sol = solve(g);
        std::vector<int> s0(g.size(), 0), s1(g.size(), 0);
        for (int v = 0; v < g.size(); ++v) {
            if (sol.strategy0[v]) s0[v] = *sol.strategy0[v];
            if (sol.strategy1[v]) s1[v] = *sol.strategy1[v];
        }
        for (int v = 0; v < g.size(); ++v) {
            PlayOut po = play_out(g, s0, s1, v);
            CHECK(po.winner == sol.winner_of[v]);
        }
    }
}

TEST_CASE("strategies beat every positional counter-strategy on small games") {
    Rng rng(29);
    for (int i = 0; i < 60; ++i) {
        ParityGame g = random_parity_game(rng, 5, 4);
        Solution sol = solve(g);
        for (int player = 0; player < 2; ++player) {
            std::vector<int> mine(g.size(), -1);
            const auto& strat = player == 0 ? sol.strategy0 : sol.strategy1;
            for (int v = 0; v < g.size(); ++v)
                if (strat[v]) mine[v] = *strat[v];
            std::vector<int> opp;
            for (int v = 0; v < g.size(); ++v)
                if (g.verts[v].owner != player) opp.push_back(v);
            for (std::uint64_t bits = 0; bits < (1ull << opp.size()); ++bits) {
                std::vector<int> counter(g.size(), -1);
                for (size_t k = 0; k < opp.size(); ++k) counter[opp[k]] = (bits >> k) & 1;
                for (int v = 0; v < g.size(); ++v) {
                    if (sol.winner_of[v] != player) continue;
                    PlayOut po = play_out(g, player == 0 ? mine : counter,
                                          player == 0 ? counter : mine, v);
                    CHECK(po.winner == player);
                }
            }
        }
    }
}

TEST_CASE("lim inf on an eventually cyclic play is the minimal cycle rank") {
    // Direct consequence of the play_out contract; pin one mixed example.
    ParityGame g;
    g.verts = {
        {"u", 0, 3, {1, 1}},
        {"v", 0, 1, {2, 2}},
        {"w", 0, 2, {1, 1}},
    };
    g.initial = 0;
    PlayOut po = play_out(g, {0, 0, 0}, {0, 0, 0}, 0);
    CHECK(po.prefix_ranks == std::vector<int>{3});
    CHECK(po.winner == 1); // cycle {v, w}: minimal rank 1
}
