#include "treegames/parity.hpp"

#include <algorithm>
#include <deque>

namespace tg {

void ParityGame::validate() const {
    if (verts.empty()) throw Error("parity game: no vertices");
    if (initial < 0 || initial >= size()) throw Error("parity game: bad initial vertex");
    for (const Vertex& v : verts) {
        if (v.owner != 0 && v.owner != 1) throw Error("parity game: owner must be 0 or 1");
        if (v.rank < 0) throw Error("parity game: negative rank");
        for (int d = 0; d < 2; ++d)
            if (v.succ[d] < 0 || v.succ[d] >= size()) throw Error("parity game: dangling successor");
    }
}

int beta(const ParityGame& g, int v, const std::string& u) {
    for (char c : u) {
        if (c != '0' && c != '1') throw Error("beta: bad word letter");
        v = g.verts[v].succ[c - '0'];
    }
    return v;
}

std::vector<int> beta_path(const ParityGame& g, int v, const std::string& u) {
    std::vector<int> path{v};
    for (char c : u) {
        if (c != '0' && c != '1') throw Error("beta_path: bad word letter");
        v = g.verts[v].succ[c - '0'];
        path.push_back(v);
    }
    return path;
}

namespace {

// Recursive Zielonka on the sub-arena `alive`. Sub-arenas are obtained by
// removing attractors, so they stay total. Writes winners and positional
// strategies for the vertices it settles.
struct Zielonka {
    const ParityGame& g;
    std::vector<std::vector<int>> preds;
    Solution& out;

    Zielonka(const ParityGame& game, Solution& sol) : g(game), out(sol) {
        preds.resize(g.size());
        for (int v = 0; v < g.size(); ++v)
            for (int d = 0; d < 2; ++d) preds[g.verts[v].succ[d]].push_back(v);
    }

    // Attractor of `target` for `player` inside `alive`; records the
    // attractor strategy for player-owned vertices pulled in.
    std::vector<bool> attractor(int player, const std::vector<bool>& alive,
                                const std::vector<bool>& target,
                                std::vector<std::optional<int>>& strat) const {
        std::vector<bool> attr(g.size(), false);
        std::vector<int> out_deg(g.size(), 0);
        std::deque<int> work;
        for (int v = 0; v < g.size(); ++v) {
            if (!alive[v]) continue;
            for (int d = 0; d < 2; ++d)
                if (alive[g.verts[v].succ[d]]) out_deg[v]++;
            if (target[v]) {
                attr[v] = true;
                work.push_back(v);
            }
        }
        while (!work.empty()) {
            int v = work.front();
            work.pop_front();
            for (int p : preds[v]) {
                if (!alive[p] || attr[p]) continue;
                if (g.verts[p].owner == player) {
                    attr[p] = true;
                    for (int d = 0; d < 2; ++d)
                        if (g.verts[p].succ[d] == v) strat[p] = d;
                    work.push_back(p);
                } else {
                    // Count each edge into the attractor once.
                    for (int d = 0; d < 2; ++d)
                        if (g.verts[p].succ[d] == v) out_deg[p]--;
                    if (out_deg[p] <= 0) {
                        attr[p] = true;
                        work.push_back(p);
                    }
                }
            }
        }
        return attr;
    }

    void run(const std::vector<bool>& alive) {
        int min_rank = -1;
        for (int v = 0; v < g.size(); ++v)
            if (alive[v] && (min_rank < 0 || g.verts[v].rank < min_rank)) min_rank = g.verts[v].rank;
        if (min_rank < 0) return;

        int p = min_rank & 1;
        std::vector<bool> target(g.size(), false);
        for (int v = 0; v < g.size(); ++v)
            if (alive[v] && g.verts[v].rank == min_rank) target[v] = true;

        std::vector<std::optional<int>> attr_strat(g.size());
        std::vector<bool> A = attractor(p, alive, target, attr_strat);

        std::vector<bool> rest(g.size(), false);
        bool rest_nonempty = false;
        for (int v = 0; v < g.size(); ++v) {
            rest[v] = alive[v] && !A[v];
            rest_nonempty = rest_nonempty || rest[v];
        }
        if (rest_nonempty) run(rest);

        bool opp_in_rest = false;
        for (int v = 0; v < g.size(); ++v)
            if (rest[v] && out.winner_of[v] == 1 - p) opp_in_rest = true;

        if (!opp_in_rest) {
            // p wins the whole sub-arena: recursive strategy on rest,
            // attractor strategy on A, any alive successor on the target.
            auto& strat = (p == 0) ? out.strategy0 : out.strategy1;
            for (int v = 0; v < g.size(); ++v) {
                if (!alive[v]) continue;
                out.winner_of[v] = p;
                if (g.verts[v].owner != p) {
                    strat[v] = std::nullopt;
                    continue;
                }
                if (rest[v]) continue;  // keep recursive choice
                if (target[v]) {
                    strat[v] = alive[g.verts[v].succ[0]] ? 0 : 1;
                } else {
                    strat[v] = attr_strat[v];
                }
            }
            auto& other = (p == 0) ? out.strategy1 : out.strategy0;
            for (int v = 0; v < g.size(); ++v)
                if (alive[v]) other[v] = std::nullopt;
            return;
        }

        std::vector<bool> opp_region(g.size(), false);
        for (int v = 0; v < g.size(); ++v)
            if (rest[v] && out.winner_of[v] == 1 - p) opp_region[v] = true;
        std::vector<std::optional<int>> pull_strat(g.size());
        std::vector<bool> B = attractor(1 - p, alive, opp_region, pull_strat);

        // 1-p keeps the recursive strategy inside opp_region and pulls
        // towards it elsewhere in B.
        auto& ostrat = (1 - p == 0) ? out.strategy0 : out.strategy1;
        for (int v = 0; v < g.size(); ++v) {
            if (!B[v] || !alive[v]) continue;
            out.winner_of[v] = 1 - p;
            if (g.verts[v].owner == 1 - p && !opp_region[v]) ostrat[v] = pull_strat[v];
            if (g.verts[v].owner == p) {
                auto& pstrat = (p == 0) ? out.strategy0 : out.strategy1;
                pstrat[v] = std::nullopt;
            }
        }

        std::vector<bool> remaining(g.size(), false);
        bool any = false;
        for (int v = 0; v < g.size(); ++v) {
            remaining[v] = alive[v] && !B[v];
            any = any || remaining[v];
        }
        if (any) run(remaining);
    }
};

} // namespace

Solution solve(const ParityGame& g) {
    g.validate();
    Solution sol;
    sol.winner_of.assign(g.size(), 0);
    sol.strategy0.assign(g.size(), std::nullopt);
    sol.strategy1.assign(g.size(), std::nullopt);
    std::vector<bool> alive(g.size(), true);
    Zielonka z(g, sol);
    z.run(alive);
    return sol;
}

namespace {

// Winner of the unique play from `from` under total positional choices.
int profile_winner(const ParityGame& g, const std::vector<int>& choice, int from) {
    std::vector<int> seen_at(g.size(), -1);
    std::vector<int> order;
    int v = from;
    while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(order.size());
        order.push_back(v);
        v = g.verts[v].succ[choice[v]];
    }
    int min_rank = g.verts[v].rank;
    for (size_t i = seen_at[v]; i < order.size(); ++i)
        min_rank = std::min(min_rank, g.verts[order[i]].rank);
    return min_rank & 1;
}

} // namespace

std::vector<int> solve_naive(const ParityGame& g) {
    g.validate();
    int n = g.size();
    if (n > 20) throw Error("solve_naive: game too large for enumeration");

    std::vector<int> v0, v1;
    for (int v = 0; v < n; ++v) (g.verts[v].owner == 0 ? v0 : v1).push_back(v);

    std::vector<int> winner(n, 1);
    for (int start = 0; start < n; ++start) {
        bool p0_wins = false;
        for (std::uint64_t a = 0; a < (1ull << v0.size()) && !p0_wins; ++a) {
            std::vector<int> choice(n, 0);
            for (size_t i = 0; i < v0.size(); ++i) choice[v0[i]] = (a >> i) & 1;
            bool all = true;
            for (std::uint64_t b = 0; b < (1ull << v1.size()) && all; ++b) {
                for (size_t i = 0; i < v1.size(); ++i) choice[v1[i]] = (b >> i) & 1;
                if (profile_winner(g, choice, start) != 0) all = false;
            }
            if (all) p0_wins = true;
        }
        winner[start] = p0_wins ? 0 : 1;
    }
    return winner;
}

PlayOut play_out(const ParityGame& g, const std::vector<int>& s0,
                 const std::vector<int>& s1, int from) {
    g.validate();
    std::vector<int> seen_at(g.size(), -1);
    std::vector<int> order;
    int v = from;
    while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(order.size());
        order.push_back(v);
        const auto& strat = g.verts[v].owner == 0 ? s0 : s1;
        int d = v < static_cast<int>(strat.size()) ? strat[v] : -1;
        if (d != 0 && d != 1)
            throw Error("play_out: strategy undefined at vertex " + g.verts[v].name);
        v = g.verts[v].succ[d];
    }
    PlayOut po;
    for (int i = 0; i < seen_at[v]; ++i) po.prefix_ranks.push_back(g.verts[order[i]].rank);
    int min_rank = g.verts[v].rank;
    for (size_t i = seen_at[v]; i < order.size(); ++i) {
        po.cycle_ranks.push_back(g.verts[order[i]].rank);
        min_rank = std::min(min_rank, g.verts[order[i]].rank);
    }
    po.winner = min_rank & 1;
    return po;
}

} // namespace tg
