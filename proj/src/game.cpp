#include "treegames/game.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "treegames/random.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tg {

void TreeGame::validate() const {
    if (verts.empty()) throw Error("tree game: no vertices");
    if (initial < 0 || initial >= size()) throw Error("tree game: bad initial vertex");
    for (const Vertex& v : verts) {
        if (v.owner != 0 && v.owner != 1 && v.owner != kBranching)
            throw Error("tree game: owner must be 0, 1 or B");
        if (v.label == kBlank) throw Error("tree game: vertices may not carry the blank label");
        // Vertex names become tree labels in strategy trees, where the blank
        // symbol has reserved meaning.
        if (v.name.empty() || v.name == kBlank)
            throw Error("tree game: vertex names must be nonempty and distinct from '_'");
        for (int d = 0; d < 2; ++d)
            if (v.succ[d] < 0 || v.succ[d] >= size()) throw Error("tree game: dangling successor");
    }
}

std::set<Symbol> TreeGame::play_alphabet() const {
    std::set<Symbol> s{kBlank};
    for (const Vertex& v : verts) s.insert(v.label);
    return s;
}

void FiniteMemoryStrategy::validate(const TreeGame& g) const {
    if (player != 0 && player != 1) throw Error("strategy: player must be 0 or 1");
    if (memsize <= 0 || initial_memory < 0 || initial_memory >= memsize)
        throw Error("strategy: bad memory");
    if (static_cast<int>(move.size()) != memsize || static_cast<int>(update.size()) != memsize)
        throw Error("strategy: table sizes disagree");
    for (int m = 0; m < memsize; ++m) {
        if (static_cast<int>(move[m].size()) != g.size() ||
            static_cast<int>(update[m].size()) != g.size())
            throw Error("strategy: table sizes disagree");
        for (int v = 0; v < g.size(); ++v) {
            if (g.verts[v].owner == player && move[m][v] != 0 && move[m][v] != 1)
                throw Error("strategy: move not total on own vertices");
            for (int d = 0; d < 2; ++d)
                if (update[m][v][d] < 0 || update[m][v][d] >= memsize)
                    throw Error("strategy: update out of range");
        }
    }
}

FiniteMemoryStrategy FiniteMemoryStrategy::uniform(const TreeGame& g, int player, int dir) {
    FiniteMemoryStrategy s;
    s.player = player;
    s.memsize = 1;
    s.initial_memory = 0;
    s.memory_names = {"m0"};
    s.move.assign(1, std::vector<int>(g.size(), dir));
    s.update.assign(1, std::vector<std::array<int, 2>>(g.size(), {0, 0}));
    return s;
}

RegularTree unfolding(const TreeGame& g) {
    g.validate();
    std::vector<RegularTree::Node> ns;
    ns.reserve(g.size());
    for (const auto& v : g.verts) ns.push_back({v.name, v.succ[0], v.succ[1]});
    return RegularTree::make(std::move(ns), g.initial);
}

RegularTree positional_play(const TreeGame& g, const std::vector<int>& choice) {
    g.validate();
    std::vector<RegularTree::Node> ns;
    int blank = g.size();
    for (int v = 0; v < g.size(); ++v) {
        const auto& vert = g.verts[v];
        if (vert.owner == TreeGame::kBranching) {
            ns.push_back({vert.label, vert.succ[0], vert.succ[1]});
        } else {
            int d = choice[v];
            ns.push_back({vert.label, d == 0 ? vert.succ[0] : blank, d == 1 ? vert.succ[1] : blank});
        }
    }
    ns.push_back({kBlank, blank, blank});
    return RegularTree::make(std::move(ns), g.initial);
}

RegularTree strategy_tree(const TreeGame& g, const FiniteMemoryStrategy& s) {
    g.validate();
    s.validate(g);
    std::vector<RegularTree::Node> ns;
    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> work;
    int blank = -1;
    auto blank_node = [&]() {
        if (blank < 0) {
            blank = static_cast<int>(ns.size());
            ns.push_back({kBlank, blank, blank});
        }
        return blank;
    };
    auto get = [&](int v, int m) {
        auto it = id.find({v, m});
        if (it != id.end()) return it->second;
        int i = static_cast<int>(ns.size());
        ns.push_back({g.verts[v].name, i, i});
        id[{v, m}] = i;
        work.push_back({v, m});
        return i;
    };
    int root = get(g.initial, s.initial_memory);
    while (!work.empty()) {
        auto [v, m] = work.front();
        work.pop_front();
        int i = id.at({v, m});
        const auto& vert = g.verts[v];
        if (vert.owner == s.player) {
            int d = s.move[m][v];
            int kept = get(vert.succ[d], s.update[m][v][d]);
            ns[i].left = d == 0 ? kept : blank_node();
            ns[i].right = d == 1 ? kept : blank_node();
        } else {
            ns[i].left = get(vert.succ[0], s.update[m][v][0]);
            ns[i].right = get(vert.succ[1], s.update[m][v][1]);
        }
    }
    return RegularTree::make(std::move(ns), root);
}

RegularTree play(const TreeGame& g, const FiniteMemoryStrategy& s0,
                 const FiniteMemoryStrategy& s1) {
    g.validate();
    s0.validate(g);
    s1.validate(g);
    if (s0.player != 0 || s1.player != 1) throw Error("play: strategies must be for players 0 and 1");

    struct Key {
        int v, m0, m1;
        bool operator<(const Key& o) const {
            return std::tie(v, m0, m1) < std::tie(o.v, o.m0, o.m1);
        }
    };
    std::vector<RegularTree::Node> ns;
    std::map<Key, int> id;
    std::deque<Key> work;
    int blank = -1;
    auto blank_node = [&]() {
        if (blank < 0) {
            blank = static_cast<int>(ns.size());
            ns.push_back({kBlank, blank, blank});
        }
        return blank;
    };
    auto get = [&](Key k) {
        auto it = id.find(k);
        if (it != id.end()) return it->second;
        int i = static_cast<int>(ns.size());
        ns.push_back({g.verts[k.v].label, i, i});
        id[k] = i;
        work.push_back(k);
        return i;
    };
    int root = get({g.initial, s0.initial_memory, s1.initial_memory});
    while (!work.empty()) {
        Key k = work.front();
        work.pop_front();
        int i = id.at(k);
        const auto& vert = g.verts[k.v];
        auto next = [&](int d) {
            return get({vert.succ[d], s0.update[k.m0][k.v][d], s1.update[k.m1][k.v][d]});
        };
        if (vert.owner == TreeGame::kBranching) {
            ns[i].left = next(0);
            ns[i].right = next(1);
        } else {
            int d = vert.owner == 0 ? s0.move[k.m0][k.v] : s1.move[k.m1][k.v];
            int kept = next(d);
            ns[i].left = d == 0 ? kept : blank_node();
            ns[i].right = d == 1 ? kept : blank_node();
        }
    }
    return RegularTree::make(std::move(ns), root);
}

// --- reduction --------------------------------------------------------------

std::set<int> compute_Qb(const Sdtt& d) {
    d.validate();
    std::set<int> qb;
    for (int q = 0; q < d.size(); ++q)
        if (sdtt_membership(d.with_initial(q), RegularTree::blank())) qb.insert(q);
    return qb;
}

Reduction reduce_to_parity(const TreeGame& g, const Sdtt& d) {
    g.validate();
    d.validate();
    for (const auto& v : g.verts) {
        if (v.label == kHash) {
            if (v.owner == TreeGame::kBranching)
                throw Error("reduce_to_parity: '#' labels must sit on player vertices");
        } else if (!d.alphabet.count(v.label)) {
            throw Error("reduce_to_parity: game label '" + v.label + "' outside the transducer alphabet");
        }
    }

    Reduction red;
    red.qb = compute_Qb(d);
    int m = 0;
    for (int r : d.rank) m = std::max(m, r);
    red.max_rank = m;

    auto rank_of = [&](int v, int q, int x) {
        if (x == 0) return 2 * m;
        if (x == 1) return 2 * m + 1;
        if (g.verts[v].label == kHash) return red.qb.count(q) ? 2 * m : 2 * m + 1;
        return d.rank[q];
    };
    auto owner_of = [&](int v, int q) {
        if (g.verts[v].owner == TreeGame::kBranching) return d.owner[q].at(g.verts[v].label);
        return g.verts[v].owner;
    };

    std::map<std::array<int, 3>, int> id;
    std::deque<std::array<int, 3>> work;
    auto get = [&](int v, int q, int x) {
        std::array<int, 3> k{v, q, x};
        auto it = id.find(k);
        if (it != id.end()) return it->second;
        int i = static_cast<int>(red.h.verts.size());
        std::string flag = x == kFlagUndecided ? "?" : std::to_string(x);
        red.h.verts.push_back({g.verts[v].name + "," + d.states[q] + "," + flag,
                               owner_of(v, q), rank_of(v, q, x), {0, 0}});
        red.key.push_back(k);
        id[k] = i;
        work.push_back(k);
        return i;
    };

    red.h.name = g.name + "*" + d.name;
    red.h.initial = get(g.initial, d.initial, kFlagUndecided);
    while (!work.empty()) {
        auto [v, q, x] = work.front();
        work.pop_front();
        int i = id.at({v, q, x});
        const auto& vert = g.verts[v];
        if (vert.label == kHash) {
            // '#' is transparent for the transducer.
            red.h.verts[i].succ[0] = get(vert.succ[0], q, x);
            red.h.verts[i].succ[1] = get(vert.succ[1], q, x);
            continue;
        }
        auto [q0, q1] = d.delta[q].at(vert.label);
        if (x != kFlagUndecided || vert.owner == TreeGame::kBranching) {
            red.h.verts[i].succ[0] = get(vert.succ[0], q0, x);
            red.h.verts[i].succ[1] = get(vert.succ[1], q1, x);
            continue;
        }
        // Player vertex, still undecided: the mover picks a direction, the
        // abandoned branch becomes blank and is scored by whoever owns the
        // induced acceptance position. With checker owner c and abandoned
        // state q': c = 0 wins at once if q' accepts blank, c = 1 wins at
        // once if it does not; otherwise the game stays undecided.
        int checker = d.owner[q].at(vert.label);
        for (int dir = 0; dir < 2; ++dir) {
            int abandoned = dir == 0 ? q1 : q0;
            int flag;
            if (checker == 0)
                flag = red.qb.count(abandoned) ? 0 : kFlagUndecided;
            else
                flag = !red.qb.count(abandoned) ? 1 : kFlagUndecided;
            red.h.verts[i].succ[dir] = get(vert.succ[dir], dir == 0 ? q0 : q1, flag);
        }
    }
    return red;
}

GameVerdict solve_game_automaton_objective(const TreeGame& g, const Sdtt& d) {
    Reduction red = reduce_to_parity(g, d);
    Solution sol = solve(red.h);

    GameVerdict verdict;
    verdict.winner = sol.winner_of[red.h.initial];
    verdict.h_vertices = red.h.size();

    // Memory: transducer state x flag, advanced by the reduction's own edge
    // relation so the strategy follows its positional choice in H.
    int n = d.size();
    FiniteMemoryStrategy s;
    s.player = verdict.winner;
    s.memsize = 3 * n;
    s.initial_memory = d.initial * 3 + kFlagUndecided;
    for (int q = 0; q < n; ++q)
        for (int x = 0; x < 3; ++x)
            s.memory_names.push_back(d.states[q] + (x == 2 ? ",?" : "," + std::to_string(x)));
    s.move.assign(s.memsize, std::vector<int>(g.size(), 0));
    s.update.assign(s.memsize, std::vector<std::array<int, 2>>(g.size(), {0, 0}));

    std::map<std::array<int, 3>, int> pos;
    for (int i = 0; i < red.h.size(); ++i) pos[red.key[i]] = i;
    const auto& strat = verdict.winner == 0 ? sol.strategy0 : sol.strategy1;

    for (int mq = 0; mq < n; ++mq) {
        for (int mx = 0; mx < 3; ++mx) {
            int m = mq * 3 + mx;
            for (int v = 0; v < g.size(); ++v) {
                const auto& vert = g.verts[v];
                int x = mx;
                if (vert.label == kHash) {
                    for (int dir = 0; dir < 2; ++dir) s.update[m][v][dir] = m;
                } else if (d.alphabet.count(vert.label)) {
                    auto [q0, q1] = d.delta[mq].at(vert.label);
                    for (int dir = 0; dir < 2; ++dir) {
                        int qn = dir == 0 ? q0 : q1;
                        int xn = x;
                        if (x == kFlagUndecided && vert.owner != TreeGame::kBranching) {
                            int checker = d.owner[mq].at(vert.label);
                            int abandoned = dir == 0 ? q1 : q0;
                            if (checker == 0)
                                xn = red.qb.count(abandoned) ? 0 : kFlagUndecided;
                            else
                                xn = !red.qb.count(abandoned) ? 1 : kFlagUndecided;
                        }
                        s.update[m][v][dir] = qn * 3 + xn;
                    }
                }
                if (vert.owner == verdict.winner) {
                    auto it = pos.find({v, mq, mx});
                    if (it != pos.end() && strat[it->second].has_value())
                        s.move[m][v] = *strat[it->second];
                }
            }
        }
    }
    verdict.strategy = std::move(s);
    return verdict;
}

// --- strategy checking --------------------------------------------------------

Nta strategy_set_nta(const TreeGame& g, const Nta& b, int owner) {
    g.validate();
    b.validate();
    if (owner != 0 && owner != 1) throw Error("strategy_set_nta: owner must be 0 or 1");
    for (const auto& v : g.verts)
        if (!b.alphabet.count(v.label))
            throw Error("strategy_set_nta: automaton alphabet misses game label '" + v.label + "'");

    Nta bs;
    bs.name = b.name + "_sigma";
    bs.alphabet.insert(kBlank);
    for (const auto& v : g.verts) bs.alphabet.insert(v.name);

    // State: automaton state x (game vertex | blank marker -1).
    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> work;
    auto get = [&](int q, int v) {
        auto it = id.find({q, v});
        if (it != id.end()) return it->second;
        int i = static_cast<int>(bs.states.size());
        bs.states.push_back(b.states[q] + "@" + (v < 0 ? kBlank : g.verts[v].name));
        bs.rank.push_back(b.rank[q]);
        bs.delta.emplace_back();
        id[{q, v}] = i;
        work.push_back({q, v});
        return i;
    };
    bs.initial = get(b.initial, g.initial);
    while (!work.empty()) {
        auto [q, v] = work.front();
        work.pop_front();
        int i = id.at({q, v});
        if (v < 0) {
            // The pre-play abandoned this subtree: simulate b on blanks while
            // reading whatever the strategy tree put here.
            std::vector<StatePair> pairs;
            for (const auto& [b0, b1] : b.moves(q, kBlank)) pairs.push_back({get(b0, -1), get(b1, -1)});
            if (!pairs.empty())
                for (const Symbol& sym : bs.alphabet) bs.delta[i][sym] = pairs;
            continue;
        }
        const auto& vert = g.verts[v];
        std::vector<StatePair> pairs;
        if (vert.owner == TreeGame::kBranching) {
            for (const auto& [b0, b1] : b.moves(q, vert.label))
                pairs.push_back({get(b0, vert.succ[0]), get(b1, vert.succ[1])});
        } else {
            for (const auto& [b0, b1] : b.moves(q, vert.label)) {
                pairs.push_back({get(b0, vert.succ[0]), get(b1, -1)});
                pairs.push_back({get(b0, -1), get(b1, vert.succ[1])});
            }
        }
        if (!pairs.empty()) bs.delta[i][vert.name] = pairs;
    }
    return bs;
}

void validate_strategy_tree(const TreeGame& g, const RegularTree& t, int player) {
    std::set<std::pair<NodeId, int>> seen;
    std::deque<std::pair<NodeId, int>> work{{t.root(), g.initial}};
    if (t.is_blank(t.root())) throw InvalidStrategy("strategy tree: blank root");
    while (!work.empty()) {
        auto [n, v] = work.front();
        work.pop_front();
        if (!seen.insert({n, v}).second) continue;
        if (t.label(n) != g.verts[v].name)
            throw InvalidStrategy("strategy tree: node labelled '" + t.label(n) +
                                  "' where the unfolding has '" + g.verts[v].name + "'");
        bool lb = t.is_blank(t.left(n)), rb = t.is_blank(t.right(n));
        if (g.verts[v].owner == player) {
            if (lb == rb)
                throw InvalidStrategy("strategy tree: owner vertex '" + g.verts[v].name +
                                      "' is not redundant");
            int d = lb ? 1 : 0;
            work.push_back({t.child(n, d), g.verts[v].succ[d]});
        } else {
            if (lb || rb)
                throw InvalidStrategy("strategy tree: vertex '" + g.verts[v].name +
                                      "' must be fully branching");
            work.push_back({t.left(n), g.verts[v].succ[0]});
            work.push_back({t.right(n), g.verts[v].succ[1]});
        }
    }
}

namespace {

bool check_strategy_tree(const TreeGame& g, const RegularTree& t, int player, const Nta& bsigma) {
    validate_strategy_tree(g, t, player);
    return !nta_membership(bsigma, t);
}

} // namespace

bool check_strategy(const TreeGame& g, const FiniteMemoryStrategy& s, const Nta& b) {
    RegularTree t = strategy_tree(g, s);
    Nta bsigma = strategy_set_nta(g, b, s.player);
    return check_strategy_tree(g, t, s.player, bsigma);
}

// --- bounded determinacy ------------------------------------------------------

std::vector<FiniteMemoryStrategy> enumerate_depth_strategies(const TreeGame& g, int player,
                                                             int depth) {
    g.validate();
    if (depth < 0) throw Error("enumerate_depth_strategies: negative depth");

    // Memory states: unfolding addresses shorter than `depth`, plus a sink.
    std::vector<Address> addrs;
    std::map<Address, int> mem_id;
    std::deque<Address> q{""};
    while (!q.empty()) {
        Address u = q.front();
        q.pop_front();
        if (static_cast<int>(u.size()) >= depth) continue;
        mem_id[u] = static_cast<int>(addrs.size());
        addrs.push_back(u);
        q.push_back(u + "0");
        q.push_back(u + "1");
    }
    int sink = static_cast<int>(addrs.size());
    int memsize = sink + 1;

    // Vertex reached at each address.
    std::vector<int> vert_at(addrs.size());
    for (size_t i = 0; i < addrs.size(); ++i) {
        int v = g.initial;
        for (char c : addrs[i]) v = g.verts[v].succ[c - '0'];
        vert_at[i] = v;
    }

    std::vector<int> decision; // indices into addrs
    for (size_t i = 0; i < addrs.size(); ++i) {
        const auto& vert = g.verts[vert_at[i]];
        if (vert.owner == player && vert.succ[0] != vert.succ[1]) decision.push_back(static_cast<int>(i));
    }
    if (decision.size() > 22)
        throw Error("enumerate_depth_strategies: too many decision points (" +
                    std::to_string(decision.size()) + ")");

    FiniteMemoryStrategy base;
    base.player = player;
    base.memsize = memsize;
    base.initial_memory = depth == 0 ? sink : mem_id.at("");
    for (const Address& u : addrs) base.memory_names.push_back(u.empty() ? "e" : u);
    base.memory_names.push_back("sink");
    base.move.assign(memsize, std::vector<int>(g.size(), 0));
    base.update.assign(memsize, std::vector<std::array<int, 2>>(g.size(), {sink, sink}));
    for (size_t i = 0; i < addrs.size(); ++i)
        for (int v = 0; v < g.size(); ++v)
            for (int d = 0; d < 2; ++d) {
                Address nu = addrs[i] + static_cast<char>('0' + d);
                auto it = mem_id.find(nu);
                base.update[i][v][d] = it == mem_id.end() ? sink : it->second;
            }

    std::vector<FiniteMemoryStrategy> out;
    out.reserve(1ull << decision.size());
    for (std::uint64_t bits = 0; bits < (1ull << decision.size()); ++bits) {
        FiniteMemoryStrategy s = base;
        for (size_t k = 0; k < decision.size(); ++k) {
            int i = decision[k];
            s.move[i][vert_at[i]] = (bits >> k) & 1;
        }
        out.push_back(std::move(s));
    }
    return out;
}

DeterminacyResult decide_determinacy(const TreeGame& g, const Nta& l, const Nta& col,
                                     int depth, std::uint64_t guard_seed) {
    g.validate();
    l.validate();
    col.validate();

    // Complementarity guard: l and col must split the sampled trees exactly.
    {
        Rng rng(guard_seed);
        std::vector<Symbol> sigma(l.alphabet.begin(), l.alphabet.end());
        for (int i = 0; i < 100; ++i) {
            RegularTree t = random_regular_tree(rng, sigma, 6);
            bool in_l = nta_membership(l, t);
            bool in_c = nta_membership(col, t);
            if (in_l == in_c)
                throw Error("decide_determinacy: automata not complementary on a sampled tree");
        }
    }

    DeterminacyResult res;
    res.depth = depth;
    for (int player = 0; player < 2; ++player) {
        const Nta& b = player == 0 ? col : l;
        Nta bsigma = strategy_set_nta(g, b, player);
        auto candidates = enumerate_depth_strategies(g, player, depth);
        (player == 0 ? res.candidates0 : res.candidates1) = static_cast<int>(candidates.size());

        int found = -1;
        std::vector<char> wins(candidates.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size()); ++i) {
            RegularTree t = strategy_tree(g, candidates[i]);
            wins[i] = check_strategy_tree(g, t, player, bsigma) ? 1 : 0;
        }
        for (size_t i = 0; i < candidates.size(); ++i)
            if (wins[i]) {
                found = static_cast<int>(i);
                break;
            }
        if (found >= 0) {
            res.kind = player == 0 ? DeterminacyResult::Player0 : DeterminacyResult::Player1;
            res.strategy = candidates[found];
            return res;
        }
    }
    res.kind = DeterminacyResult::Undetermined;
    return res;
}

int solve_single_player(const TreeGame& g, const Nta& l, const std::optional<Nta>& col) {
    g.validate();
    bool has0 = false, has1 = false;
    for (const auto& v : g.verts) {
        has0 = has0 || v.owner == 0;
        has1 = has1 || v.owner == 1;
    }
    if (has0 && has1) throw Error("solve_single_player: both players own vertices");
    Nta plays = play_language_nta(g);
    if (!has1) {
        // Player 0 drives every choice: wins iff some play lies in L.
        return nta_emptiness(intersect_with_safety(l, plays)).empty ? 1 : 0;
    }
    if (!col) throw Error("solve_single_player: complement automaton required when V0 is empty");
    // Player 1 drives every choice: Player 0 wins iff all plays lie in L.
    return nta_emptiness(intersect_with_safety(*col, plays)).empty ? 0 : 1;
}

// --- arenas generated from safety automata ------------------------------------

namespace {

// Internal view of a generated arena: states of the construction per vertex,
// so the matching-pennies builder can steer generation towards a target tree.
struct SafetyGameBuild {
    struct Key {
        int kind;                     // 0: (state, symbol set), 1: (pair set, symbol), 2: hash loop
        int q = -1;                   // kind 0
        std::vector<Symbol> syms;     // kind 0
        std::vector<StatePair> pairs; // kind 1
        Symbol letter;                // kind 1
        bool operator<(const Key& o) const {
            return std::tie(kind, q, syms, pairs, letter) <
                   std::tie(o.kind, o.q, o.syms, o.pairs, o.letter);
        }
    };
    TreeGame game;
    std::vector<Key> keys;
};

SafetyGameBuild build_safety_game(const Nta& a) {
    a.validate();
    auto [lo, hi] = a.index();
    if (lo != hi || lo % 2 != 0)
        throw Error("game_from_safety_nta: automaton must have a single even rank");
    if (nta_emptiness(a).empty) throw Error("game_from_safety_nta: automaton accepts nothing");

    int n = a.size();
    std::vector<bool> nonempty(n), blank_ok(n);
    for (int q = 0; q < n; ++q) {
        nonempty[q] = !nta_emptiness(a.with_initial(q)).empty;
        blank_ok[q] = nta_membership(a.with_initial(q), RegularTree::blank());
    }
    auto productive_syms = [&](int q) {
        std::vector<Symbol> out;
        for (const Symbol& sym : a.alphabet) {
            if (sym == kBlank) {
                if (blank_ok[q]) out.push_back(sym);
                continue;
            }
            for (const auto& [x, y] : a.moves(q, sym))
                if (nonempty[x] && nonempty[y]) {
                    out.push_back(sym);
                    break;
                }
        }
        return out;
    };
    auto productive_pairs = [&](int q, const Symbol& sym) {
        std::vector<StatePair> out;
        for (const auto& pr : a.moves(q, sym))
            if (nonempty[pr.first] && nonempty[pr.second]) out.push_back(pr);
        return out;
    };

    SafetyGameBuild b;
    b.game.name = a.name + "_game";
    using Key = SafetyGameBuild::Key;
    std::map<Key, int> id;
    std::deque<Key> work;
    auto get = [&](Key k) {
        auto it = id.find(k);
        if (it != id.end()) return it->second;
        int i = static_cast<int>(b.game.verts.size());
        TreeGame::Vertex v;
        v.name = "g" + std::to_string(i);
        if (k.kind == 1 && k.pairs.size() == 1) {
            v.label = k.letter;
            v.owner = TreeGame::kBranching;
        } else {
            v.label = kHash;
            v.owner = 0;
        }
        b.game.verts.push_back(v);
        b.keys.push_back(k);
        id[k] = i;
        work.push_back(k);
        return i;
    };

    Key init{0, a.initial, productive_syms(a.initial), {}, ""};
    if (init.syms.empty()) throw Error("game_from_safety_nta: initial state unproductive");
    b.game.initial = get(init);
    while (!work.empty()) {
        Key k = work.front();
        work.pop_front();
        int i = id.at(k);
        auto wire = [&](int s0, int s1) {
            b.game.verts[i].succ[0] = s0;
            b.game.verts[i].succ[1] = s1;
        };
        if (k.kind == 2) {
            wire(i, i);
        } else if (k.kind == 0) {
            if (k.syms.size() > 1) {
                // Split off the least symbol.
                Key first{0, k.q, {k.syms.front()}, {}, ""};
                Key rest{0, k.q, std::vector<Symbol>(k.syms.begin() + 1, k.syms.end()), {}, ""};
                wire(get(first), get(rest));
            } else if (k.syms.front() == kBlank) {
                // Blank expectation: realised as an infinite '#' path.
                int loop = get(Key{2, -1, {}, {}, ""});
                wire(loop, loop);
            } else {
                int t = get(Key{1, -1, {}, productive_pairs(k.q, k.syms.front()), k.syms.front()});
                wire(t, t);
            }
        } else if (k.pairs.size() > 1) {
            Key first{1, -1, {}, {k.pairs.front()}, k.letter};
            Key rest{1, -1, {}, std::vector<StatePair>(k.pairs.begin() + 1, k.pairs.end()), k.letter};
            wire(get(first), get(rest));
        } else {
            auto [ql, qr] = k.pairs.front();
            wire(get(Key{0, ql, productive_syms(ql), {}, ""}),
                 get(Key{0, qr, productive_syms(qr), {}, ""}));
        }
    }
    return b;
}

} // namespace

TreeGame game_from_safety_nta(const Nta& a) {
    return build_safety_game(a).game;
}

// --- matching pennies ----------------------------------------------------------

namespace {

// Positional choices on a generated component that make its single-player plays
// project to exactly `target`: walk the component against a run of the
// exact-tree automaton on the target, whittling symbol and pair sets towards
// the wanted entry.
struct TreeSteering {
    const SafetyGameBuild& b;
    const Nta& exact;
    std::vector<int> choice;

    // The transition pair whose components accept the target's two subtrees
    // (the initial state can offer one pair per stored tree with this root).
    StatePair wanted_pair(int state, const RegularTree& target, NodeId tn) const {
        for (const auto& pr : exact.moves(state, target.label(tn))) {
            RegularTree lt = RegularTree::make(target.nodes(), target.left(tn));
            RegularTree rt = RegularTree::make(target.nodes(), target.right(tn));
            if (nta_membership(exact.with_initial(pr.first), lt) &&
                nta_membership(exact.with_initial(pr.second), rt))
                return pr;
        }
        throw Error("matching_pennies_game: target tree not generated by the component");
    }

    void steer(int v, int state, const RegularTree& target, NodeId tn) {
        const auto& key = b.keys[v];
        if (key.kind == 2) return;
        if (key.kind == 0) {
            if (key.syms.size() > 1) {
                int d = key.syms.front() == target.label(tn) ? 0 : 1;
                choice[v] = d;
                steer(b.game.verts[v].succ[d], state, target, tn);
                return;
            }
            steer(b.game.verts[v].succ[0], state, target, tn);
            return;
        }
        StatePair want = wanted_pair(state, target, tn);
        if (key.pairs.size() > 1) {
            int d = key.pairs.front() == want ? 0 : 1;
            choice[v] = d;
            steer(b.game.verts[v].succ[d], state, target, tn);
            return;
        }
        steer(b.game.verts[v].succ[0], want.first, target, target.left(tn));
        steer(b.game.verts[v].succ[1], want.second, target, target.right(tn));
    }
};

FiniteMemoryStrategy positional_strategy(const TreeGame& g, int player,
                                         const std::vector<int>& choice) {
    FiniteMemoryStrategy s = FiniteMemoryStrategy::uniform(g, player, 0);
    for (int v = 0; v < g.size(); ++v) s.move[0][v] = choice[v];
    return s;
}

} // namespace

MatchingPennies matching_pennies_game(const Context& c, const RegularTree& t1,
                                      const RegularTree& t2, const RegularTree& t3,
                                      const RegularTree& t4, const Nta& l) {
    const RegularTree* ts[4] = {&t1, &t2, &t3, &t4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (tree_equal(*ts[i], *ts[j]))
                throw Error("matching_pennies_game: the four trees must be pairwise distinct");
    struct Cond {
        int a, b;
        bool want;
    } conds[] = {{0, 2, true}, {1, 3, true}, {1, 2, false}, {0, 3, false}};
    for (const auto& cd : conds) {
        bool got = nta_membership(l, graft(c, *ts[cd.a], *ts[cd.b]));
        if (got != cd.want)
            throw Error("matching_pennies_game: membership hypothesis fails for the pair (t" +
                        std::to_string(cd.a + 1) + ", t" + std::to_string(cd.b + 1) + ")");
    }

    Nta exact_c = exact_trees_nta("mp_ctx", {c.tree});
    Nta exact_l = exact_trees_nta("mp_left", {t1, t2});
    Nta exact_r = exact_trees_nta("mp_right", {t3, t4});
    SafetyGameBuild gc = build_safety_game(exact_c);
    SafetyGameBuild gl = build_safety_game(exact_l);
    SafetyGameBuild gr = build_safety_game(exact_r);
    for (auto& v : gr.game.verts)
        if (v.owner == 0) v.owner = 1;

    // Locate the vertex of gc emitting the hole position: descend forced '#'
    // chains to each letter vertex, then follow the hole address.
    auto descend = [&](int v) {
        while (gc.game.verts[v].label == kHash) v = gc.game.verts[v].succ[0];
        return v;
    };
    int hole = descend(gc.game.initial);
    for (char bit : c.hole) hole = descend(gc.game.verts[hole].succ[bit - '0']);

    MatchingPennies mp;
    TreeGame& g = mp.game;
    g.name = "matching_pennies";
    g.verts = gc.game.verts;
    int offl = g.size();
    for (auto v : gl.game.verts) {
        v.succ[0] += offl;
        v.succ[1] += offl;
        v.name = "l_" + v.name;
        g.verts.push_back(v);
    }
    int offr = g.size();
    for (auto v : gr.game.verts) {
        v.succ[0] += offr;
        v.succ[1] += offr;
        v.name = "r_" + v.name;
        g.verts.push_back(v);
    }
    g.verts[hole].succ[0] = offl + gl.game.initial;
    g.verts[hole].succ[1] = offr + gr.game.initial;
    g.initial = gc.game.initial;
    g.objective_nta = preimage_hash(l);

    // Canonical strategies: steer each alternative game to its tree.
    auto steered = [&](const SafetyGameBuild& comp, const Nta& exact, const RegularTree& target,
                       int offset, int player) {
        TreeSteering st{comp, exact, std::vector<int>(comp.game.size(), 0)};
        st.steer(comp.game.initial, exact.initial, target, target.root());
        std::vector<int> full(g.size(), 0);
        for (int v = 0; v < comp.game.size(); ++v) full[offset + v] = st.choice[v];
        return positional_strategy(g, player, full);
    };
    mp.sigma1 = steered(gl, exact_l, t1, offl, 0);
    mp.sigma2 = steered(gl, exact_l, t2, offl, 0);
    mp.pi3 = steered(gr, exact_r, t3, offr, 1);
    mp.pi4 = steered(gr, exact_r, t4, offr, 1);
    return mp;
}

std::pair<Nta, Nta> lift_objective_pair(const Nta& l, const Nta& col) {
    Nta ll = preimage_hash(l);
    Nta lc = nta_union(preimage_hash(col), undefined_projection_nta(ll.alphabet));
    return {std::move(ll), std::move(lc)};
}

Nta play_level_objective(const Sdtt& d, bool complement) {
    Sdtt base = complement ? dualize_sdtt(d) : d;
    return preimage_hash(game_ata_to_nta(sdtt_to_game_ata(base)));
}

} // namespace tg
