#include "treegames/automata.hpp"

#include <algorithm>
#include <deque>

#include "treegames/game.hpp"

namespace tg {

namespace {

const std::vector<StatePair> kNoMoves;

// Shared machinery for the membership/emptiness parity games: chooser chains
// binarise wide transition sets, dead ends become sinks losing for the stuck
// player. Intermediate vertices take the automaton's maximal rank, which
// never lowers a lim inf.
struct GameBuilder {
    ParityGame g;

    int add(std::string name, int owner, int rank) {
        g.verts.push_back({std::move(name), owner, rank, {0, 0}});
        return g.size() - 1;
    }

    int sink(int stuck_player) {
        int rank = stuck_player == 0 ? 1 : 0;
        int v = add("sink" + std::to_string(stuck_player), stuck_player, rank);
        g.verts[v].succ[0] = g.verts[v].succ[1] = v;
        return v;
    }

    void fan(int v, int owner, int neutral_rank, const std::vector<int>& succs) {
        if (succs.empty()) {
            int s = sink(g.verts[v].owner);
            g.verts[v].succ[0] = g.verts[v].succ[1] = s;
            return;
        }
        int cur = v;
        size_t i = 0;
        while (succs.size() - i > 2) {
            int next = add("choose", owner, neutral_rank);
            g.verts[cur].succ[0] = succs[i++];
            g.verts[cur].succ[1] = next;
            cur = next;
        }
        g.verts[cur].succ[0] = succs[i];
        g.verts[cur].succ[1] = succs[succs.size() - i > 1 ? i + 1 : i];
    }
};

int max_rank(const std::vector<int>& ranks) {
    int m = 0;
    for (int r : ranks) m = std::max(m, r);
    return m;
}

void check_labels(const std::set<Symbol>& alphabet, const RegularTree& t, const char* who) {
    for (const Symbol& s : t.labels_used())
        if (!alphabet.count(s)) throw Error(std::string(who) + ": tree label '" + s + "' outside the alphabet");
}

} // namespace

const std::vector<StatePair>& Nta::moves(int q, const Symbol& a) const {
    auto it = delta[q].find(a);
    return it == delta[q].end() ? kNoMoves : it->second;
}

std::pair<int, int> Nta::index() const {
    int lo = rank[0], hi = rank[0];
    for (int r : rank) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return {lo, hi};
}

Nta Nta::with_initial(int q) const {
    Nta b = *this;
    b.initial = q;
    return b;
}

void Nta::validate() const {
    if (states.empty()) throw Error("nta: no states");
    if (initial < 0 || initial >= size()) throw Error("nta: bad initial state");
    if (rank.size() != states.size() || delta.size() != states.size())
        throw Error("nta: table sizes disagree");
    if (!alphabet.count(kBlank)) throw Error("nta: alphabet must contain the blank symbol");
    for (int q = 0; q < size(); ++q)
        for (const auto& [sym, pairs] : delta[q]) {
            if (!alphabet.count(sym)) throw Error("nta: transition on symbol outside the alphabet");
            for (const auto& [l, r] : pairs)
                if (l < 0 || l >= size() || r < 0 || r >= size()) throw Error("nta: dangling state in transition");
        }
}

int Ata::atom(int dir, int state) {
    pool.push_back({AtaFormula::Atom, dir, state, -1, -1});
    return static_cast<int>(pool.size()) - 1;
}
int Ata::conj(int l, int r) {
    pool.push_back({AtaFormula::And, 0, 0, l, r});
    return static_cast<int>(pool.size()) - 1;
}
int Ata::disj(int l, int r) {
    pool.push_back({AtaFormula::Or, 0, 0, l, r});
    return static_cast<int>(pool.size()) - 1;
}

void Ata::validate() const {
    if (states.empty()) throw Error("ata: no states");
    if (initial < 0 || initial >= size()) throw Error("ata: bad initial state");
    if (rank.size() != states.size() || delta.size() != states.size())
        throw Error("ata: table sizes disagree");
    for (int q = 0; q < size(); ++q)
        for (const auto& [sym, f] : delta[q]) {
            if (!alphabet.count(sym)) throw Error("ata: transition on symbol outside the alphabet");
            if (f < 0 || f >= static_cast<int>(pool.size())) throw Error("ata: dangling formula");
        }
}

std::string Ata::format_formula(int idx) const {
    const AtaFormula& f = pool[idx];
    switch (f.kind) {
        case AtaFormula::Atom:
            return "(" + std::to_string(f.dir) + "," + states[f.state] + ")";
        case AtaFormula::And:
            return "(" + format_formula(f.lhs) + "&" + format_formula(f.rhs) + ")";
        default:
            return "(" + format_formula(f.lhs) + "|" + format_formula(f.rhs) + ")";
    }
}

Ata GameAta::to_ata() const {
    Ata a;
    a.name = name;
    a.states = states;
    a.alphabet = alphabet;
    a.initial = initial;
    a.rank = rank;
    a.delta.resize(size());
    for (int q = 0; q < size(); ++q)
        for (const auto& [sym, tr] : delta[q]) {
            int f;
            switch (tr.shape) {
                case Dir0: f = a.atom(0, tr.p); break;
                case Dir1: f = a.atom(1, tr.p); break;
                case AndLR: f = a.conj(a.atom(0, tr.p), a.atom(1, tr.r)); break;
                default: f = a.disj(a.atom(0, tr.p), a.atom(1, tr.r)); break;
            }
            a.delta[q][sym] = f;
        }
    return a;
}

GameAta GameAta::from_ata(const Ata& a) {
    a.validate();
    GameAta ga;
    ga.name = a.name;
    ga.states = a.states;
    ga.alphabet = a.alphabet;
    ga.initial = a.initial;
    ga.rank = a.rank;
    ga.delta.resize(a.size());
    for (int q = 0; q < a.size(); ++q)
        for (const auto& [sym, fi] : a.delta[q]) {
            const AtaFormula& f = a.pool[fi];
            Trans tr;
            if (f.kind == AtaFormula::Atom) {
                tr.shape = f.dir == 0 ? Dir0 : Dir1;
                tr.p = f.state;
            } else {
                const AtaFormula& l = a.pool[f.lhs];
                const AtaFormula& r = a.pool[f.rhs];
                if (l.kind != AtaFormula::Atom || r.kind != AtaFormula::Atom || l.dir != 0 || r.dir != 1)
                    throw Error("game automaton: transition formula not of the four game shapes");
                tr.shape = f.kind == AtaFormula::And ? AndLR : OrLR;
                tr.p = l.state;
                tr.r = r.state;
            }
            ga.delta[q][sym] = tr;
        }
    return ga;
}

Sdtt Sdtt::with_initial(int q) const {
    Sdtt d = *this;
    d.initial = q;
    return d;
}

void Sdtt::validate() const {
    if (states.empty()) throw Error("sdtt: no states");
    if (initial < 0 || initial >= size()) throw Error("sdtt: bad initial state");
    if (rank.size() != states.size() || delta.size() != states.size() || owner.size() != states.size())
        throw Error("sdtt: table sizes disagree");
    if (!alphabet.count(kBlank)) throw Error("sdtt: alphabet must contain the blank symbol");
    for (int q = 0; q < size(); ++q) {
        for (const Symbol& a : alphabet) {
            if (!delta[q].count(a)) throw Error("sdtt: delta not total at state " + states[q] + ", symbol " + a);
            if (!owner[q].count(a)) throw Error("sdtt: owner not total at state " + states[q] + ", symbol " + a);
        }
    }
}

// --- membership -----------------------------------------------------------

bool nta_membership(const Nta& a, const RegularTree& t) {
    a.validate();
    check_labels(a.alphabet, t, "nta_membership");
    int m = max_rank(a.rank);

    GameBuilder gb;
    std::map<std::pair<NodeId, int>, int> pos; // (tree node, state) -> vertex
    std::deque<std::pair<NodeId, int>> work;

    auto state_pos = [&](NodeId n, int q) {
        auto it = pos.find({n, q});
        if (it != pos.end()) return it->second;
        int v = gb.add(a.states[q] + "@" + std::to_string(n), 0, a.rank[q]);
        pos[{n, q}] = v;
        work.push_back({n, q});
        return v;
    };

    int init = state_pos(t.root(), a.initial);
    while (!work.empty()) {
        auto [n, q] = work.front();
        work.pop_front();
        int v = pos.at({n, q});
        std::vector<int> options;
        for (const auto& [q0, q1] : a.moves(q, t.label(n))) {
            int dirpos = gb.add("dir", 1, m);
            int l = state_pos(t.left(n), q0);
            int r = state_pos(t.right(n), q1);
            gb.g.verts[dirpos].succ[0] = l;
            gb.g.verts[dirpos].succ[1] = r;
            options.push_back(dirpos);
        }
        gb.fan(v, 0, m, options);
    }
    gb.g.initial = init;
    Solution sol = solve(gb.g);
    return sol.winner_of[init] == 0;
}

Emptiness nta_emptiness(const Nta& a) {
    a.validate();
    int m = max_rank(a.rank);

    struct Choice {
        Symbol letter;
        int q0, q1;
        bool forced;
    };
    GameBuilder gb;
    std::map<std::pair<int, bool>, int> pos; // (state, blank-forced) -> vertex
    std::map<int, Choice> choice_of;         // dir vertex -> payload
    std::deque<std::pair<int, bool>> work;

    auto state_pos = [&](int q, bool forced) {
        auto it = pos.find({q, forced});
        if (it != pos.end()) return it->second;
        int v = gb.add(a.states[q] + (forced ? "!" : ""), 0, a.rank[q]);
        pos[{q, forced}] = v;
        work.push_back({q, forced});
        return v;
    };
    int init = state_pos(a.initial, false);
    while (!work.empty()) {
        auto [q, forced] = work.front();
        work.pop_front();
        int v = pos.at({q, forced});
        std::vector<int> options;
        for (const Symbol& x : a.alphabet) {
            if (forced && x != kBlank) continue;
            bool forced2 = (x == kBlank);
            for (const auto& [q0, q1] : a.moves(q, x)) {
                int dirpos = gb.add("dir", 1, m);
                choice_of[dirpos] = {x, q0, q1, forced2};
                gb.g.verts[dirpos].succ[0] = state_pos(q0, forced2);
                gb.g.verts[dirpos].succ[1] = state_pos(q1, forced2);
                options.push_back(dirpos);
            }
        }
        gb.fan(v, 0, m, options);
    }
    gb.g.initial = init;
    Solution sol = solve(gb.g);

    Emptiness res;
    res.empty = sol.winner_of[init] != 0;
    if (res.empty) return res;

    // Read the witness off Player 0's positional strategy: walk each winning
    // state position through its chooser chain to the selected transition.
    auto chosen = [&](int v) -> const Choice& {
        while (!choice_of.count(v)) {
            auto d = sol.strategy0[v];
            if (!d) throw Error("nta_emptiness: missing strategy on a winning vertex");
            v = gb.g.verts[v].succ[*d];
        }
        return choice_of.at(v);
    };

    std::vector<RegularTree::Node> nodes;
    std::map<std::pair<int, bool>, int> tree_id;
    std::deque<std::pair<int, bool>> tw;
    auto tree_node = [&](int q, bool forced) {
        auto it = tree_id.find({q, forced});
        if (it != tree_id.end()) return it->second;
        int id = static_cast<int>(nodes.size());
        nodes.push_back({kBlank, id, id});
        tree_id[{q, forced}] = id;
        tw.push_back({q, forced});
        return id;
    };
    int root = tree_node(a.initial, false);
    while (!tw.empty()) {
        auto [q, forced] = tw.front();
        tw.pop_front();
        const Choice& c = chosen(pos.at({q, forced}));
        int id = tree_id.at({q, forced});
        nodes[id].label = c.letter;
        nodes[id].left = tree_node(c.q0, c.forced);
        nodes[id].right = tree_node(c.q1, c.forced);
    }
    res.witness = RegularTree::make(std::move(nodes), root);
    return res;
}

bool ata_membership(const Ata& a, const RegularTree& t) {
    a.validate();
    check_labels(a.alphabet, t, "ata_membership");
    int m = max_rank(a.rank);

    GameBuilder gb;
    std::map<std::pair<int, NodeId>, int> pos; // (formula, tree node) -> vertex
    std::deque<std::pair<int, NodeId>> work;

    auto formula_at = [&](int q, NodeId n) {
        auto it = a.delta[q].find(t.label(n));
        if (it == a.delta[q].end())
            throw Error("ata_membership: no transition for state " + a.states[q] + " on " + t.label(n));
        return it->second;
    };
    auto fpos = [&](int f, NodeId n) {
        auto it = pos.find({f, n});
        if (it != pos.end()) return it->second;
        const AtaFormula& ff = a.pool[f];
        int owner = ff.kind == AtaFormula::And ? 1 : 0;
        int rank = ff.kind == AtaFormula::Atom ? a.rank[ff.state] : m;
        int v = gb.add("f" + std::to_string(f) + "@" + std::to_string(n), owner, rank);
        pos[{f, n}] = v;
        work.push_back({f, n});
        return v;
    };
    int init = fpos(formula_at(a.initial, t.root()), t.root());
    while (!work.empty()) {
        auto [f, n] = work.front();
        work.pop_front();
        int v = pos.at({f, n});
        const AtaFormula& ff = a.pool[f];
        if (ff.kind == AtaFormula::Atom) {
            NodeId c = t.child(n, ff.dir);
            int s = fpos(formula_at(ff.state, c), c);
            gb.g.verts[v].succ[0] = gb.g.verts[v].succ[1] = s;
        } else {
            gb.g.verts[v].succ[0] = fpos(ff.lhs, n);
            gb.g.verts[v].succ[1] = fpos(ff.rhs, n);
        }
    }
    gb.g.initial = init;
    Solution sol = solve(gb.g);
    return sol.winner_of[init] == 0;
}

RegularTree sdtt_run(const Sdtt& d, const RegularTree& t) {
    d.validate();
    check_labels(d.alphabet, t, "sdtt_run");

    std::vector<RegularTree::Node> nodes;
    std::map<std::pair<NodeId, int>, int> id;
    std::deque<std::pair<NodeId, int>> work;
    auto get = [&](NodeId n, int q) {
        auto it = id.find({n, q});
        if (it != id.end()) return it->second;
        int i = static_cast<int>(nodes.size());
        nodes.push_back({d.states[q], i, i});
        id[{n, q}] = i;
        work.push_back({n, q});
        return i;
    };
    int root = get(t.root(), d.initial);
    while (!work.empty()) {
        auto [n, q] = work.front();
        work.pop_front();
        auto [q0, q1] = d.delta[q].at(t.label(n));
        int i = id.at({n, q});
        nodes[i].left = get(t.left(n), q0);
        nodes[i].right = get(t.right(n), q1);
    }
    return RegularTree::make(std::move(nodes), root);
}

bool sdtt_membership(const Sdtt& d, const RegularTree& t) {
    d.validate();
    check_labels(d.alphabet, t, "sdtt_membership");

    // The induced parity game is already binary: owner and rank come from the
    // run, the two successors are the two children.
    ParityGame g;
    std::map<std::pair<NodeId, int>, int> pos;
    std::deque<std::pair<NodeId, int>> work;
    auto get = [&](NodeId n, int q) {
        auto it = pos.find({n, q});
        if (it != pos.end()) return it->second;
        int v = static_cast<int>(g.verts.size());
        g.verts.push_back({d.states[q] + "@" + std::to_string(n),
                           d.owner[q].at(t.label(n)), d.rank[q], {0, 0}});
        pos[{n, q}] = v;
        work.push_back({n, q});
        return v;
    };
    g.initial = get(t.root(), d.initial);
    while (!work.empty()) {
        auto [n, q] = work.front();
        work.pop_front();
        auto [q0, q1] = d.delta[q].at(t.label(n));
        int v = pos.at({n, q});
        g.verts[v].succ[0] = get(t.left(n), q0);
        g.verts[v].succ[1] = get(t.right(n), q1);
    }
    Solution sol = solve(g);
    return sol.winner_of[g.initial] == 0;
}

// --- translations ---------------------------------------------------------

GameAta sdtt_to_game_ata(const Sdtt& d) {
    d.validate();
    GameAta a;
    a.name = d.name + "_ga";
    a.states = d.states;
    a.alphabet = d.alphabet;
    a.initial = d.initial;
    a.rank = d.rank;
    a.delta.resize(d.size());
    for (int q = 0; q < d.size(); ++q)
        for (const auto& [sym, pr] : d.delta[q]) {
            GameAta::Trans tr;
            tr.shape = d.owner[q].at(sym) == 0 ? GameAta::OrLR : GameAta::AndLR;
            tr.p = pr.first;
            tr.r = pr.second;
            a.delta[q][sym] = tr;
        }
    return a;
}

Sdtt game_ata_to_sdtt(const GameAta& a) {
    Sdtt d;
    d.name = a.name + "_sdtt";
    d.states = a.states;
    d.states.push_back("_top");
    d.states.push_back("_bot");
    int top = a.size();     // accepting sink for the unary shapes
    int bot = a.size() + 1; // rejecting sink totalising missing transitions
    d.alphabet = a.alphabet;
    d.initial = a.initial;
    d.rank = a.rank;
    d.rank.push_back(0);
    d.rank.push_back(1);
    d.delta.resize(d.size());
    d.owner.resize(d.size());
    for (int q = 0; q < a.size(); ++q)
        for (const Symbol& sym : a.alphabet) {
            auto it = a.delta[q].find(sym);
            if (it == a.delta[q].end()) {
                d.delta[q][sym] = {bot, bot};
                d.owner[q][sym] = 1;
                continue;
            }
            const GameAta::Trans& tr = it->second;
            switch (tr.shape) {
                case GameAta::OrLR:
                    d.delta[q][sym] = {tr.p, tr.r};
                    d.owner[q][sym] = 0;
                    break;
                case GameAta::AndLR:
                    d.delta[q][sym] = {tr.p, tr.r};
                    d.owner[q][sym] = 1;
                    break;
                case GameAta::Dir0:
                    d.delta[q][sym] = {tr.p, top};
                    d.owner[q][sym] = 1;
                    break;
                default:
                    d.delta[q][sym] = {top, tr.p};
                    d.owner[q][sym] = 1;
                    break;
            }
        }
    for (const Symbol& sym : a.alphabet) {
        d.delta[top][sym] = {top, top};
        d.owner[top][sym] = 1;
        d.delta[bot][sym] = {bot, bot};
        d.owner[bot][sym] = 1;
    }
    return d;
}

Sdtt dualize_sdtt(const Sdtt& d) {
    d.validate();
    Sdtt dual = d;
    dual.name = d.name + "_dual";
    for (int& r : dual.rank) r += 1;
    for (auto& m : dual.owner)
        for (auto& [sym, o] : m) o = 1 - o;
    return dual;
}

Nta game_ata_to_nta(const GameAta& a) {
    Nta b;
    b.name = a.name + "_nta";
    b.states = a.states;
    b.states.push_back("_top");
    int top = a.size();
    b.alphabet = a.alphabet;
    b.initial = a.initial;
    b.rank = a.rank;
    b.rank.push_back(0);
    b.delta.resize(b.size());
    for (int q = 0; q < a.size(); ++q)
        for (const auto& [sym, tr] : a.delta[q]) {
            switch (tr.shape) {
                case GameAta::AndLR: b.delta[q][sym] = {{tr.p, tr.r}}; break;
                case GameAta::OrLR: b.delta[q][sym] = {{tr.p, top}, {top, tr.r}}; break;
                case GameAta::Dir0: b.delta[q][sym] = {{tr.p, top}}; break;
                default: b.delta[q][sym] = {{top, tr.p}}; break;
            }
        }
    for (const Symbol& sym : a.alphabet) b.delta[top][sym] = {{top, top}};
    return b;
}

// --- preimage under hash projection ---------------------------------------

Nta preimage_hash(const Nta& a) {
    a.validate();
    if (a.alphabet.count(kHash)) throw Error("preimage_hash: '#' already in the alphabet");

    int n = a.size();
    auto [lo, hi] = a.index();
    // Smallest even rank in [lo, hi]; falls back to lo for a pure-odd range
    // (such an automaton accepts nothing, and so does its preimage).
    int even_rank = (lo % 2 == 0) ? lo : (lo < hi ? lo + 1 : lo);

    std::vector<bool> qb(n);
    for (int q = 0; q < n; ++q) qb[q] = nta_membership(a.with_initial(q), RegularTree::blank());

    Nta b;
    b.name = a.name + "_hash";
    b.alphabet = a.alphabet;
    b.alphabet.insert(kHash);
    b.initial = a.initial;
    // carriers [0,n), landers [n,2n), riders [2n,3n), spine, blank checker
    b.states = a.states;
    for (int q = 0; q < n; ++q) b.states.push_back(a.states[q] + "^land");
    for (int q = 0; q < n; ++q) b.states.push_back(a.states[q] + "^ride");
    b.states.push_back("_spine");
    b.states.push_back("_blankchk");
    int land = n, ride = 2 * n, spine = 3 * n, blankchk = 3 * n + 1;

    b.rank = a.rank;
    b.rank.insert(b.rank.end(), a.rank.begin(), a.rank.end()); // landers
    for (int q = 0; q < n; ++q)
        b.rank.push_back((a.rank[q] % 2 == 0 && !qb[q]) ? a.rank[q] + 1 : a.rank[q]);
    b.rank.push_back(even_rank); // spine
    b.rank.push_back(even_rank); // blank checker

    b.delta.resize(b.size());
    for (int q = 0; q < n; ++q) {
        for (const auto& [sym, pairs] : a.delta[q]) {
            b.delta[q][sym] = pairs;        // carrier
            b.delta[land + q][sym] = pairs; // lander
        }
        // Crossing a '#': ride on (the chain continues) or land (it ends at
        // this node); the non-carried child must be genuinely blank. When the
        // whole chain collapses to the blank tree and q accepts it, descend
        // into the spine gadget instead.
        std::vector<StatePair> cross = {{ride + q, blankchk},
                                        {blankchk, ride + q},
                                        {land + q, blankchk},
                                        {blankchk, land + q}};
        if (qb[q]) {
            cross.push_back({spine, blankchk});
            cross.push_back({blankchk, spine});
            cross.push_back({blankchk, blankchk});
        }
        b.delta[q][kHash] = cross;
        b.delta[ride + q][kHash] = cross;
    }
    b.delta[spine][kHash] = {{spine, blankchk}, {blankchk, spine}, {blankchk, blankchk}};
    b.delta[blankchk][kBlank] = {{blankchk, blankchk}};
    return b;
}

// --- products, unions, helpers --------------------------------------------

Nta intersect_with_safety(const Nta& a, const Nta& safety) {
    a.validate();
    safety.validate();
    auto [slo, shi] = safety.index();
    if (slo != shi || slo % 2 != 0)
        throw Error("intersect_with_safety: second automaton must have a single even rank");

    Nta p;
    p.name = a.name + "*" + safety.name;
    p.alphabet = a.alphabet;
    p.alphabet.insert(safety.alphabet.begin(), safety.alphabet.end());

    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> work;
    auto get = [&](int qa, int qs) {
        auto it = id.find({qa, qs});
        if (it != id.end()) return it->second;
        int i = static_cast<int>(p.states.size());
        p.states.push_back(a.states[qa] + "&" + safety.states[qs]);
        p.rank.push_back(a.rank[qa]);
        p.delta.emplace_back();
        id[{qa, qs}] = i;
        work.push_back({qa, qs});
        return i;
    };
    p.initial = get(a.initial, safety.initial);
    while (!work.empty()) {
        auto [qa, qs] = work.front();
        work.pop_front();
        int i = id.at({qa, qs});
        for (const Symbol& sym : p.alphabet) {
            std::vector<StatePair> pairs;
            for (const auto& [a0, a1] : a.moves(qa, sym))
                for (const auto& [s0, s1] : safety.moves(qs, sym))
                    pairs.push_back({get(a0, s0), get(a1, s1)});
            if (!pairs.empty()) p.delta[i][sym] = pairs;
        }
    }
    return p;
}

Nta nta_union(const Nta& a, const Nta& b) {
    a.validate();
    b.validate();
    Nta u;
    u.name = a.name + "+" + b.name;
    u.alphabet = a.alphabet;
    u.alphabet.insert(b.alphabet.begin(), b.alphabet.end());
    u.states.push_back("_either");
    u.rank.push_back(0);
    u.delta.emplace_back();
    int offa = 1, offb = 1 + a.size();
    for (int q = 0; q < a.size(); ++q) {
        u.states.push_back("l:" + a.states[q]);
        u.rank.push_back(a.rank[q]);
        u.delta.emplace_back();
        for (const auto& [sym, pairs] : a.delta[q])
            for (const auto& [x, y] : pairs) u.delta[offa + q][sym].push_back({offa + x, offa + y});
    }
    for (int q = 0; q < b.size(); ++q) {
        u.states.push_back("r:" + b.states[q]);
        u.rank.push_back(b.rank[q]);
        u.delta.emplace_back();
        for (const auto& [sym, pairs] : b.delta[q])
            for (const auto& [x, y] : pairs) u.delta[offb + q][sym].push_back({offb + x, offb + y});
    }
    for (const auto& [sym, pairs] : u.delta[offa + a.initial])
        for (const auto& pr : pairs) u.delta[0][sym].push_back(pr);
    for (const auto& [sym, pairs] : u.delta[offb + b.initial])
        for (const auto& pr : pairs) u.delta[0][sym].push_back(pr);
    u.initial = 0;
    return u;
}

Nta undefined_projection_nta(const std::set<Symbol>& alphabet) {
    if (!alphabet.count(kHash)) throw Error("undefined_projection_nta: alphabet must contain '#'");
    Nta a;
    a.name = "undef_proj";
    a.alphabet = alphabet;
    a.alphabet.insert(kBlank);
    a.states = {"seek", "nonblank", "any"};
    a.rank = {1, 0, 0};
    a.initial = 0;
    a.delta.resize(3);
    for (const Symbol& sym : a.alphabet) {
        a.delta[2][sym] = {{2, 2}};
        if (sym == kBlank) continue;
        a.delta[0][sym] = {{0, 2}, {2, 0}};
        if (sym == kHash) a.delta[0][sym].push_back({1, 1});
        a.delta[1][sym] = {{2, 2}};
    }
    return a;
}

Nta exact_trees_nta(const std::string& name, const std::vector<RegularTree>& trees) {
    if (trees.empty()) throw Error("exact_trees_nta: need at least one tree");
    Nta a;
    a.name = name;
    a.alphabet.insert(kBlank);
    a.states.push_back("q0");
    a.rank.push_back(0);
    a.delta.emplace_back();
    for (size_t i = 0; i < trees.size(); ++i) {
        const RegularTree& t = trees[i];
        if (!is_finite_tree(t)) throw Error("exact_trees_nta: trees must be finite");
        for (const Symbol& s : t.labels_used()) a.alphabet.insert(s);
        int off = a.size();
        for (int n = 0; n < t.size(); ++n) {
            a.states.push_back("t" + std::to_string(i) + "n" + std::to_string(n));
            a.rank.push_back(0);
            a.delta.emplace_back();
        }
        for (int n = 0; n < t.size(); ++n)
            a.delta[off + n][t.label(n)] = {{off + t.left(n), off + t.right(n)}};
        a.delta[0][t.label(t.root())].push_back({off + t.left(t.root()), off + t.right(t.root())});
    }
    return a;
}

// --- the plays of an arena, as a safety automaton --------------------------

Nta play_language_nta(const TreeGame& g) {
    g.validate();
    Nta a;
    a.name = g.name + "_plays";
    a.initial = g.initial;
    a.alphabet.insert(kBlank);
    for (const auto& v : g.verts) a.alphabet.insert(v.label);
    for (const auto& v : g.verts) {
        a.states.push_back(v.name);
        a.rank.push_back(0);
        a.delta.emplace_back();
    }
    int sink = a.size();
    a.states.push_back("_sink");
    a.rank.push_back(0);
    a.delta.emplace_back();
    a.delta[sink][kBlank] = {{sink, sink}};
    for (int v = 0; v < g.size(); ++v) {
        const auto& vert = g.verts[v];
        if (vert.owner == TreeGame::kBranching) {
            a.delta[v][vert.label] = {{vert.succ[0], vert.succ[1]}};
        } else {
            a.delta[v][vert.label] = {{vert.succ[0], sink}, {sink, vert.succ[1]}};
        }
    }
    return a;
}

} // namespace tg
