#include "treegames/random.hpp"

#include "treegames/automata.hpp"
#include "treegames/game.hpp"
#include "treegames/parity.hpp"

namespace tg {

RegularTree random_regular_tree(Rng& rng, const std::vector<Symbol>& symbols, int max_nodes) {
    int n = 1 + rng.below(max_nodes);
    std::vector<RegularTree::Node> ns(n + 1);
    int blank = n;
    ns[blank] = {kBlank, blank, blank};
    for (int i = 0; i < n; ++i) {
        ns[i].label = rng.chance(0.12) ? kBlank : rng.pick(symbols);
        ns[i].left = rng.chance(0.15) ? blank : rng.below(n + 1);
        ns[i].right = rng.chance(0.15) ? blank : rng.below(n + 1);
        if (ns[i].label == kHash && rng.chance(0.7)) {
            if (rng.chance(0.5))
                ns[i].left = blank;
            else
                ns[i].right = blank;
        }
    }
    return RegularTree::make(std::move(ns), 0);
}

RegularTree random_finite_tree(Rng& rng, const std::vector<Symbol>& symbols, int max_depth) {
    std::vector<RegularTree::Node> ns;
    ns.push_back({kBlank, 0, 0});
    // Grows a proper tree: fresh node per address.
    auto grow = [&](auto&& self, int depth) -> int {
        if (depth >= max_depth || rng.chance(0.25 + 0.1 * depth)) return 0;
        int id = static_cast<int>(ns.size());
        ns.push_back({rng.pick(symbols), 0, 0});
        int l = self(self, depth + 1);
        int r = self(self, depth + 1);
        ns[id].left = l;
        ns[id].right = r;
        return id;
    };
    int root = grow(grow, 0);
    return RegularTree::make(std::move(ns), root);
}

Nta random_nta(Rng& rng, const std::string& name, const std::vector<Symbol>& symbols,
               int max_states, int max_rank) {
    Nta a;
    a.name = name;
    a.alphabet.insert(kBlank);
    for (const Symbol& s : symbols) a.alphabet.insert(s);
    int n = 1 + rng.below(max_states);
    for (int q = 0; q < n; ++q) {
        a.states.push_back("q" + std::to_string(q));
        a.rank.push_back(rng.below(max_rank + 1));
        a.delta.emplace_back();
    }
    for (int q = 0; q < n; ++q)
        for (const Symbol& sym : a.alphabet) {
            int k = rng.below(4); // 0..3 pairs, empty sets included
            for (int i = 0; i < k; ++i)
                a.delta[q][sym].push_back({rng.below(n), rng.below(n)});
            if (a.delta[q][sym].empty()) a.delta[q].erase(sym);
        }
    return a;
}

Sdtt random_sdtt(Rng& rng, const std::string& name, const std::vector<Symbol>& symbols,
                 int max_states, int max_rank) {
    Sdtt d;
    d.name = name;
    d.alphabet.insert(kBlank);
    for (const Symbol& s : symbols) d.alphabet.insert(s);
    int n = 1 + rng.below(max_states);
    for (int q = 0; q < n; ++q) {
        d.states.push_back("q" + std::to_string(q));
        d.rank.push_back(rng.below(max_rank + 1));
        d.delta.emplace_back();
        d.owner.emplace_back();
    }
    for (int q = 0; q < n; ++q)
        for (const Symbol& sym : d.alphabet) {
            d.delta[q][sym] = {rng.below(n), rng.below(n)};
            d.owner[q][sym] = rng.below(2);
        }
    return d;
}

TreeGame random_tree_game(Rng& rng, const std::string& name, const std::vector<Symbol>& symbols,
                          int max_verts, double hash_prob) {
    TreeGame g;
    g.name = name;
    int n = 1 + rng.below(max_verts);
    for (int v = 0; v < n; ++v) {
        TreeGame::Vertex vert;
        vert.name = "v" + std::to_string(v);
        int o = rng.below(3);
        vert.owner = o == 2 ? TreeGame::kBranching : o;
        if (vert.owner != TreeGame::kBranching && rng.chance(hash_prob))
            vert.label = kHash;
        else
            vert.label = rng.pick(symbols);
        vert.succ[0] = rng.below(n);
        vert.succ[1] = rng.below(n);
        g.verts.push_back(vert);
    }
    g.initial = 0;
    return g;
}

ParityGame random_parity_game(Rng& rng, int max_verts, int max_rank) {
    ParityGame g;
    g.name = "random_pg";
    int n = 1 + rng.below(max_verts);
    for (int v = 0; v < n; ++v) {
        ParityGame::Vertex vert;
        vert.name = "x" + std::to_string(v);
        vert.owner = rng.below(2);
        vert.rank = rng.below(max_rank + 1);
        vert.succ[0] = rng.below(n);
        vert.succ[1] = rng.below(n);
        g.verts.push_back(vert);
    }
    g.initial = 0;
    return g;
}

FiniteMemoryStrategy random_strategy(Rng& rng, const TreeGame& g, int player, int memsize) {
    FiniteMemoryStrategy s;
    s.player = player;
    s.memsize = memsize;
    s.initial_memory = 0;
    for (int m = 0; m < memsize; ++m) s.memory_names.push_back("m" + std::to_string(m));
    s.move.assign(memsize, std::vector<int>(g.size(), 0));
    s.update.assign(memsize, std::vector<std::array<int, 2>>(g.size(), {0, 0}));
    for (int m = 0; m < memsize; ++m)
        for (int v = 0; v < g.size(); ++v) {
            s.move[m][v] = rng.below(2);
            s.update[m][v] = {rng.below(memsize), rng.below(memsize)};
        }
    return s;
}

} // namespace tg
