#include "treegames/fixtures.hpp"

namespace tg::fixtures {

RegularTree a_leaf() { return RegularTree::leaf("a"); }
RegularTree b_leaf() { return RegularTree::leaf("b"); }

RegularTree c_pair(const RegularTree& x, const RegularTree& y) {
    return RegularTree::pair("c", x, y);
}

TreeGame fig2_game() {
    TreeGame g;
    g.name = "fig2";
    // 0, 1: Player-1 '#' vertices; a, b: branching letter vertices.
    g.verts = {
        {"0", kHash, 1, {2, 3}},
        {"1", kHash, 1, {2, 3}},
        {"a", "a", TreeGame::kBranching, {0, 1}},
        {"b", "b", TreeGame::kBranching, {0, 1}},
    };
    g.initial = 0;
    return g;
}

Sdtt d_safe_a() {
    Sdtt d;
    d.name = "d_safe_a";
    d.alphabet = {"a", "b", kBlank};
    d.states = {"ok", "bad"};
    d.initial = 0;
    d.rank = {0, 1};
    d.delta.resize(2);
    d.owner.resize(2);
    for (const Symbol& s : d.alphabet) {
        d.delta[0][s] = (s == "b") ? StatePair{1, 1} : StatePair{0, 0};
        d.delta[1][s] = {1, 1};
        d.owner[0][s] = 1;
        d.owner[1][s] = 1;
    }
    return d;
}

namespace {

Nta one_state_nta(const std::string& name, const std::set<Symbol>& alphabet, int rank) {
    Nta a;
    a.name = name;
    a.alphabet = alphabet;
    a.alphabet.insert(kBlank);
    a.states = {"q"};
    a.initial = 0;
    a.rank = {rank};
    a.delta.resize(1);
    for (const Symbol& s : a.alphabet) a.delta[0][s] = {{0, 0}};
    return a;
}

} // namespace

Nta all_nta(const std::set<Symbol>& alphabet) { return one_state_nta("all", alphabet, 0); }
Nta empty_nta(const std::set<Symbol>& alphabet) { return one_state_nta("empty", alphabet, 1); }

Sdtt accept_all_sdtt(const std::set<Symbol>& alphabet) {
    Sdtt d;
    d.name = "accept_all";
    d.alphabet = alphabet;
    d.alphabet.insert(kBlank);
    d.states = {"q"};
    d.initial = 0;
    d.rank = {0};
    d.delta.resize(1);
    d.owner.resize(1);
    for (const Symbol& s : d.alphabet) {
        d.delta[0][s] = {0, 0};
        d.owner[0][s] = 1;
    }
    return d;
}

Context mp_context() {
    return make_context(RegularTree::leaf("c"), "");
}

RegularTree mp_t1() { return a_leaf(); }
RegularTree mp_t2() { return b_leaf(); }
RegularTree mp_t3() { return RegularTree::pair("a", a_leaf(), RegularTree::blank()); }
RegularTree mp_t4() { return RegularTree::pair("b", b_leaf(), RegularTree::blank()); }

Nta l_eq_nta() {
    Nta a;
    a.name = "l_eq";
    a.alphabet = {"a", "b", "c", kBlank};
    a.states = {"root", "want_a", "want_b", "any"};
    a.initial = 0;
    a.rank = {0, 0, 0, 0};
    a.delta.resize(4);
    a.delta[0]["c"] = {{1, 1}, {2, 2}};
    a.delta[1]["a"] = {{3, 3}};
    a.delta[2]["b"] = {{3, 3}};
    for (const Symbol& s : a.alphabet) a.delta[3][s] = {{3, 3}};
    return a;
}

Nta co_l_eq_nta() {
    Nta a;
    a.name = "co_l_eq";
    a.alphabet = {"a", "b", "c", kBlank};
    a.states = {"root", "is_a", "is_b", "is_c", "is_blank", "any"};
    a.initial = 0;
    a.rank = {0, 0, 0, 0, 0, 0};
    a.delta.resize(6);
    auto root_state = [](const Symbol& s) {
        if (s == "a") return 1;
        if (s == "b") return 2;
        if (s == "c") return 3;
        return 4;
    };
    std::vector<Symbol> letters{"a", "b", "c", kBlank};
    // Root not 'c': everything below is fine.
    for (const Symbol& s : letters)
        if (s != "c") a.delta[0][s] = {{5, 5}};
    // Root 'c': children's root letters must not match in {a, b}.
    for (const Symbol& x : letters)
        for (const Symbol& y : letters) {
            if (x == y && (x == "a" || x == "b")) continue;
            a.delta[0]["c"].push_back({root_state(x), root_state(y)});
        }
    for (const Symbol& s : letters) {
        a.delta[root_state(s)][s] = {{5, 5}};
        a.delta[5][s] = {{5, 5}};
    }
    return a;
}

} // namespace tg::fixtures
