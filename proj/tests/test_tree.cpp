#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treegames/fixtures.hpp"
#include "treegames/random.hpp"
#include "treegames/tree.hpp"

using namespace tg;
using fixtures::a_leaf;
using fixtures::b_leaf;
using fixtures::c_pair;

namespace {

// Hash chain of the given length ending in the given subtree, blank sides.
RegularTree hash_chain(int len, const RegularTree& end) {
    RegularTree t = end;
    for (int i = 0; i < len; ++i) t = RegularTree::pair(kHash, t, RegularTree::blank());
    return t;
}

RegularTree hash_self_loop() {
    return RegularTree::make({{kHash, 0, 1}, {kBlank, 1, 1}}, 0);
}

} // namespace

TEST_CASE("label_at follows addresses through the blank sink") {
    CHECK(label_at(RegularTree::blank(), "0110") == kBlank);
    CHECK(label_at(a_leaf(), "") == "a");
    CHECK(label_at(a_leaf(), "0") == kBlank);
    CHECK(label_at(a_leaf(), "0101") == kBlank);
}

TEST_CASE("subtree picks the denoted sub-tree") {
    RegularTree t = c_pair(a_leaf(), b_leaf());
    CHECK(tree_equal(subtree(t, "1"), b_leaf()));
    CHECK(tree_equal(subtree(t, ""), t));
    CHECK(tree_equal(subtree(RegularTree::blank(), "01"), RegularTree::blank()));
}

TEST_CASE("replace grafts below the given address") {
    RegularTree t = c_pair(a_leaf(), a_leaf());
    CHECK(tree_equal(replace(t, "1", b_leaf()), c_pair(a_leaf(), b_leaf())));
    CHECK(tree_equal(replace(t, "0", subtree(t, "0")), t));
    CHECK_THROWS_AS(replace(RegularTree::blank(), "0", a_leaf()), Error);
    // Replacing below a blank node with blank is the identity.
    CHECK(tree_equal(replace(RegularTree::blank(), "0", RegularTree::blank()),
                     RegularTree::blank()));
}

TEST_CASE("replace and subtree satisfy their algebraic laws") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        RegularTree t = random_regular_tree(rng, {"a", "b", "c"}, 6);
        RegularTree s = random_regular_tree(rng, {"a", "b"}, 4);
        Address u;
        for (int k = rng.below(3); k > 0; --k) u += static_cast<char>('0' + rng.below(2));
        bool blank_above = false;
        RegularTree probe = t;
        for (size_t k = 0; k < u.size(); ++k)
            if (label_at(t, u.substr(0, k)) == kBlank) blank_above = true;
        if (blank_above) continue;
        CHECK(tree_equal(subtree(replace(t, u, s), u), s));
        (void)probe;
    }
}

TEST_CASE("graft fills both holes of a context") {
    Context c = make_context(RegularTree::leaf("c"), "");
    CHECK(tree_equal(graft(c, a_leaf(), a_leaf()), c_pair(a_leaf(), a_leaf())));
    CHECK(tree_equal(graft(c, a_leaf(), b_leaf()), c_pair(a_leaf(), b_leaf())));
    // Same as two replacements.
    CHECK(tree_equal(graft(c, b_leaf(), a_leaf()),
                     replace(replace(c.tree, "0", b_leaf()), "1", a_leaf())));
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(make_context(RegularTree::blank(), ""), Error);
    CHECK_THROWS_AS(make_context(c_pair(a_leaf(), b_leaf()), ""), Error);
    CHECK_NOTHROW(make_context(c_pair(a_leaf(), b_leaf()), "0"));
}

TEST_CASE("classify_node") {
    CHECK(classify_node(c_pair(a_leaf(), b_leaf()), "") == NodeClass::FullyBranching);
    CHECK(classify_node(a_leaf(), "") == NodeClass::Dead);
    CHECK(classify_node(hash_chain(1, a_leaf()), "") == NodeClass::Redundant);
    CHECK(classify_node(a_leaf(), "0") == NodeClass::Blank);
}

TEST_CASE("maximal hash paths") {
    CHECK(maximal_hash_paths(c_pair(a_leaf(), b_leaf())).empty());

    auto one = maximal_hash_paths(hash_chain(1, a_leaf()));
    REQUIRE(one.size() == 1);
    CHECK(one[0].nodes.size() == 1);
    CHECK_FALSE(one[0].looping);

    auto loop = maximal_hash_paths(hash_self_loop());
    REQUIRE(loop.size() == 1);
    CHECK(loop[0].looping);

    // A fully branching '#' node belongs to no path.
    RegularTree fb = RegularTree::pair(kHash, a_leaf(), b_leaf());
    CHECK(maximal_hash_paths(fb).empty());
}

TEST_CASE("partial hash reduction collapses one maximal path") {
    RegularTree t = hash_chain(1, a_leaf());
    auto ps = maximal_hash_paths(t);
    REQUIRE(ps.size() == 1);
    CHECK(tree_equal(partial_hash_reduction(t, ps[0]), a_leaf()));

    RegularTree loop = hash_self_loop();
    auto lp = maximal_hash_paths(loop);
    REQUIRE(lp.size() == 1);
    CHECK(tree_equal(partial_hash_reduction(loop, lp[0]), RegularTree::blank()));

    RegularTree dead = RegularTree::leaf(kHash);
    auto dp = maximal_hash_paths(dead);
    REQUIRE(dp.size() == 1);
    CHECK(tree_equal(partial_hash_reduction(dead, dp[0]), RegularTree::blank()));

    CHECK_THROWS_AS(partial_hash_reduction(a_leaf(), ps[0]), Error);
}

TEST_CASE("hash projection") {
    // Chains over redundant nodes plus an infinite chain: both collapse.
    RegularTree b = RegularTree::pair("a", hash_chain(2, b_leaf()), hash_self_loop());
    auto proj = hash_projection(b);
    REQUIRE(proj.has_value());
    CHECK(tree_equal(*proj, RegularTree::pair("a", b_leaf(), RegularTree::blank())));

    CHECK_FALSE(hash_projection(RegularTree::pair(kHash, a_leaf(), b_leaf())).has_value());
    // Buried fully branching '#' node.
    RegularTree buried = RegularTree::pair("a", RegularTree::pair(kHash, a_leaf(), b_leaf()),
                                           RegularTree::blank());
    CHECK_FALSE(hash_projection(buried).has_value());

    RegularTree plain = c_pair(a_leaf(), b_leaf());
    CHECK(tree_equal(*hash_projection(plain), plain));

    // Idempotent on its image, and the image carries no '#'.
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        RegularTree t = random_regular_tree(rng, {"a", "b", kHash}, 8);
        auto p = hash_projection(t);
        if (!p) continue;
        for (const Symbol& s : p->labels_used()) CHECK(s != kHash);
        CHECK(tree_equal(*hash_projection(*p), *p));
    }
}

TEST_CASE("hash injection maps projection addresses to originals") {
    HashInjection id_map(c_pair(a_leaf(), b_leaf()));
    CHECK(id_map.map("") == Address(""));
    CHECK(id_map.map("0") == Address("0"));

    HashInjection one(hash_chain(1, a_leaf()));
    CHECK(one.map("") == Address("0"));

    Rng rng(6);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 120; ++i) {
        RegularTree t = random_regular_tree(rng, {"a", "b", kHash}, 8);
        auto p = hash_projection(t);
        if (!p) continue;
        HashInjection inj(t);
        for (const Address& u : {Address(""), Address("0"), Address("1"), Address("01"),
                                 Address("10"), Address("110")}) {
            if (label_at(*p, u) == kBlank) continue;
            auto mapped = inj.map(u);
            REQUIRE(mapped.has_value());
            CHECK(label_at(t, *mapped) == label_at(*p, u));
            checked++;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("strong confluence on sampled finite trees") {
    Rng rng(7);
    int done = 0;
    while (done < 60) {
        RegularTree t = random_finite_tree(rng, {"a", kHash, kHash}, 4);
        auto ps = maximal_hash_paths(t);
        if (ps.empty() || ps.size() > 4) continue;
        done++;
        std::vector<RegularTree> nfs;
        auto explore = [&](auto&& self, const RegularTree& cur) -> void {
            auto cps = maximal_hash_paths(cur);
            if (cps.empty()) {
                nfs.push_back(cur);
                return;
            }
            for (const auto& p : cps) self(self, partial_hash_reduction(cur, p));
        };
        explore(explore, t);
        for (size_t i = 1; i < nfs.size(); ++i) CHECK(tree_equal(nfs[0], nfs[i]));
    }
}

TEST_CASE("bisimulation equality agrees with bounded unfolding") {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        RegularTree a = random_regular_tree(rng, {"a", "b"}, 3);
        RegularTree b = random_regular_tree(rng, {"a", "b"}, 3);
        int depth = a.size() * b.size() + 1;
        bool bounded = unfold_to_depth(a, depth) == unfold_to_depth(b, depth);
        CHECK(tree_equal(a, b) == bounded);
    }
}

TEST_CASE("finite trees and depth") {
    CHECK(is_finite_tree(a_leaf()));
    CHECK(finite_depth(a_leaf()) == 0);
    CHECK(finite_depth(c_pair(a_leaf(), b_leaf())) == 1);
    RegularTree inf = RegularTree::make({{"a", 0, 1}, {kBlank, 1, 1}}, 0);
    CHECK_FALSE(is_finite_tree(inf));
    CHECK(is_finite_tree(RegularTree::blank()));
}

TEST_CASE("blank closure is canonical") {
    // A blank node with declared non-blank children is cut at construction.
    RegularTree t = RegularTree::make({{kBlank, 1, 1}, {"a", 0, 0}}, 0);
    CHECK(tree_equal(t, RegularTree::blank()));
    CHECK(t.size() == 1);
}
