#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treegames/fixtures.hpp"
#include "treegames/random.hpp"
#include "treegames/text.hpp"

using namespace tg;

TEST_CASE("tree files round-trip") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        RegularTree t = random_regular_tree(rng, {"a", "b", kHash}, 7);
        std::string text = emit_tree(t, "t");
        Workspace ws;
        parse_into(ws, text, "mem");
        CHECK(tree_equal(ws.tree("t"), t));
        CHECK(emit_tree(ws.tree("t"), "t") == text);
    }
}

TEST_CASE("parity game files round-trip") {
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        ParityGame g = random_parity_game(rng, 7, 4);
        std::string text = emit_pg(g);
        Workspace ws;
        parse_into(ws, text, "mem");
        CHECK(emit_pg(ws.pgame("random_pg")) == text);
    }
}

TEST_CASE("automata files round-trip") {
    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        Nta a = random_nta(rng, "a", {"a", "b"}, 4, 3);
        std::string text = emit_nta(a);
        Workspace ws;
        parse_into(ws, text, "mem");
        CHECK(emit_nta(ws.nta("a")) == text);
        // Same language on samples.
        for (int k = 0; k < 20; ++k) {
            RegularTree t = random_regular_tree(rng, {"a", "b"}, 5);
            CHECK(nta_membership(ws.nta("a"), t) == nta_membership(a, t));
        }
    }
}

TEST_CASE("transducer files round-trip") {
    Rng rng(9);
    for (int i = 0; i < 30; ++i) {
        Sdtt d = random_sdtt(rng, "d", {"a", "b"}, 4, 2);
        std::string text = emit_sdtt(d);
        Workspace ws;
        parse_into(ws, text, "mem");
        CHECK(emit_sdtt(ws.sdtt("d")) == text);
    }
}

TEST_CASE("alternating automaton files round-trip") {
    Ata a = sdtt_to_game_ata(fixtures::d_safe_a()).to_ata();
    std::string text = emit_ata(a);
    Workspace ws;
    parse_into(ws, text, "mem");
    CHECK(emit_ata(ws.ata(a.name)) == text);
    RegularTree t = RegularTree::pair("a", fixtures::a_leaf(), fixtures::b_leaf());
    CHECK(ata_membership(ws.ata(a.name), t) == ata_membership(a, t));
}

TEST_CASE("tree game files round-trip with objectives") {
    Workspace ws;
    parse_into(ws, emit_sdtt(fixtures::d_safe_a()), "mem");
    TreeGame g = fixtures::fig2_game();
    g.objective_sdtt = fixtures::d_safe_a();
    std::string text = emit_tgame(g);
    parse_into(ws, text, "mem");
    const TreeGame& back = ws.tgame("fig2");
    CHECK(emit_tgame(back) == text);
    REQUIRE(back.objective_sdtt.has_value());
    CHECK(back.objective_sdtt->name == "d_safe_a");
}

TEST_CASE("strategy files round-trip and bind") {
    TreeGame g = fixtures::fig2_game();
    Rng rng(11);
    FiniteMemoryStrategy s = random_strategy(rng, g, 1, 3);
    std::string text = emit_strategy(s, g, "s");
    Workspace ws;
    parse_into(ws, text, "mem");
    FiniteMemoryStrategy back = bind_strategy(ws.strategy("s"), g);
    CHECK(back.player == 1);
    CHECK(back.memsize == 3);
    CHECK(tree_equal(strategy_tree(g, back), strategy_tree(g, s)));
    CHECK(emit_strategy(back, g, "s") == text);
}

TEST_CASE("parse errors carry line numbers") {
    Workspace ws;
    CHECK_THROWS_AS(parse_into(ws, "bogus header\n", "f"), ParseError);
    try {
        parse_into(ws, "tree t\nnode x label=a left=y right=y\n", "f");
        FAIL("expected a parse error for the undefined node");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("referenced but never defined") != std::string::npos);
    }
    try {
        parse_into(ws, "pg g\npvertex v owner=2x rank=0 succ=v,v init\n", "f");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    Workspace ws;
    parse_into(ws, "% header comment\n\ntree t\nnode n0 label=a left=n1 right=n1 % leaf\nnode n1 label=_ left=n1 right=n1\n", "f");
    CHECK(tree_equal(ws.tree("t"), fixtures::a_leaf()));
}
