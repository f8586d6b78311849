// Command-line front end: parses the text formats, dispatches to the library
// constructions and prints both human-readable and machine-readable results.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "treegames/fixtures.hpp"
#include "treegames/suite.hpp"
#include "treegames/text.hpp"

namespace {

using namespace tg;

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

Workspace load_all(const std::vector<std::string>& inputs) {
    Workspace ws;
    for (const std::string& path : inputs) load_file(ws, path);
    return ws;
}

int cmd_solve(const Workspace& ws, const std::string& game) {
    const TreeGame& g = ws.tgame(game);
    if (!g.objective_sdtt) {
        std::cerr << "solve: game '" << game << "' has no transducer objective\n";
        return 2;
    }
    GameVerdict v = solve_game_automaton_objective(g, *g.objective_sdtt);
    bool certified = check_strategy(g, v.strategy, play_level_objective(*g.objective_sdtt, v.winner == 0));
    std::cout << "winner=" << v.winner << "\n";
    std::cout << "h_vertices=" << v.h_vertices << "\n";
    std::cout << "certified=" << (certified ? "true" : "false") << "\n";
    std::cout << emit_strategy(v.strategy, g, game + "_winner");
    return v.winner;
}

int cmd_check(const Workspace& ws, const std::string& game, const std::string& strat,
              const std::string& nta) {
    const TreeGame& g = ws.tgame(game);
    FiniteMemoryStrategy s = bind_strategy(ws.strategy(strat), g);
    const Nta& b = ws.nta(nta);
    Nta bsigma = strategy_set_nta(g, b, s.player);
    bool winning = check_strategy(g, s, b);
    std::cout << (winning ? "winning" : "not-winning") << "\n";
    std::cout << "bsigma_states=" << bsigma.size() << "\n";
    return winning ? 0 : 1;
}

int cmd_decide(const Workspace& ws, const std::string& game, const std::string& lname,
               const std::string& colname, int depth, std::uint64_t seed) {
    const TreeGame& g = ws.tgame(game);
    auto t0 = std::chrono::steady_clock::now();
    DeterminacyResult res = decide_determinacy(g, ws.nta(lname), ws.nta(colname), depth, seed);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << "candidates0=" << res.candidates0 << " candidates1=" << res.candidates1 << "\n";
    std::cerr << "elapsed_ms=" << ms << "\n";
    switch (res.kind) {
        case DeterminacyResult::Player0:
            std::cout << "result=Player0\n" << emit_strategy(*res.strategy, g, game + "_p0");
            return 0;
        case DeterminacyResult::Player1:
            std::cout << "result=Player1\n" << emit_strategy(*res.strategy, g, game + "_p1");
            return 1;
        default:
            std::cout << "result=undetermined-up-to-" << depth << "\n";
            return 4;
    }
}

int cmd_member(const Workspace& ws, const std::string& nta, const std::string& tree) {
    bool m = nta_membership(ws.nta(nta), ws.tree(tree));
    std::cout << (m ? "member" : "not-member") << "\n";
    return m ? 0 : 1;
}

int cmd_empty(const Workspace& ws, const std::string& nta, const std::string& outpath) {
    Emptiness e = nta_emptiness(ws.nta(nta));
    if (e.empty) {
        std::cout << "empty\n";
        return 1;
    }
    std::cout << "nonempty\n";
    write_out(outpath, emit_tree(*e.witness, nta + "_witness"));
    return 0;
}

int cmd_pgsolve(const Workspace& ws, const std::string& pg) {
    const ParityGame& g = ws.pgame(pg);
    Solution sol = solve(g);
    for (int v = 0; v < g.size(); ++v) {
        std::cout << g.verts[v].name << " winner=" << sol.winner_of[v];
        const auto& strat = g.verts[v].owner == 0 ? sol.strategy0 : sol.strategy1;
        if (strat[v]) std::cout << " move=" << *strat[v];
        std::cout << "\n";
    }
    std::cout << "initial_winner=" << sol.winner_of[g.initial] << "\n";
    return 0;
}

int cmd_construct(const Workspace& ws, const std::string& which,
                  const std::vector<std::string>& args, const std::string& outpath) {
    if (which == "lemma1") {
        if (args.size() != 1) throw Error("construct lemma1: expected <nta>");
        write_out(outpath, emit_tgame(game_from_safety_nta(ws.nta(args[0]))));
    } else if (which == "mp") {
        MatchingPennies mp =
            args.empty()
                ? matching_pennies_game(fixtures::mp_context(), fixtures::mp_t1(),
                                        fixtures::mp_t2(), fixtures::mp_t3(), fixtures::mp_t4(),
                                        fixtures::l_eq_nta())
                : [&] {
                      if (args.size() != 7)
                          throw Error("construct mp: expected <ctx-tree> <hole> <t1> <t2> <t3> <t4> <l-nta>");
                      Context c = make_context(ws.tree(args[0]), args[1] == "e" ? "" : args[1]);
                      return matching_pennies_game(c, ws.tree(args[2]), ws.tree(args[3]),
                                                   ws.tree(args[4]), ws.tree(args[5]),
                                                   ws.nta(args[6]));
                  }();
        // Emitted files are self-contained: the objective automaton the game
        // references comes first.
        std::string text;
        if (mp.game.objective_nta) text += emit_nta(*mp.game.objective_nta);
        if (mp.game.objective_conta) text += emit_nta(*mp.game.objective_conta);
        text += emit_tgame(mp.game);
        text += emit_strategy(mp.sigma1, mp.game, "sigma1");
        text += emit_strategy(mp.sigma2, mp.game, "sigma2");
        text += emit_strategy(mp.pi3, mp.game, "pi3");
        text += emit_strategy(mp.pi4, mp.game, "pi4");
        write_out(outpath, text);
    } else if (which == "preimage") {
        if (args.size() != 1) throw Error("construct preimage: expected <nta>");
        write_out(outpath, emit_nta(preimage_hash(ws.nta(args[0]))));
    } else if (which == "dual") {
        if (args.size() != 1) throw Error("construct dual: expected <sdtt>");
        write_out(outpath, emit_sdtt(dualize_sdtt(ws.sdtt(args[0]))));
    } else if (which == "to-gameata") {
        if (args.size() != 1) throw Error("construct to-gameata: expected <sdtt>");
        write_out(outpath, emit_ata(sdtt_to_game_ata(ws.sdtt(args[0])).to_ata()));
    } else if (which == "to-nta") {
        if (args.size() != 1) throw Error("construct to-nta: expected <ata>");
        write_out(outpath, emit_nta(game_ata_to_nta(GameAta::from_ata(ws.ata(args[0])))));
    } else if (which == "reduce") {
        if (args.size() != 1) throw Error("construct reduce: expected <tgame>");
        const TreeGame& g = ws.tgame(args[0]);
        if (!g.objective_sdtt) throw Error("construct reduce: game has no transducer objective");
        write_out(outpath, emit_pg(reduce_to_parity(g, *g.objective_sdtt).h));
    } else if (which == "playlang") {
        if (args.size() != 1) throw Error("construct playlang: expected <tgame>");
        write_out(outpath, emit_nta(play_language_nta(ws.tgame(args[0]))));
    } else {
        throw Error("construct: unknown construction '" + which + "'");
    }
    return 0;
}

int cmd_suite(std::uint64_t seed, const std::string& csvpath) {
    auto results = run_acceptance_suites(seed);
    std::cout << render_report(results);
    for (const SuiteResult& r : results)
        std::cerr << "suite " << r.id << " elapsed_ms=" << r.millis << "\n";
    if (!csvpath.empty()) write_out(csvpath, render_csv(results));
    for (const SuiteResult& r : results)
        if (!r.pass) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree games with regular objectives: solving, checking, deciding"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string outpath, csvpath;
    std::uint64_t seed = tg::kDefaultSuiteSeed;
    int depth = 3;

    app.add_option("--in", inputs, "input file (repeatable, any of the text formats)")
        ->type_size(1)
        ->allow_extra_args(false);
    app.add_option("--out", outpath, "output file (default stdout)");
    app.add_option("--seed", seed, "seed for the randomized parts");
    app.add_option("--depth", depth, "strategy enumeration depth");

    std::string game, strat, nta, tree, pg, lname, colname, which;
    std::vector<std::string> cargs;

    auto* solve = app.add_subcommand("solve", "solve a game with a transducer objective");
    solve->add_option("game", game)->required();
    auto* check = app.add_subcommand("check", "check a finite-memory strategy");
    check->add_option("game", game)->required();
    check->add_option("strategy", strat)->required();
    check->add_option("nta", nta)->required();
    auto* decide = app.add_subcommand("decide", "bounded determinacy decision");
    decide->add_option("game", game)->required();
    decide->add_option("l", lname)->required();
    decide->add_option("col", colname)->required();
    auto* member = app.add_subcommand("member", "tree membership in an automaton");
    member->add_option("nta", nta)->required();
    member->add_option("tree", tree)->required();
    auto* empty = app.add_subcommand("empty", "emptiness with witness extraction");
    empty->add_option("nta", nta)->required();
    auto* pgsolve = app.add_subcommand("pgsolve", "solve a parity game");
    pgsolve->add_option("pg", pg)->required();
    auto* construct = app.add_subcommand("construct", "run a construction and emit the result");
    construct->add_option("which", which)->required();
    construct->add_option("args", cargs);
    auto* suite = app.add_subcommand("suite", "run the reproduction suites");
    suite->add_option("--csv", csvpath, "write per-suite statistics as CSV");

    for (auto* sc : {solve, check, decide, member, empty, pgsolve, construct, suite})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        tg::Workspace ws = load_all(inputs);
        if (solve->parsed()) return cmd_solve(ws, game);
        if (check->parsed()) return cmd_check(ws, game, strat, nta);
        if (decide->parsed()) return cmd_decide(ws, game, lname, colname, depth, seed);
        if (member->parsed()) return cmd_member(ws, nta, tree);
        if (empty->parsed()) return cmd_empty(ws, nta, outpath);
        if (pgsolve->parsed()) return cmd_pgsolve(ws, pg);
        if (construct->parsed()) return cmd_construct(ws, which, cargs, outpath);
        if (suite->parsed()) return cmd_suite(seed, csvpath);
    } catch (const tg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const tg::InvalidStrategy& e) {
        std::cerr << "invalid strategy: " << e.what() << "\n";
        return 2;
    } catch (const tg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
