#ifndef TREEGAMES_GAME_HPP
#define TREEGAMES_GAME_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "treegames/automata.hpp"
#include "treegames/parity.hpp"
#include "treegames/tree.hpp"

namespace tg {

// Arena with Player-0, Player-1 and branching vertices. '#'-labelled vertices
// must belong to a player whenever the objective goes through the hash
// projection. The objective is carried loosely: an SDTT, an (L, co-L) pair of
// automaton names resolved by the caller, or nothing for generated arenas.
struct TreeGame {
    static constexpr int kBranching = 2;

    struct Vertex {
        std::string name;
        Symbol label;
        int owner = 0; // 0, 1 or kBranching
        int succ[2] = {0, 0};
    };

    std::string name;
    std::vector<Vertex> verts;
    int initial = 0;

    std::optional<Sdtt> objective_sdtt;
    std::optional<Nta> objective_nta;
    std::optional<Nta> objective_conta;

    int size() const { return static_cast<int>(verts.size()); }
    void validate() const;
    std::set<Symbol> play_alphabet() const;
};

// Finite transducer describing a deterministic strategy: a direction at every
// owned vertex, memory advanced along every traversed edge.
struct FiniteMemoryStrategy {
    int player = 0;
    int memsize = 1;
    int initial_memory = 0;
    std::vector<std::string> memory_names;
    // move[m][v]: direction at owned vertex v with memory m
    std::vector<std::vector<int>> move;
    // update[m][v][d]: next memory after traversing edge d at vertex v
    std::vector<std::vector<std::array<int, 2>>> update;

    void validate(const TreeGame& g) const;
    static FiniteMemoryStrategy uniform(const TreeGame& g, int player, int dir);
};

// --- plays and strategy trees ----------------------------------------------

// The unfolding: regular tree over vertex names.
RegularTree unfolding(const TreeGame& g);

// Play generated by fixing one direction per vertex (both players at once);
// handy for sampling the plays of single-player arenas.
RegularTree positional_play(const TreeGame& g, const std::vector<int>& choice);

// Restriction of the unfolding keeping only the strategy's chosen child at
// the owner's vertices; everything else fully branching.
RegularTree strategy_tree(const TreeGame& g, const FiniteMemoryStrategy& s);

// The unique play under both strategies, relabelled through the arena labels.
RegularTree play(const TreeGame& g, const FiniteMemoryStrategy& s0,
                 const FiniteMemoryStrategy& s1);

// --- the reduction to parity games -----------------------------------------

// States whose language contains the blank tree.
std::set<int> compute_Qb(const Sdtt& d);

struct Reduction {
    ParityGame h;
    // product key per vertex: (game vertex, transducer state, flag)
    // flag: 0, 1, or 2 meaning '?'
    std::vector<std::array<int, 3>> key;
    int max_rank = 0;
    std::set<int> qb;
};

static constexpr int kFlagUndecided = 2;

// The product parity game over G.V x D.Q x {0,1,?}, restricted to reachable
// positions. At a player vertex the mover picks a direction and the abandoned
// branch is scored against Q_b from the side of whoever owns the induced
// acceptance-game position; the flag freezes the winner once decided.
Reduction reduce_to_parity(const TreeGame& g, const Sdtt& d);

struct GameVerdict {
    int winner = 0;
    FiniteMemoryStrategy strategy;
    int h_vertices = 0;
};

// Solves the reduction and extracts a finite-memory strategy for the winner
// (memory: transducer state x flag).
GameVerdict solve_game_automaton_objective(const TreeGame& g, const Sdtt& d);

// --- strategy checking through the strategy-set automaton ------------------

// The automaton over G.V + blank accepting exactly the strategy trees that
// are NOT winning against b, where b recognises the complement of the winning
// set for owner 0 (the winning set itself for owner 1).
Nta strategy_set_nta(const TreeGame& g, const Nta& b, int owner);

// True iff the strategy is winning; throws InvalidStrategy on a malformed
// strategy tree (reported distinctly from "not winning").
bool check_strategy(const TreeGame& g, const FiniteMemoryStrategy& s, const Nta& b);

// Structural validation used by check_strategy: restriction of the unfolding,
// redundant at the owner's vertices, fully branching elsewhere.
void validate_strategy_tree(const TreeGame& g, const RegularTree& t, int player);

// --- bounded determinacy decision ------------------------------------------

struct DeterminacyResult {
    enum Kind { Player0, Player1, Undetermined } kind = Undetermined;
    std::optional<FiniteMemoryStrategy> strategy;
    int depth = 0;
    int candidates0 = 0;
    int candidates1 = 0;
};

// Enumerates strategies that depend on the first `depth` unfolding levels
// (direction 0 below) for both players in turn; checks each with
// check_strategy. l and col must be complementary over the play alphabet and
// are sample-validated first. Candidate checks run in parallel when OpenMP is
// enabled; the reported winner is the first candidate in enumeration order.
DeterminacyResult decide_determinacy(const TreeGame& g, const Nta& l, const Nta& col,
                                     int depth, std::uint64_t guard_seed = 1);

// All strategies of `player` depending on the first `depth` levels.
std::vector<FiniteMemoryStrategy> enumerate_depth_strategies(const TreeGame& g, int player,
                                                             int depth);

// Single-player games. col is required when V0 is empty (inclusion is
// emptiness of plays against the complement).
int solve_single_player(const TreeGame& g, const Nta& l, const std::optional<Nta>& col);

// --- generated arenas and the matching-pennies construction -----------------

// A single-player game whose plays project onto exactly L(a); `a` must be a
// nonempty safety automaton (single even rank). Blank expectations are
// realised as a fresh '#'-labelled self-loop.
TreeGame game_from_safety_nta(const Nta& a);

struct MatchingPennies {
    TreeGame game;
    FiniteMemoryStrategy sigma1, sigma2; // Player 0 producing t1 / t2
    FiniteMemoryStrategy pi3, pi4;       // Player 1 producing t3 / t4
};

// Matching-pennies composite: glues the context game to the two alternative games
// after checking the four membership conditions and pairwise distinctness of
// the trees. The objective is the hash-projection preimage of l.
MatchingPennies matching_pennies_game(const Context& c, const RegularTree& t1,
                                      const RegularTree& t2, const RegularTree& t3,
                                      const RegularTree& t4, const Nta& l);

// Lifts an (L, co-L) pair over Gamma to the play level of '#'-labelled games:
// (preimage of l, preimage of col joined with the undefined-projection trees).
std::pair<Nta, Nta> lift_objective_pair(const Nta& l, const Nta& col);

// The winning set of a transducer objective (or its complement) at the play
// level: the independent chain dual -> game automaton -> nondeterministic
// automaton -> projection preimage.
Nta play_level_objective(const Sdtt& d, bool complement);

} // namespace tg

#endif
