#ifndef TREEGAMES_AUTOMATA_HPP
#define TREEGAMES_AUTOMATA_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treegames/parity.hpp"
#include "treegames/tree.hpp"

namespace tg {

using StatePair = std::pair<int, int>;

// Nondeterministic parity tree automaton. delta is total with the empty set
// meaning "no run continues"; a missing (state, symbol) entry is empty.
struct Nta {
    std::string name;
    std::vector<std::string> states;
    std::set<Symbol> alphabet;
    int initial = 0;
    std::vector<int> rank;
    std::vector<std::map<Symbol, std::vector<StatePair>>> delta;

    int size() const { return static_cast<int>(states.size()); }
    const std::vector<StatePair>& moves(int q, const Symbol& a) const;
    // (min rank, max rank) over all states.
    std::pair<int, int> index() const;
    Nta with_initial(int q) const;
    void validate() const;
};

// Positive boolean transition formulas, pooled per automaton.
struct AtaFormula {
    enum Kind { Atom, And, Or } kind = Atom;
    int dir = 0;   // Atom
    int state = 0; // Atom
    int lhs = -1, rhs = -1;
};

struct Ata {
    std::string name;
    std::vector<std::string> states;
    std::set<Symbol> alphabet;
    int initial = 0;
    std::vector<int> rank;
    std::vector<AtaFormula> pool;
    std::vector<std::map<Symbol, int>> delta; // formula index per (state, symbol)

    int size() const { return static_cast<int>(states.size()); }
    int atom(int dir, int state);
    int conj(int l, int r);
    int disj(int l, int r);
    void validate() const;
    std::string format_formula(int idx) const;
};

// ATA whose transition formulas all have one of the four game shapes.
struct GameAta {
    enum Shape { Dir0, Dir1, AndLR, OrLR };
    struct Trans {
        Shape shape = Dir0;
        int p = 0;
        int r = 0; // second state for the binary shapes
    };
    std::string name;
    std::vector<std::string> states;
    std::set<Symbol> alphabet;
    int initial = 0;
    std::vector<int> rank;
    std::vector<std::map<Symbol, Trans>> delta;

    int size() const { return static_cast<int>(states.size()); }
    Ata to_ata() const;
    // Validates the shape restriction.
    static GameAta from_ata(const Ata& a);
};

// Synchronised deterministic tree transducer: total delta and owner maps, a
// rank relabelling, acceptance through the induced parity game.
struct Sdtt {
    std::string name;
    std::vector<std::string> states;
    std::set<Symbol> alphabet;
    int initial = 0;
    std::vector<int> rank; // the relabelling lambda
    std::vector<std::map<Symbol, StatePair>> delta;
    std::vector<std::map<Symbol, int>> owner;

    int size() const { return static_cast<int>(states.size()); }
    Sdtt with_initial(int q) const;
    void validate() const;
};

// --- membership / emptiness ---------------------------------------------

bool nta_membership(const Nta& a, const RegularTree& t);

struct Emptiness {
    bool empty = true;
    std::optional<RegularTree> witness;
};
// Emptiness over valid labelled trees (blank closure enforced on the guessed
// tree). A returned witness always satisfies nta_membership.
Emptiness nta_emptiness(const Nta& a);

bool ata_membership(const Ata& a, const RegularTree& t);

// The unique run of d on t, as a regular tree labelled with state names.
RegularTree sdtt_run(const Sdtt& d, const RegularTree& t);

bool sdtt_membership(const Sdtt& d, const RegularTree& t);

// --- translations ---------------------------------------------------------

GameAta sdtt_to_game_ata(const Sdtt& d);
Sdtt game_ata_to_sdtt(const GameAta& a);
// Complements the recognised language: flips owners, shifts ranks by one.
Sdtt dualize_sdtt(const Sdtt& d);
GameAta dualize_game_ata(const GameAta& a);
Nta game_ata_to_nta(const GameAta& a);

// --- constructions --------------------------------------------------------

// Automaton for { t over Gamma+{#} : hash_projection(t) in L(a) }. Adds, per
// original state, a rider crossing finite #-chains and a lander sealing the
// crossing, plus a gated spine/blank gadget for chains that collapse to the
// blank tree. Riders over even-ranked states that do not accept the blank
// tree must take the next odd rank; when such a state sits at an even maximum
// rank this provably raises the automaton's upper index by one (the target
// language is in general not recognisable within the input's index).
Nta preimage_hash(const Nta& a);

struct TreeGame; // game.hpp

// Automaton accepting exactly the plays of g (all ranks 0).
Nta play_language_nta(const TreeGame& g);

// Product with a safety automaton (single even rank); the pair keeps the
// rank of the first component.
Nta intersect_with_safety(const Nta& a, const Nta& safety);

// Union of two languages over the joint alphabet (fresh initial state).
Nta nta_union(const Nta& a, const Nta& b);

// Accepts exactly the trees whose hash projection is undefined, i.e. trees
// with a reachable fully branching '#' node.
Nta undefined_projection_nta(const std::set<Symbol>& alphabet);

// Safety automaton accepting exactly the given finite trees.
Nta exact_trees_nta(const std::string& name, const std::vector<RegularTree>& trees);

} // namespace tg

#endif
