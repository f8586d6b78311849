#ifndef TREEGAMES_FIXTURES_HPP
#define TREEGAMES_FIXTURES_HPP

#include "treegames/automata.hpp"
#include "treegames/game.hpp"
#include "treegames/tree.hpp"

namespace tg::fixtures {

RegularTree a_leaf();
RegularTree b_leaf();
RegularTree c_pair(const RegularTree& x, const RegularTree& y);

// Four-vertex arena: players' '#' vertices 0 and 1 feeding the branching
// letter vertices a and b, initial vertex 0.
TreeGame fig2_game();

// Two-state transducer accepting exactly the trees without a 'b' label.
Sdtt d_safe_a();

// One state, rank 0 (everything) / rank 1 (nothing).
Nta all_nta(const std::set<Symbol>& alphabet = {"a", "b", kBlank});
Nta empty_nta(const std::set<Symbol>& alphabet = {"a", "b", kBlank});

// Single-state transducer accepting every tree over the alphabet.
Sdtt accept_all_sdtt(const std::set<Symbol>& alphabet);

// Matching-pennies fixture: context with the hole at the root and the four
// alternative subtrees; L_eq are the c-rooted trees whose children carry the
// same root letter from {a, b}.
Context mp_context();
RegularTree mp_t1();
RegularTree mp_t2();
RegularTree mp_t3();
RegularTree mp_t4();
Nta l_eq_nta();
Nta co_l_eq_nta();

} // namespace tg::fixtures

#endif
