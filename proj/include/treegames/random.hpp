#ifndef TREEGAMES_RANDOM_HPP
#define TREEGAMES_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "treegames/tree.hpp"

namespace tg {

struct Nta;
struct Sdtt;
struct TreeGame;
struct FiniteMemoryStrategy;
struct ParityGame;

// Deterministic generator for the randomized suites; every draw is a pure
// function of the seed.
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::mt19937_64 eng;

    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(static_cast<int>(v.size()))];
    }
};

// Random regular tree over the given symbols (blank added implicitly).
// '#'-labelled nodes are biased towards redundancy so that hash projections
// are frequently defined.
RegularTree random_regular_tree(Rng& rng, const std::vector<Symbol>& symbols, int max_nodes);

// Random finite tree with one node per address, depth-bounded.
RegularTree random_finite_tree(Rng& rng, const std::vector<Symbol>& symbols, int max_depth);

Nta random_nta(Rng& rng, const std::string& name, const std::vector<Symbol>& symbols,
               int max_states, int max_rank);

Sdtt random_sdtt(Rng& rng, const std::string& name, const std::vector<Symbol>& symbols,
                 int max_states, int max_rank);

// Random arena; hash_prob is the share of player vertices labelled '#'.
TreeGame random_tree_game(Rng& rng, const std::string& name, const std::vector<Symbol>& symbols,
                          int max_verts, double hash_prob);

FiniteMemoryStrategy random_strategy(Rng& rng, const TreeGame& g, int player, int memsize);

ParityGame random_parity_game(Rng& rng, int max_verts, int max_rank);

} // namespace tg

#endif
