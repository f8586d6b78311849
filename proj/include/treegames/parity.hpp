#ifndef TREEGAMES_PARITY_HPP
#define TREEGAMES_PARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "treegames/common.hpp"

namespace tg {

// Parity game with ordered binary successors. Player 0 wins a play iff the
// lim inf of the rank sequence is even (min-parity). Single-successor
// positions are encoded by cloning (succ0 == succ1).
struct ParityGame {
    struct Vertex {
        std::string name;
        int owner = 0;  // 0 or 1
        int rank = 0;
        int succ[2] = {0, 0};
    };
    std::string name;
    std::vector<Vertex> verts;
    int initial = 0;

    int size() const { return static_cast<int>(verts.size()); }
    void validate() const;
};

// Positional choices per vertex; strategy_i defined exactly on player i's
// vertices inside player i's winning region.
struct Solution {
    std::vector<int> winner_of;
    std::vector<std::optional<int>> strategy0;
    std::vector<std::optional<int>> strategy1;
};

// beta_G: end of the path from v along the binary word u.
int beta(const ParityGame& g, int v, const std::string& u);
// beta_G^p: the whole path, |u|+1 vertices.
std::vector<int> beta_path(const ParityGame& g, int v, const std::string& u);

// Zielonka-style recursive region decomposition, min-parity convention.
Solution solve(const ParityGame& g);

// Independent oracle: exhaustive positional-strategy enumeration with cycle
// classification. Intended for |V| <= ~12.
std::vector<int> solve_naive(const ParityGame& g);

struct PlayOut {
    std::vector<int> prefix_ranks;
    std::vector<int> cycle_ranks;
    int winner = 0;  // parity of the minimal rank on the cycle
};

// The unique eventually-cyclic play under two positional strategies (entries
// may be -1 = undefined; reaching an undefined choice is an error).
PlayOut play_out(const ParityGame& g, const std::vector<int>& s0,
                 const std::vector<int>& s1, int from);

} // namespace tg

#endif
