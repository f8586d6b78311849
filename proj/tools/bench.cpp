// Micro-benchmarks: the exact solver against the enumeration oracle, and the
// determinacy candidate sweep run serially vs with the OpenMP schedule.

#include <chrono>
#include <iostream>

#include "treegames/automata.hpp"
#include "treegames/game.hpp"
#include "treegames/parity.hpp"
#include "treegames/random.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tg;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void bench_parity(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ParityGame> games;
    for (int i = 0; i < 2000; ++i) games.push_back(random_parity_game(rng, 8, 4));

    auto t0 = std::chrono::steady_clock::now();
    std::size_t acc = 0;
    for (const auto& g : games) acc += solve(g).winner_of[g.initial];
    double solver = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::size_t acc2 = 0;
    for (const auto& g : games) acc2 += solve_naive(g)[g.initial];
    double naive = ms_since(t0);

    std::cout << "parity games (" << games.size() << " instances, |V|<=8)\n";
    std::cout << "  region solver: " << solver << " ms\n";
    std::cout << "  enumeration oracle: " << naive << " ms\n";
    if (acc != acc2) std::cout << "  MISMATCH in winners\n";
}

void bench_determinacy(std::uint64_t seed) {
    // Random arenas with transducer objectives lifted to the play level; the
    // candidate sweep inside each decision is the data-parallel part.
    struct Case {
        TreeGame g;
        Nta l, col;
    };
    Rng rng(seed);
    std::vector<Case> cases;
    for (int i = 0; i < 25; ++i) {
        TreeGame g = random_tree_game(rng, "bench", {"a", "b"}, 8, 0.3);
        Sdtt d = random_sdtt(rng, "obj", {"a", "b"}, 4, 2);
        Nta l = play_level_objective(d, false);
        Nta col = nta_union(play_level_objective(d, true), undefined_projection_nta(l.alphabet));
        cases.push_back({std::move(g), std::move(l), std::move(col)});
    }

    for (int threads : {1,
#ifdef _OPENMP
                        omp_get_max_threads()
#else
                        1
#endif
         }) {
#ifdef _OPENMP
        omp_set_num_threads(threads);
#endif
        auto t0 = std::chrono::steady_clock::now();
        int candidates = 0, undetermined = 0;
        for (const Case& c : cases) {
            DeterminacyResult res = decide_determinacy(c.g, c.l, c.col, 4, seed);
            candidates += res.candidates0 + res.candidates1;
            if (res.kind == DeterminacyResult::Undetermined) undetermined++;
        }
        double ms = ms_since(t0);
        std::cout << "determinacy sweeps, depth 4, threads=" << threads << ": " << ms << " ms ("
                  << cases.size() << " arenas, " << candidates << " candidates examined, "
                  << undetermined << " undetermined)\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 7;
    bench_parity(seed);
    bench_determinacy(seed);
    return 0;
}
