#ifndef TREEGAMES_TEXT_HPP
#define TREEGAMES_TEXT_HPP

#include <map>
#include <string>

#include "treegames/automata.hpp"
#include "treegames/game.hpp"
#include "treegames/parity.hpp"
#include "treegames/tree.hpp"

namespace tg {

// Strategy file contents before binding to an arena (vertex and memory
// references are symbolic).
struct StrategyFile {
    std::string name = "strategy";
    int player = 0;
    int memsize = 1;
    std::string initial_memory;
    std::vector<std::string> memories;
    // (memory, vertex) -> dir
    std::map<std::pair<std::string, std::string>, int> moves;
    // (memory, vertex, dir) -> memory
    std::map<std::tuple<std::string, std::string, int>, std::string> updates;
};

FiniteMemoryStrategy bind_strategy(const StrategyFile& f, const TreeGame& g);
StrategyFile unbind_strategy(const FiniteMemoryStrategy& s, const TreeGame& g,
                             const std::string& name);

// Named collection of parsed objects. Objective references of tree games are
// resolved against the workspace when parsing finishes.
struct Workspace {
    std::map<std::string, RegularTree> trees;
    std::map<std::string, ParityGame> pgames;
    std::map<std::string, Nta> ntas;
    std::map<std::string, Ata> atas;
    std::map<std::string, Sdtt> sdtts;
    std::map<std::string, TreeGame> tgames;
    std::map<std::string, StrategyFile> strategies;

    const RegularTree& tree(const std::string& name) const;
    const Nta& nta(const std::string& name) const;
    const Ata& ata(const std::string& name) const;
    const Sdtt& sdtt(const std::string& name) const;
    const TreeGame& tgame(const std::string& name) const;
    const ParityGame& pgame(const std::string& name) const;
    const StrategyFile& strategy(const std::string& name) const;
};

// Parses one file's text (may hold several objects, each starting with its
// header line). Throws ParseError with line diagnostics.
void parse_into(Workspace& ws, const std::string& text, const std::string& filename);
void load_file(Workspace& ws, const std::string& path);

std::string emit_tree(const RegularTree& t, const std::string& name);
std::string emit_pg(const ParityGame& g);
std::string emit_nta(const Nta& a);
std::string emit_ata(const Ata& a);
std::string emit_sdtt(const Sdtt& d);
std::string emit_tgame(const TreeGame& g);
std::string emit_strategy(const FiniteMemoryStrategy& s, const TreeGame& g,
                          const std::string& name);

} // namespace tg

#endif
