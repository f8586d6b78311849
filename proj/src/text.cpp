#include "treegames/text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace tg {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// key=value token; throws if the key does not match.
std::string kv(const std::string& tok, const std::string& key, int lineno) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key)
        throw ParseError("expected " + key + "=..., got '" + tok + "'", lineno);
    return tok.substr(eq + 1);
}

std::pair<std::string, std::string> split_comma(const std::string& s, int lineno) {
    auto c = s.find(',');
    if (c == std::string::npos) throw ParseError("expected a comma-separated pair in '" + s + "'", lineno);
    return {s.substr(0, c), s.substr(c + 1)};
}

int parse_int(const std::string& s, int lineno) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + s + "'", lineno);
    }
}

// Identifiers appear inside comma pairs and key=value tokens, so they must
// stay clear of the format's structural characters. State and vertex names
// also become tree labels, where '_' is the reserved blank symbol.
void check_id(const std::string& s, int lineno) {
    if (s.empty()) throw ParseError("empty identifier", lineno);
    if (s.find_first_of(",=|") != std::string::npos)
        throw ParseError("identifier '" + s + "' may not contain ',', '=' or '|'", lineno);
    if (s == kBlank) throw ParseError("identifier may not be the blank symbol '_'", lineno);
}

// Name-interning helper for objects whose ids are symbolic in files.
struct Interner {
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    int get(const std::string& n) {
        auto it = ids.find(n);
        if (it != ids.end()) return it->second;
        int i = static_cast<int>(names.size());
        ids.emplace(n, i);
        names.push_back(n);
        return i;
    }
};

// ATA transition formulas: '|' lowest, '&' above it, atoms "(d,state)".
struct FormulaParser {
    const std::string& s;
    size_t pos = 0;
    Ata& ata;
    Interner& states;
    int lineno;

    void skip() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            pos++;
            return true;
        }
        return false;
    }
    int parse_or() {
        int l = parse_and();
        while (eat('|')) l = ata.disj(l, parse_and());
        return l;
    }
    int parse_and() {
        int l = parse_prim();
        while (eat('&')) l = ata.conj(l, parse_prim());
        return l;
    }
    int parse_prim() {
        skip();
        if (!eat('(')) throw ParseError("formula: expected '('", lineno);
        skip();
        // Atom "(d,q)" or a parenthesised sub-formula.
        if (pos < s.size() && (s[pos] == '0' || s[pos] == '1')) {
            size_t save = pos;
            char d = s[pos];
            pos++;
            if (eat(',')) {
                skip();
                size_t start = pos;
                while (pos < s.size() && s[pos] != ')' && !isspace(static_cast<unsigned char>(s[pos])))
                    pos++;
                std::string q = s.substr(start, pos - start);
                if (q.empty()) throw ParseError("formula: empty state name", lineno);
                if (!eat(')')) throw ParseError("formula: expected ')'", lineno);
                return ata.atom(d - '0', states.get(q));
            }
            pos = save;
        }
        int f = parse_or();
        if (!eat(')')) throw ParseError("formula: expected ')'", lineno);
        return f;
    }
};

struct Parser {
    Workspace& ws;
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    size_t cur = 0;

    bool done() const { return cur >= lines.size(); }
    const std::vector<std::string>& peek() const { return lines[cur].second; }
    int lineno() const { return lines[cur].first; }

    void parse_tree() {
        const auto& head = peek();
        if (head.size() != 2) throw ParseError("tree: expected 'tree <name>'", lineno());
        std::string name = head[1];
        int head_line = lineno();
        cur++;
        Interner nodes;
        std::vector<RegularTree::Node> raw;
        std::vector<bool> defined;
        int root = -1;
        while (!done() && peek()[0] == "node") {
            const auto& t = peek();
            int ln = lineno();
            if (t.size() != 5) throw ParseError("node: expected 'node <id> label=<sym> left=<id> right=<id>'", ln);
            check_id(t[1], ln);
            int id = nodes.get(t[1]);
            Symbol label = kv(t[2], "label", ln);
            int l = nodes.get(kv(t[3], "left", ln));
            int r = nodes.get(kv(t[4], "right", ln));
            raw.resize(nodes.names.size());
            defined.resize(nodes.names.size(), false);
            raw[id] = {label, l, r};
            defined[id] = true;
            if (root < 0) root = id;
            cur++;
        }
        if (root < 0) throw ParseError("tree '" + name + "': no nodes", head_line);
        raw.resize(nodes.names.size());
        defined.resize(nodes.names.size(), false);
        for (size_t i = 0; i < raw.size(); ++i)
            if (!defined[i])
                throw ParseError("tree '" + name + "': node '" + nodes.names[i] + "' referenced but never defined",
                                 head_line);
        if (!ws.trees.emplace(name, RegularTree::make(std::move(raw), root)).second)
            throw ParseError("duplicate tree name '" + name + "'", head_line);
    }

    void parse_pg() {
        const auto& head = peek();
        if (head.size() != 2) throw ParseError("pg: expected 'pg <name>'", lineno());
        ParityGame g;
        g.name = head[1];
        int head_line = lineno();
        cur++;
        // Two passes so vertex indices follow definition order even with
        // forward references.
        size_t begin = cur;
        std::map<std::string, int> ids;
        while (!done() && peek()[0] == "pvertex") {
            const auto& t = peek();
            if (t.size() < 5) throw ParseError("pvertex: expected id, owner=, rank=, succ=", lineno());
            check_id(t[1], lineno());
            if (!ids.emplace(t[1], static_cast<int>(ids.size())).second)
                throw ParseError("pvertex: '" + t[1] + "' defined twice", lineno());
            cur++;
        }
        size_t end = cur;
        auto vid = [&](const std::string& n, int ln) {
            auto it = ids.find(n);
            if (it == ids.end()) throw ParseError("pg: vertex '" + n + "' referenced but never defined", ln);
            return it->second;
        };
        g.verts.resize(ids.size());
        int init = -1;
        for (cur = begin; cur < end; ++cur) {
            const auto& t = peek();
            int ln = lineno();
            ParityGame::Vertex v;
            v.name = t[1];
            v.owner = parse_int(kv(t[2], "owner", ln), ln);
            v.rank = parse_int(kv(t[3], "rank", ln), ln);
            auto [s0, s1] = split_comma(kv(t[4], "succ", ln), ln);
            v.succ[0] = vid(s0, ln);
            v.succ[1] = vid(s1, ln);
            if (t.size() > 5) {
                if (t[5] != "init") throw ParseError("pvertex: trailing token '" + t[5] + "'", ln);
                init = vid(t[1], ln);
            }
            g.verts[vid(t[1], ln)] = v;
        }
        if (g.verts.empty()) throw ParseError("pg '" + g.name + "': no vertices", head_line);
        g.initial = init < 0 ? 0 : init;
        g.validate();
        if (!ws.pgames.emplace(g.name, g).second)
            throw ParseError("duplicate pg name '" + g.name + "'", head_line);
    }

    // Shared by nta/ata/sdtt: 'state <q> rank=<n> [init]' lines.
    template <class A>
    void parse_states(A& a, Interner& st, int& init) {
        while (!done() && peek()[0] == "state") {
            const auto& t = peek();
            int ln = lineno();
            if (t.size() < 3) throw ParseError("state: expected 'state <q> rank=<n> [init]'", ln);
            check_id(t[1], ln);
            int id = st.get(t[1]);
            if (id != static_cast<int>(a.rank.size()))
                throw ParseError("state '" + t[1] + "' defined twice or out of order", ln);
            a.rank.push_back(parse_int(kv(t[2], "rank", ln), ln));
            if (t.size() > 3) {
                if (t[3] != "init") throw ParseError("state: trailing token '" + t[3] + "'", ln);
                init = id;
            }
            cur++;
        }
    }

    void parse_alphabet_line(std::set<Symbol>& alphabet) {
        if (!done() && peek()[0] == "alphabet") {
            for (size_t i = 1; i < peek().size(); ++i) alphabet.insert(peek()[i]);
            cur++;
        }
    }

    void parse_nta() {
        const auto& head = peek();
        if (head.size() != 2) throw ParseError("nta: expected 'nta <name>'", lineno());
        Nta a;
        a.name = head[1];
        int head_line = lineno();
        cur++;
        Interner st;
        int init = -1;
        parse_alphabet_line(a.alphabet);
        parse_states(a, st, init);
        a.states = st.names;
        a.delta.resize(a.states.size());
        while (!done() && peek()[0] == "trans") {
            const auto& t = peek();
            int ln = lineno();
            if (t.size() < 5 || t[3] != "->")
                throw ParseError("trans: expected 'trans <q> <sym> -> <q>,<q> | ...'", ln);
            auto q = st.ids.find(t[1]);
            if (q == st.ids.end()) throw ParseError("trans: unknown state '" + t[1] + "'", ln);
            Symbol sym = t[2];
            a.alphabet.insert(sym);
            for (size_t i = 4; i < t.size(); ++i) {
                if (t[i] == "|") continue;
                auto [x, y] = split_comma(t[i], ln);
                auto ix = st.ids.find(x), iy = st.ids.find(y);
                if (ix == st.ids.end() || iy == st.ids.end())
                    throw ParseError("trans: unknown state in pair '" + t[i] + "'", ln);
                a.delta[q->second][sym].push_back({ix->second, iy->second});
            }
            cur++;
        }
        a.alphabet.insert(kBlank);
        a.initial = init < 0 ? 0 : init;
        a.validate();
        if (!ws.ntas.emplace(a.name, a).second)
            throw ParseError("duplicate nta name '" + a.name + "'", head_line);
    }

    void parse_ata() {
        const auto& head = peek();
        if (head.size() != 2) throw ParseError("ata: expected 'ata <name>'", lineno());
        Ata a;
        a.name = head[1];
        int head_line = lineno();
        cur++;
        Interner st;
        int init = -1;
        parse_alphabet_line(a.alphabet);
        parse_states(a, st, init);
        a.states = st.names;
        a.delta.resize(a.states.size());
        while (!done() && peek()[0] == "atrans") {
            const auto& t = peek();
            int ln = lineno();
            if (t.size() < 5 || t[3] != "->")
                throw ParseError("atrans: expected 'atrans <q> <sym> -> <formula>'", ln);
            auto q = st.ids.find(t[1]);
            if (q == st.ids.end()) throw ParseError("atrans: unknown state '" + t[1] + "'", ln);
            Symbol sym = t[2];
            a.alphabet.insert(sym);
            std::string formula;
            for (size_t i = 4; i < t.size(); ++i) formula += t[i];
            FormulaParser fp{formula, 0, a, st, ln};
            int f = fp.parse_or();
            fp.skip();
            if (fp.pos != formula.size()) throw ParseError("atrans: trailing formula text", ln);
            a.delta[q->second][sym] = f;
            cur++;
        }
        // Atoms may reference states declared only here; sizes must agree.
        if (st.names.size() != a.states.size())
            throw ParseError("ata '" + a.name + "': formula references undeclared states", head_line);
        a.alphabet.insert(kBlank);
        a.initial = init < 0 ? 0 : init;
        a.validate();
        if (!ws.atas.emplace(a.name, a).second)
            throw ParseError("duplicate ata name '" + a.name + "'", head_line);
    }

    void parse_sdtt() {
        const auto& head = peek();
        if (head.size() != 2) throw ParseError("sdtt: expected 'sdtt <name>'", lineno());
        Sdtt d;
        d.name = head[1];
        int head_line = lineno();
        cur++;
        Interner st;
        int init = -1;
        parse_alphabet_line(d.alphabet);
        parse_states(d, st, init);
        d.states = st.names;
        d.delta.resize(d.states.size());
        d.owner.resize(d.states.size());
        while (!done() && peek()[0] == "dtrans") {
            const auto& t = peek();
            int ln = lineno();
            if (t.size() != 6 || t[4] != "->")
                throw ParseError("dtrans: expected 'dtrans <q> <sym> owner=<0|1> -> <q>,<q>'", ln);
            auto q = st.ids.find(t[1]);
            if (q == st.ids.end()) throw ParseError("dtrans: unknown state '" + t[1] + "'", ln);
            Symbol sym = t[2];
            d.alphabet.insert(sym);
            int owner = parse_int(kv(t[3], "owner", ln), ln);
            auto [x, y] = split_comma(t[5], ln);
            auto ix = st.ids.find(x), iy = st.ids.find(y);
            if (ix == st.ids.end() || iy == st.ids.end())
                throw ParseError("dtrans: unknown state in pair '" + t[5] + "'", ln);
            d.delta[q->second][sym] = {ix->second, iy->second};
            d.owner[q->second][sym] = owner;
            cur++;
        }
        d.alphabet.insert(kBlank);
        d.initial = init < 0 ? 0 : init;
        d.validate();
        if (!ws.sdtts.emplace(d.name, d).second)
            throw ParseError("duplicate sdtt name '" + d.name + "'", head_line);
    }

    void parse_tgame() {
        const auto& head = peek();
        if (head.size() != 2) throw ParseError("tgame: expected 'tgame <name>'", lineno());
        TreeGame g;
        g.name = head[1];
        int head_line = lineno();
        cur++;
        size_t begin = cur;
        std::map<std::string, int> ids;
        while (!done() && (peek()[0] == "gvertex" || peek()[0] == "objective")) {
            const auto& t = peek();
            if (t[0] == "gvertex") {
                if (t.size() < 5) throw ParseError("gvertex: expected id, label=, owner=, succ=", lineno());
                check_id(t[1], lineno());
                if (!ids.emplace(t[1], static_cast<int>(ids.size())).second)
                    throw ParseError("gvertex: '" + t[1] + "' defined twice", lineno());
            }
            cur++;
        }
        size_t end = cur;
        auto vid = [&](const std::string& n, int ln) {
            auto it = ids.find(n);
            if (it == ids.end())
                throw ParseError("tgame: vertex '" + n + "' referenced but never defined", ln);
            return it->second;
        };
        g.verts.resize(ids.size());
        int init = -1;
        for (cur = begin; cur < end; ++cur) {
            const auto& t = peek();
            int ln = lineno();
            if (t[0] == "objective") {
                for (size_t i = 1; i < t.size(); ++i) {
                    auto eq = t[i].find('=');
                    if (eq == std::string::npos) throw ParseError("objective: expected key=value", ln);
                    std::string key = t[i].substr(0, eq), val = t[i].substr(eq + 1);
                    if (key == "sdtt") {
                        auto it = ws.sdtts.find(val);
                        if (it == ws.sdtts.end()) throw ParseError("objective: unknown sdtt '" + val + "'", ln);
                        g.objective_sdtt = it->second;
                    } else if (key == "nta") {
                        auto it = ws.ntas.find(val);
                        if (it == ws.ntas.end()) throw ParseError("objective: unknown nta '" + val + "'", ln);
                        g.objective_nta = it->second;
                    } else if (key == "conta") {
                        auto it = ws.ntas.find(val);
                        if (it == ws.ntas.end()) throw ParseError("objective: unknown nta '" + val + "'", ln);
                        g.objective_conta = it->second;
                    } else {
                        throw ParseError("objective: unknown key '" + key + "'", ln);
                    }
                }
                continue;
            }
            TreeGame::Vertex v;
            v.name = t[1];
            v.label = kv(t[2], "label", ln);
            std::string owner = kv(t[3], "owner", ln);
            if (owner == "B")
                v.owner = TreeGame::kBranching;
            else
                v.owner = parse_int(owner, ln);
            auto [s0, s1] = split_comma(kv(t[4], "succ", ln), ln);
            v.succ[0] = vid(s0, ln);
            v.succ[1] = vid(s1, ln);
            if (t.size() > 5) {
                if (t[5] != "init") throw ParseError("gvertex: trailing token '" + t[5] + "'", ln);
                init = vid(t[1], ln);
            }
            g.verts[vid(t[1], ln)] = v;
        }
        if (g.verts.empty()) throw ParseError("tgame '" + g.name + "': no vertices", head_line);
        g.initial = init < 0 ? 0 : init;
        g.validate();
        if (!ws.tgames.emplace(g.name, g).second)
            throw ParseError("duplicate tgame name '" + g.name + "'", head_line);
    }

    void parse_strat() {
        const auto& t = peek();
        int ln = lineno();
        StrategyFile f;
        size_t i = 1;
        if (t.size() > 1 && t[1].find('=') == std::string::npos) {
            f.name = t[1];
            i = 2;
        }
        if (t.size() < i + 2) throw ParseError("strat: expected player= and memsize=", ln);
        f.player = parse_int(kv(t[i], "player", ln), ln);
        f.memsize = parse_int(kv(t[i + 1], "memsize", ln), ln);
        cur++;
        auto add_mem = [&f](const std::string& m) {
            if (std::find(f.memories.begin(), f.memories.end(), m) == f.memories.end())
                f.memories.push_back(m);
        };
        while (!done()) {
            const auto& u = peek();
            int l2 = lineno();
            if (u[0] == "minit") {
                if (u.size() != 2) throw ParseError("minit: expected 'minit <m>'", l2);
                f.initial_memory = u[1];
                add_mem(u[1]);
            } else if (u[0] == "mmove") {
                if (u.size() != 5 || u[3] != "->") throw ParseError("mmove: expected 'mmove <m> <vertex> -> <dir>'", l2);
                f.moves[{u[1], u[2]}] = parse_int(u[4], l2);
                add_mem(u[1]);
            } else if (u[0] == "mupd") {
                if (u.size() != 6 || u[4] != "->")
                    throw ParseError("mupd: expected 'mupd <m> <vertex> <dir> -> <m>'", l2);
                f.updates[{u[1], u[2], parse_int(u[3], l2)}] = u[5];
                add_mem(u[1]);
                add_mem(u[5]);
            } else {
                break;
            }
            cur++;
        }
        if (f.initial_memory.empty()) {
            if (f.memories.empty()) f.memories.push_back("m0");
            f.initial_memory = f.memories.front();
        }
        if (!ws.strategies.emplace(f.name, f).second)
            throw ParseError("duplicate strategy name '" + f.name + "'", ln);
    }

    void run() {
        while (!done()) {
            const std::string& head = peek()[0];
            if (head == "tree")
                parse_tree();
            else if (head == "pg")
                parse_pg();
            else if (head == "nta")
                parse_nta();
            else if (head == "ata")
                parse_ata();
            else if (head == "sdtt")
                parse_sdtt();
            else if (head == "tgame")
                parse_tgame();
            else if (head == "strat")
                parse_strat();
            else
                throw ParseError("unknown header '" + head + "'", lineno());
        }
    }
};

} // namespace

void parse_into(Workspace& ws, const std::string& text, const std::string& filename) {
    Parser p{ws, {}, 0};
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        no++;
        auto hash = line.find('%');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (!toks.empty()) p.lines.push_back({no, std::move(toks)});
    }
    try {
        p.run();
    } catch (const ParseError& e) {
        throw ParseError::wrapped(filename + ": " + e.what(), e.line, e.column);
    } catch (const Error& e) {
        // Validation failures of freshly parsed objects are parse diagnostics.
        throw ParseError::wrapped(filename + ": " + e.what(), 0, 0);
    }
}

void load_file(Workspace& ws, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    parse_into(ws, buf.str(), path);
}

const RegularTree& Workspace::tree(const std::string& name) const {
    auto it = trees.find(name);
    if (it == trees.end()) throw Error("no tree named '" + name + "'");
    return it->second;
}
const Nta& Workspace::nta(const std::string& name) const {
    auto it = ntas.find(name);
    if (it == ntas.end()) throw Error("no nta named '" + name + "'");
    return it->second;
}
const Ata& Workspace::ata(const std::string& name) const {
    auto it = atas.find(name);
    if (it == atas.end()) throw Error("no ata named '" + name + "'");
    return it->second;
}
const Sdtt& Workspace::sdtt(const std::string& name) const {
    auto it = sdtts.find(name);
    if (it == sdtts.end()) throw Error("no sdtt named '" + name + "'");
    return it->second;
}
const TreeGame& Workspace::tgame(const std::string& name) const {
    auto it = tgames.find(name);
    if (it == tgames.end()) throw Error("no tgame named '" + name + "'");
    return it->second;
}
const ParityGame& Workspace::pgame(const std::string& name) const {
    auto it = pgames.find(name);
    if (it == pgames.end()) throw Error("no pg named '" + name + "'");
    return it->second;
}
const StrategyFile& Workspace::strategy(const std::string& name) const {
    auto it = strategies.find(name);
    if (it == strategies.end()) throw Error("no strategy named '" + name + "'");
    return it->second;
}

FiniteMemoryStrategy bind_strategy(const StrategyFile& f, const TreeGame& g) {
    FiniteMemoryStrategy s;
    s.player = f.player;
    s.memsize = f.memsize;
    std::map<std::string, int> mem;
    for (const std::string& m : f.memories) {
        if (mem.count(m)) continue;
        int id = static_cast<int>(s.memory_names.size());
        mem[m] = id;
        s.memory_names.push_back(m);
    }
    while (static_cast<int>(s.memory_names.size()) < f.memsize) {
        std::string n = "m" + std::to_string(s.memory_names.size());
        if (!mem.count(n)) {
            mem[n] = static_cast<int>(s.memory_names.size());
            s.memory_names.push_back(n);
        } else {
            n += "_";
            mem[n] = static_cast<int>(s.memory_names.size());
            s.memory_names.push_back(n);
        }
    }
    if (static_cast<int>(s.memory_names.size()) > f.memsize)
        throw Error("strategy '" + f.name + "': more memories used than memsize declares");
    auto mem_id = [&](const std::string& m) {
        auto it = mem.find(m);
        if (it == mem.end()) throw Error("strategy '" + f.name + "': unknown memory '" + m + "'");
        return it->second;
    };
    std::map<std::string, int> verts;
    for (int v = 0; v < g.size(); ++v) verts[g.verts[v].name] = v;
    auto vert_id = [&](const std::string& v) {
        auto it = verts.find(v);
        if (it == verts.end()) throw Error("strategy '" + f.name + "': unknown vertex '" + v + "'");
        return it->second;
    };

    s.initial_memory = mem_id(f.initial_memory);
    s.move.assign(s.memsize, std::vector<int>(g.size(), 0));
    s.update.assign(s.memsize, std::vector<std::array<int, 2>>(g.size(), {0, 0}));
    for (int m = 0; m < s.memsize; ++m)
        for (int v = 0; v < g.size(); ++v) s.update[m][v] = {m, m};
    for (const auto& [key, dir] : f.moves) s.move[mem_id(key.first)][vert_id(key.second)] = dir;
    for (const auto& [key, m2] : f.updates)
        s.update[mem_id(std::get<0>(key))][vert_id(std::get<1>(key))][std::get<2>(key)] = mem_id(m2);
    s.validate(g);
    return s;
}

StrategyFile unbind_strategy(const FiniteMemoryStrategy& s, const TreeGame& g,
                             const std::string& name) {
    StrategyFile f;
    f.name = name;
    f.player = s.player;
    f.memsize = s.memsize;
    for (int m = 0; m < s.memsize; ++m)
        f.memories.push_back(m < static_cast<int>(s.memory_names.size())
                                 ? s.memory_names[m]
                                 : "m" + std::to_string(m));
    f.initial_memory = f.memories[s.initial_memory];
    for (int m = 0; m < s.memsize; ++m)
        for (int v = 0; v < g.size(); ++v) {
            if (g.verts[v].owner == s.player) f.moves[{f.memories[m], g.verts[v].name}] = s.move[m][v];
            for (int d = 0; d < 2; ++d)
                f.updates[{f.memories[m], g.verts[v].name, d}] = f.memories[s.update[m][v][d]];
        }
    return f;
}

namespace {

std::string alphabet_line(const std::set<Symbol>& alphabet) {
    std::string out = "alphabet";
    for (const Symbol& s : alphabet) out += " " + s;
    return out + "\n";
}

} // namespace

std::string emit_tree(const RegularTree& t, const std::string& name) {
    std::ostringstream out;
    out << "tree " << name << "\n";
    for (int n = 0; n < t.size(); ++n) {
        // The internal representation keeps the root at node 0.
        out << "node n" << n << " label=" << t.label(n) << " left=n" << t.left(n) << " right=n"
            << t.right(n) << "\n";
    }
    return out.str();
}

std::string emit_pg(const ParityGame& g) {
    std::ostringstream out;
    out << "pg " << g.name << "\n";
    for (int v = 0; v < g.size(); ++v) {
        const auto& vert = g.verts[v];
        out << "pvertex x" << v << " owner=" << vert.owner << " rank=" << vert.rank << " succ=x"
            << vert.succ[0] << ",x" << vert.succ[1];
        if (v == g.initial) out << " init";
        out << "\n";
    }
    return out.str();
}

std::string emit_nta(const Nta& a) {
    std::ostringstream out;
    out << "nta " << a.name << "\n" << alphabet_line(a.alphabet);
    for (int q = 0; q < a.size(); ++q) {
        out << "state " << a.states[q] << " rank=" << a.rank[q];
        if (q == a.initial) out << " init";
        out << "\n";
    }
    for (int q = 0; q < a.size(); ++q)
        for (const auto& [sym, pairs] : a.delta[q]) {
            if (pairs.empty()) continue;
            out << "trans " << a.states[q] << " " << sym << " ->";
            for (size_t i = 0; i < pairs.size(); ++i) {
                if (i) out << " |";
                out << " " << a.states[pairs[i].first] << "," << a.states[pairs[i].second];
            }
            out << "\n";
        }
    return out.str();
}

std::string emit_ata(const Ata& a) {
    std::ostringstream out;
    out << "ata " << a.name << "\n" << alphabet_line(a.alphabet);
    for (int q = 0; q < a.size(); ++q) {
        out << "state " << a.states[q] << " rank=" << a.rank[q];
        if (q == a.initial) out << " init";
        out << "\n";
    }
    for (int q = 0; q < a.size(); ++q)
        for (const auto& [sym, f] : a.delta[q])
            out << "atrans " << a.states[q] << " " << sym << " -> " << a.format_formula(f) << "\n";
    return out.str();
}

std::string emit_sdtt(const Sdtt& d) {
    std::ostringstream out;
    out << "sdtt " << d.name << "\n" << alphabet_line(d.alphabet);
    for (int q = 0; q < d.size(); ++q) {
        out << "state " << d.states[q] << " rank=" << d.rank[q];
        if (q == d.initial) out << " init";
        out << "\n";
    }
    for (int q = 0; q < d.size(); ++q)
        for (const auto& [sym, pr] : d.delta[q])
            out << "dtrans " << d.states[q] << " " << sym << " owner=" << d.owner[q].at(sym)
                << " -> " << d.states[pr.first] << "," << d.states[pr.second] << "\n";
    return out.str();
}

std::string emit_tgame(const TreeGame& g) {
    std::ostringstream out;
    out << "tgame " << g.name << "\n";
    for (int v = 0; v < g.size(); ++v) {
        const auto& vert = g.verts[v];
        out << "gvertex " << vert.name << " label=" << vert.label << " owner="
            << (vert.owner == TreeGame::kBranching ? "B" : std::to_string(vert.owner)) << " succ="
            << g.verts[vert.succ[0]].name << "," << g.verts[vert.succ[1]].name;
        if (v == g.initial) out << " init";
        out << "\n";
    }
    if (g.objective_sdtt) out << "objective sdtt=" << g.objective_sdtt->name << "\n";
    if (g.objective_nta) {
        out << "objective nta=" << g.objective_nta->name;
        if (g.objective_conta) out << " conta=" << g.objective_conta->name;
        out << "\n";
    }
    return out.str();
}

std::string emit_strategy(const FiniteMemoryStrategy& s, const TreeGame& g,
                          const std::string& name) {
    StrategyFile f = unbind_strategy(s, g, name);
    std::ostringstream out;
    out << "strat " << f.name << " player=" << f.player << " memsize=" << f.memsize << "\n";
    out << "minit " << f.initial_memory << "\n";
    for (const auto& [key, dir] : f.moves)
        out << "mmove " << key.first << " " << key.second << " -> " << dir << "\n";
    for (const auto& [key, m2] : f.updates)
        out << "mupd " << std::get<0>(key) << " " << std::get<1>(key) << " " << std::get<2>(key)
            << " -> " << m2 << "\n";
    return out.str();
}

} // namespace tg
