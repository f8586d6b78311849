#include "treegames/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace tg {

RegularTree RegularTree::make(std::vector<Node> nodes, NodeId root) {
    if (nodes.empty()) throw Error("tree: no nodes");
    if (root < 0 || root >= static_cast<int>(nodes.size())) throw Error("tree: bad root");

    RegularTree t;
    std::unordered_map<int, int> remap;
    int blank_id = -1;
    std::deque<NodeId> work;

    auto intern = [&](NodeId old) -> int {
        if (old < 0 || old >= static_cast<int>(nodes.size())) throw Error("tree: dangling child");
        if (nodes[old].label == kBlank) {
            if (blank_id < 0) {
                blank_id = static_cast<int>(t.nodes_.size());
                t.nodes_.push_back({kBlank, blank_id, blank_id});
            }
            return blank_id;
        }
        auto it = remap.find(old);
        if (it != remap.end()) return it->second;
        int id = static_cast<int>(t.nodes_.size());
        remap.emplace(old, id);
        t.nodes_.push_back({nodes[old].label, -1, -1});
        work.push_back(old);
        return id;
    };

    t.root_ = intern(root);
    while (!work.empty()) {
        NodeId old = work.front();
        work.pop_front();
        int id = remap.at(old);
        t.nodes_[id].left = intern(nodes[old].left);
        t.nodes_[id].right = intern(nodes[old].right);
    }
    return t;
}

RegularTree RegularTree::blank() {
    return make({{kBlank, 0, 0}}, 0);
}

RegularTree RegularTree::leaf(const Symbol& s) {
    return make({{s, 1, 1}, {kBlank, 1, 1}}, 0);
}

RegularTree RegularTree::pair(const Symbol& s, const RegularTree& l, const RegularTree& r) {
    std::vector<Node> ns;
    ns.push_back({s, 1, 1 + l.size()});
    for (const Node& n : l.nodes_) ns.push_back({n.label, n.left + 1, n.right + 1});
    int off = 1 + l.size();
    for (const Node& n : r.nodes_) ns.push_back({n.label, n.left + off, n.right + off});
    ns[0].left = 1 + l.root_;
    ns[0].right = off + r.root_;
    return make(std::move(ns), 0);
}

NodeId RegularTree::at(const Address& u) const {
    NodeId n = root_;
    for (char c : u) {
        if (c != '0' && c != '1') throw Error("tree: bad address letter");
        n = child(n, c - '0');
    }
    return n;
}

int RegularTree::degree(NodeId n) const {
    return (is_blank(left(n)) ? 0 : 1) + (is_blank(right(n)) ? 0 : 1);
}

std::vector<Symbol> RegularTree::labels_used() const {
    std::set<Symbol> s;
    for (const Node& n : nodes_) s.insert(n.label);
    return {s.begin(), s.end()};
}

Symbol label_at(const RegularTree& t, const Address& u) {
    return t.label(t.at(u));
}

RegularTree subtree(const RegularTree& t, const Address& u) {
    return RegularTree::make(t.nodes(), t.at(u));
}

RegularTree replace(const RegularTree& t, const Address& u, const RegularTree& s) {
    if (u.empty()) return s;

    // Blank closure at the seam: below a blank ancestor only blank may go.
    NodeId n = t.root();
    for (size_t i = 0; i < u.size(); ++i) {
        if (t.is_blank(n)) {
            if (tree_equal(s, RegularTree::blank())) return t;
            throw Error("replace: non-blank subtree below a blank node");
        }
        n = t.child(n, u[i] - '0');
    }

    std::vector<RegularTree::Node> ns = t.nodes();
    int soff = static_cast<int>(ns.size());
    for (const RegularTree::Node& sn : s.nodes())
        ns.push_back({sn.label, sn.left + soff, sn.right + soff});

    // Copy the spine so shared or cyclic nodes off the path keep denoting t.
    int k = static_cast<int>(u.size());
    std::vector<NodeId> spine(k);
    NodeId cur = t.root();
    for (int i = 0; i < k; ++i) {
        spine[i] = cur;
        cur = t.child(cur, u[i] - '0');
    }
    int spine_off = static_cast<int>(ns.size());
    for (int i = 0; i < k; ++i) {
        const RegularTree::Node& orig = t.nodes()[spine[i]];
        int d = u[i] - '0';
        int taken = (i + 1 < k) ? spine_off + i + 1 : soff + s.root();
        RegularTree::Node copy{orig.label, 0, 0};
        if (d == 0) {
            copy.left = taken;
            copy.right = orig.right;
        } else {
            copy.left = orig.left;
            copy.right = taken;
        }
        ns.push_back(copy);
    }
    return RegularTree::make(std::move(ns), spine_off);
}

NodeClass classify_node(const RegularTree& t, const Address& u) {
    NodeId n = t.at(u);
    if (t.is_blank(n)) return NodeClass::Blank;
    switch (t.degree(n)) {
        case 2: return NodeClass::FullyBranching;
        case 1: return NodeClass::Redundant;
        default: return NodeClass::Dead;
    }
}

bool tree_equal(const RegularTree& a, const RegularTree& b) {
    std::set<std::pair<NodeId, NodeId>> seen;
    std::deque<std::pair<NodeId, NodeId>> work{{a.root(), b.root()}};
    while (!work.empty()) {
        auto [na, nb] = work.front();
        work.pop_front();
        if (!seen.insert({na, nb}).second) continue;
        if (a.label(na) != b.label(nb)) return false;
        work.push_back({a.left(na), b.left(nb)});
        work.push_back({a.right(na), b.right(nb)});
    }
    return true;
}

std::vector<Symbol> unfold_to_depth(const RegularTree& t, int depth) {
    std::vector<Symbol> out;
    std::deque<std::pair<NodeId, int>> work{{t.root(), 0}};
    while (!work.empty()) {
        auto [n, d] = work.front();
        work.pop_front();
        out.push_back(t.label(n));
        if (d < depth) {
            work.push_back({t.left(n), d + 1});
            work.push_back({t.right(n), d + 1});
        }
    }
    return out;
}

bool is_finite_tree(const RegularTree& t) {
    // Cycle check over non-blank nodes.
    enum { White, Grey, Black };
    std::vector<int> color(t.size(), White);
    std::vector<std::pair<NodeId, int>> stack;
    if (t.is_blank(t.root())) return true;
    stack.push_back({t.root(), 0});
    color[t.root()] = Grey;
    while (!stack.empty()) {
        auto& [n, next] = stack.back();
        if (next < 2) {
            NodeId c = t.child(n, next++);
            if (t.is_blank(c)) continue;
            if (color[c] == Grey) return false;
            if (color[c] == White) {
                color[c] = Grey;
                stack.push_back({c, 0});
            }
        } else {
            color[n] = Black;
            stack.pop_back();
        }
    }
    return true;
}

int finite_depth(const RegularTree& t) {
    if (!is_finite_tree(t)) throw Error("finite_depth: tree has an infinite non-blank part");
    std::unordered_map<NodeId, int> memo;
    // Post-order without recursion.
    std::vector<std::pair<NodeId, int>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto [n, phase] = stack.back();
        if (t.is_blank(n)) {
            memo[n] = -1;
            stack.pop_back();
            continue;
        }
        NodeId l = t.left(n), r = t.right(n);
        if (phase == 0) {
            stack.back().second = 1;
            if (!memo.count(l)) stack.push_back({l, 0});
            if (!memo.count(r)) stack.push_back({r, 0});
        } else {
            memo[n] = 1 + std::max(memo.at(l), memo.at(r));
            stack.pop_back();
        }
    }
    return memo.at(t.root());
}

Context make_context(const RegularTree& tree, const Address& hole) {
    if (!is_finite_tree(tree)) throw Error("context: tree not finite");
    NodeId n = tree.at(hole);
    if (tree.is_blank(n)) throw Error("context: hole at a blank node");
    if (!tree.is_blank(tree.left(n)) || !tree.is_blank(tree.right(n)))
        throw Error("context: children of the hole must be blank");
    return Context{tree, hole};
}

RegularTree graft(const Context& c, const RegularTree& t1, const RegularTree& t2) {
    return replace(replace(c.tree, c.hole + "0", t1), c.hole + "1", t2);
}

namespace {

bool is_path_node(const RegularTree& t, NodeId n) {
    return t.label(n) == kHash && t.degree(n) <= 1;
}

// Next node of the #-chain through n, or -1.
NodeId chain_next(const RegularTree& t, NodeId n) {
    if (!is_path_node(t, n) || t.degree(n) != 1) return -1;
    NodeId c = t.is_blank(t.left(n)) ? t.right(n) : t.left(n);
    return is_path_node(t, c) ? c : -1;
}

// Shortest (then leftmost) address of every node.
std::unordered_map<NodeId, Address> bfs_addresses(const RegularTree& t) {
    std::unordered_map<NodeId, Address> addr;
    std::deque<NodeId> work{t.root()};
    addr[t.root()] = "";
    while (!work.empty()) {
        NodeId n = work.front();
        work.pop_front();
        for (int d = 0; d < 2; ++d) {
            NodeId c = t.child(n, d);
            if (!addr.count(c)) {
                addr[c] = addr[n] + static_cast<char>('0' + d);
                work.push_back(c);
            }
        }
    }
    return addr;
}

} // namespace

std::vector<HashPath> maximal_hash_paths(const RegularTree& t) {
    std::vector<int> preds(t.size(), 0);
    for (NodeId n = 0; n < t.size(); ++n) {
        if (!is_path_node(t, n)) continue;
        NodeId nx = chain_next(t, n);
        if (nx >= 0) preds[nx]++;
    }
    auto addr = bfs_addresses(t);
    std::vector<HashPath> out;
    std::vector<bool> covered(t.size(), false);

    auto walk = [&](NodeId start) {
        HashPath p;
        p.start = addr.at(start);
        std::unordered_set<NodeId> in_walk;
        NodeId cur = start;
        while (cur >= 0) {
            if (in_walk.count(cur)) {
                p.looping = true;
                break;
            }
            in_walk.insert(cur);
            p.nodes.push_back(cur);
            covered[cur] = true;
            cur = chain_next(t, cur);
        }
        out.push_back(std::move(p));
    };

    for (NodeId n = 0; n < t.size(); ++n)
        if (is_path_node(t, n) && preds[n] == 0) walk(n);
    // Remaining path nodes sit on pure cycles.
    for (NodeId n = 0; n < t.size(); ++n)
        if (is_path_node(t, n) && !covered[n]) walk(n);
    return out;
}

RegularTree partial_hash_reduction(const RegularTree& t, const HashPath& p) {
    auto all = maximal_hash_paths(t);
    bool found = false;
    for (const HashPath& q : all)
        if (q.nodes == p.nodes && q.looping == p.looping) found = true;
    if (!found) throw Error("partial_hash_reduction: not a maximal #-path of this tree");

    NodeId start = p.nodes.front();
    NodeId last = p.nodes.back();
    std::vector<RegularTree::Node> ns = t.nodes();

    NodeId target;
    if (p.looping || t.degree(last) == 0) {
        target = static_cast<int>(ns.size());
        ns.push_back({kBlank, target, target});
    } else {
        target = t.is_blank(t.left(last)) ? t.right(last) : t.left(last);
    }
    for (auto& n : ns) {
        if (n.left == start) n.left = target;
        if (n.right == start) n.right = target;
    }
    return RegularTree::make(std::move(ns), t.root() == start ? target : t.root());
}

namespace {

// Resolution of the leading #-chain: the surviving node (-1 meaning the chain
// collapses to blank) plus the directions consumed.
struct ChainResolver {
    const RegularTree& t;
    std::unordered_map<NodeId, std::pair<NodeId, Address>> memo;

    std::pair<NodeId, Address> resolve(NodeId n) {
        std::vector<std::pair<NodeId, char>> path;
        std::unordered_set<NodeId> on_path;
        NodeId cur = n;
        std::pair<NodeId, Address> base;
        while (true) {
            auto it = memo.find(cur);
            if (it != memo.end()) {
                base = it->second;
                break;
            }
            if (on_path.count(cur)) {
                base = {-1, ""};
                break;
            }
            if (t.label(cur) != kHash || t.degree(cur) == 2) {
                base = {cur, ""};
                break;
            }
            if (t.degree(cur) == 0) {
                base = {-1, ""};
                break;
            }
            int d = t.is_blank(t.left(cur)) ? 1 : 0;
            on_path.insert(cur);
            path.push_back({cur, static_cast<char>('0' + d)});
            cur = t.child(cur, d);
        }
        Address suffix = base.second;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            suffix = it->second + suffix;
            NodeId res = base.first < 0 ? -1 : base.first;
            memo[it->first] = {res, suffix};
        }
        return path.empty() ? base : memo.at(n);
    }
};

} // namespace

std::optional<RegularTree> hash_projection(const RegularTree& t) {
    ChainResolver rs{t, {}};
    auto [rn, rdirs] = rs.resolve(t.root());
    if (rn < 0) return RegularTree::blank();

    // Rebuild the graph over surviving nodes; any surviving '#' label means
    // the projection does not exist.
    std::vector<RegularTree::Node> ns;
    std::unordered_map<NodeId, int> remap;
    std::deque<NodeId> work;
    int blank_slot = -1;
    auto intern = [&](NodeId old) -> int {
        if (old < 0 || t.is_blank(old)) {
            if (blank_slot < 0) {
                blank_slot = static_cast<int>(ns.size());
                ns.push_back({kBlank, blank_slot, blank_slot});
            }
            return blank_slot;
        }
        auto it = remap.find(old);
        if (it != remap.end()) return it->second;
        int id = static_cast<int>(ns.size());
        remap.emplace(old, id);
        ns.push_back({t.label(old), -1, -1});
        work.push_back(old);
        return id;
    };
    int root = intern(rn);
    bool residual_hash = false;
    while (!work.empty()) {
        NodeId old = work.front();
        work.pop_front();
        if (t.label(old) == kHash) residual_hash = true;
        int id = remap.at(old);
        for (int d = 0; d < 2; ++d) {
            auto [cn, cdirs] = rs.resolve(t.child(old, d));
            (void)cdirs;
            int ci = intern(cn);
            if (d == 0)
                ns[id].left = ci;
            else
                ns[id].right = ci;
        }
    }
    if (residual_hash) return std::nullopt;
    return RegularTree::make(std::move(ns), root);
}

HashInjection::HashInjection(const RegularTree& t) : t_(t) {
    defined_ = hash_projection(t).has_value();
}

HashInjection::Resolved HashInjection::resolve(NodeId n) const {
    std::vector<std::pair<NodeId, char>> path;
    std::unordered_set<NodeId> on_path;
    NodeId cur = n;
    Resolved base;
    while (true) {
        auto it = memo_.find(cur);
        if (it != memo_.end()) {
            base = it->second;
            break;
        }
        if (on_path.count(cur)) {
            base = {-1, ""};
            break;
        }
        if (t_.label(cur) != kHash || t_.degree(cur) == 2) {
            base = {cur, ""};
            break;
        }
        if (t_.degree(cur) == 0) {
            base = {-1, ""};
            break;
        }
        int d = t_.is_blank(t_.left(cur)) ? 1 : 0;
        on_path.insert(cur);
        path.push_back({cur, static_cast<char>('0' + d)});
        cur = t_.child(cur, d);
    }
    Address suffix = base.dirs;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        suffix = it->second + suffix;
        memo_[it->first] = {base.node, suffix};
    }
    return path.empty() ? base : memo_.at(n);
}

std::optional<Address> HashInjection::map(const Address& u) const {
    Resolved cur = resolve(t_.root());
    Address out = cur.dirs;
    if (cur.node < 0) return std::nullopt;
    for (char c : u) {
        if (c != '0' && c != '1') throw Error("hash_injection: bad address letter");
        NodeId next = t_.child(cur.node, c - '0');
        out += c;
        cur = resolve(next);
        if (cur.node < 0) return std::nullopt;
        out += cur.dirs;
    }
    return out;
}

} // namespace tg
