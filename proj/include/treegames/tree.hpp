#ifndef TREEGAMES_TREE_HPP
#define TREEGAMES_TREE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "treegames/common.hpp"

namespace tg {

// Labels are plain symbols. "_" is the blank label (a whole missing subtree),
// "#" marks nodes that vanish under hash projection.
using Symbol = std::string;
inline const Symbol kBlank = "_";
inline const Symbol kHash = "#";

using NodeId = int;
// Binary address: a string over '0'/'1'; "" is the root.
using Address = std::string;

enum class NodeClass { FullyBranching, Redundant, Dead, Blank };

// Finite rooted graph denoting an infinite binary labelled tree. Both child
// maps are total; following left/right from the root unfolds the denotation.
//
// Canonical form maintained by every constructor path:
//   - at most one blank node, self-looping, shared as the blank sink;
//   - blank closure (children of a blank node are blank) holds by the above;
//   - every node is reachable from the root.
// Values are immutable after construction.
class RegularTree {
public:
    struct Node {
        Symbol label;
        NodeId left = 0;
        NodeId right = 0;
    };

    // Builds from raw nodes; redirects children of blank-labelled nodes to a
    // single sink, prunes unreachable nodes, keeps the root at index 0.
    static RegularTree make(std::vector<Node> nodes, NodeId root);
    // The one-node blank tree.
    static RegularTree blank();
    // Single non-blank label over blanks.
    static RegularTree leaf(const Symbol& s);
    // Root `s` over the two given subtrees.
    static RegularTree pair(const Symbol& s, const RegularTree& l, const RegularTree& r);

    int size() const { return static_cast<int>(nodes_.size()); }
    NodeId root() const { return root_; }
    const Symbol& label(NodeId n) const { return nodes_[n].label; }
    NodeId child(NodeId n, int dir) const { return dir == 0 ? nodes_[n].left : nodes_[n].right; }
    NodeId left(NodeId n) const { return nodes_[n].left; }
    NodeId right(NodeId n) const { return nodes_[n].right; }
    bool is_blank(NodeId n) const { return nodes_[n].label == kBlank; }
    const std::vector<Node>& nodes() const { return nodes_; }

    // Node reached by following `u` from the root (total).
    NodeId at(const Address& u) const;

    // Degree = number of non-blank children.
    int degree(NodeId n) const;

    std::vector<Symbol> labels_used() const;

private:
    std::vector<Node> nodes_;
    NodeId root_ = 0;
};

// t(u), total by blank closure.
Symbol label_at(const RegularTree& t, const Address& u);

// The subtree rooted at u: denotes v |-> t(uv).
RegularTree subtree(const RegularTree& t, const Address& u);

// t[u := s]. Rejects a replacement that would break blank closure: u below a
// blank node with s not blank.
RegularTree replace(const RegularTree& t, const Address& u, const RegularTree& s);

NodeClass classify_node(const RegularTree& t, const Address& u);

// Denotational equality of the unfolded trees, decided by bisimulation of the
// two pointed graphs (product reachability).
bool tree_equal(const RegularTree& a, const RegularTree& b);

// Labels of the truncated unfolding in BFS order, for bounded oracles and
// debugging output.
std::vector<Symbol> unfold_to_depth(const RegularTree& t, int depth);

// True iff the non-blank part is acyclic (the tree denotes a finite tree).
bool is_finite_tree(const RegularTree& t);
// Depth of the non-blank part; requires is_finite_tree.
int finite_depth(const RegularTree& t);

// A finite tree with both children of `hole` blank; grafting fills them back.
struct Context {
    RegularTree tree;
    Address hole;
};

Context make_context(const RegularTree& tree, const Address& hole);

// t_u[t1, t2] = t[u0 := t1, u1 := t2].
RegularTree graft(const Context& c, const RegularTree& t1, const RegularTree& t2);

// A maximal chain of redundant-or-dead '#' nodes in the graph representation.
// `looping` marks chains that reach a cycle (an infinite #-path of the
// denotation). For tree-shaped graphs the node sequence is also the address
// sequence starting at `start`.
struct HashPath {
    std::vector<NodeId> nodes;
    Address start;
    bool looping = false;
};

std::vector<HashPath> maximal_hash_paths(const RegularTree& t);

// Collapses one maximal #-path: the start node is replaced by the blank tree
// (looping or dead-ending path) or by the subtree under the last node's
// non-blank child. `p` must be a maximal #-path of `t`.
RegularTree partial_hash_reduction(const RegularTree& t, const HashPath& p);

// Collapses every #-path (order irrelevant by strong confluence); nullopt if
// a '#' label survives, e.g. at a fully branching '#' node.
std::optional<RegularTree> hash_projection(const RegularTree& t);

// The injection from addresses of hash_projection(t) back to addresses of t.
// map(u) is nullopt where the walk falls into a collapsed-to-blank region.
class HashInjection {
public:
    explicit HashInjection(const RegularTree& t);
    bool defined() const { return defined_; }
    std::optional<Address> map(const Address& u) const;

private:
    struct Resolved {
        NodeId node;      // first non-collapsing node on the chain, -1 if blank
        Address dirs;     // directions consumed by the chain
    };
    Resolved resolve(NodeId n) const;

    RegularTree t_;
    bool defined_ = false;
    mutable std::unordered_map<NodeId, Resolved> memo_;
};

} // namespace tg

#endif
