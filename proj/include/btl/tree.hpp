// Finite labeled trees and transition systems.
#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace btl {

class TreeError : public std::runtime_error {
public:
    enum class Code { Cycle, MultipleRoots, DanglingChild, DuplicateId, BadRoot, Empty };
    TreeError(Code c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    Code code() const { return code_; }

private:
    Code code_;
};

struct TreeNodeSpec {
    int id = 0;
    std::vector<std::string> props;
    std::vector<int> children;
};

// Nodes are stored in preorder (children in their given order), so the
// subtree of v occupies the index range [v, v + subtree_size(v)).
class Tree {
public:
    Tree();  // single unlabeled node with id 0

    // Validates: single root, acyclic, no dangling or duplicate ids,
    // every node reachable from the root.
    static Tree from_specs(int root_id, const std::vector<TreeNodeSpec>& nodes);
    // parent[i] < i for i > 0, node 0 is the root; ids are the indices.
    static Tree from_parents(const std::vector<int>& parent,
                             const std::vector<std::vector<std::string>>& labels);

    std::size_t size() const { return parent_.size(); }
    int root() const { return 0; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    bool is_leaf(int v) const { return children_[v].empty(); }
    int depth(int v) const { return depth_[v]; }
    int subtree_size(int v) const { return subtree_[v]; }
    int height() const { return height_; }
    // Ancestor-or-self.
    bool is_ancestor(int u, int w) const { return u <= w && w < u + subtree_[u]; }

    const std::vector<std::string>& props(int v) const { return labels_[v]; }
    bool has(int v, const std::string& p) const;

    int ext_id(int v) const { return ext_[v]; }
    // Internal index for an external id, or -1.
    int find(int ext_id) const;

    std::vector<TreeNodeSpec> specs() const;
    std::vector<int> leaves_below(int v) const;
    std::vector<int> path_from_root(int v) const;

private:
    void finish();

    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<int> ext_;
    std::vector<int> depth_;
    std::vector<int> subtree_;
    int height_ = 0;
};

struct TransitionSystem {
    struct State {
        int id = 0;
        std::vector<std::string> props;
    };
    int initial = 0;
    std::vector<State> states;
    std::vector<std::pair<int, int>> edges;

    int index_of(int id) const;
    // Validates ids and edges; throws std::invalid_argument.
    void validate() const;
    std::vector<std::vector<int>> successors() const;  // by state index
};

}  // namespace btl
