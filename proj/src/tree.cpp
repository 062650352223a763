#include "btl/tree.hpp"

#include <algorithm>
#include <map>

namespace btl {

Tree::Tree() {
    parent_ = {-1};
    children_ = {{}};
    labels_ = {{}};
    ext_ = {0};
    finish();
}

Tree Tree::from_specs(int root_id, const std::vector<TreeNodeSpec>& nodes) {
    if (nodes.empty()) throw TreeError(TreeError::Code::Empty, "tree has no nodes");
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!index.emplace(nodes[i].id, i).second)
            throw TreeError(TreeError::Code::DuplicateId, "duplicate node id " + std::to_string(nodes[i].id));
    }
    if (!index.count(root_id))
        throw TreeError(TreeError::Code::BadRoot, "root id " + std::to_string(root_id) + " is not a node");
    std::vector<int> parent_of(nodes.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (int c : nodes[i].children) {
            auto it = index.find(c);
            if (it == index.end())
                throw TreeError(TreeError::Code::DanglingChild, "node " + std::to_string(nodes[i].id) +
                                                                    " references missing id " + std::to_string(c));
            if (c == root_id || c == nodes[i].id)
                throw TreeError(TreeError::Code::Cycle, "cycle through node " + std::to_string(c));
            if (parent_of[it->second] != -1)
                throw TreeError(TreeError::Code::Cycle,
                                "node " + std::to_string(c) + " has more than one parent");
            parent_of[it->second] = static_cast<int>(i);
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id != root_id && parent_of[i] == -1)
            throw TreeError(TreeError::Code::MultipleRoots,
                            "node " + std::to_string(nodes[i].id) + " has no parent and is not the root");
    }
    // Preorder walk from the root; anything unvisited lies on a cycle.
    Tree t;
    t.parent_.clear();
    t.children_.clear();
    t.labels_.clear();
    t.ext_.clear();
    std::vector<std::pair<std::size_t, int>> stack{{index[root_id], -1}};
    std::vector<bool> seen(nodes.size(), false);
    while (!stack.empty()) {
        auto [i, par] = stack.back();
        stack.pop_back();
        if (seen[i]) throw TreeError(TreeError::Code::Cycle, "cycle through node " + std::to_string(nodes[i].id));
        seen[i] = true;
        int me = static_cast<int>(t.parent_.size());
        t.parent_.push_back(par);
        t.children_.emplace_back();
        if (par >= 0) t.children_[par].push_back(me);
        auto props = nodes[i].props;
        std::sort(props.begin(), props.end());
        props.erase(std::unique(props.begin(), props.end()), props.end());
        t.labels_.push_back(std::move(props));
        t.ext_.push_back(nodes[i].id);
        const auto& ch = nodes[i].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({index[*it], me});
    }
    if (t.parent_.size() != nodes.size())
        throw TreeError(TreeError::Code::Cycle, "some nodes are unreachable from the root (cycle)");
    t.finish();
    return t;
}

Tree Tree::from_parents(const std::vector<int>& parent, const std::vector<std::vector<std::string>>& labels) {
    std::vector<TreeNodeSpec> specs(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
        specs[i].id = static_cast<int>(i);
        if (i < labels.size()) specs[i].props = labels[i];
        if (i > 0) {
            if (parent[i] < 0 || static_cast<std::size_t>(parent[i]) >= i)
                throw TreeError(TreeError::Code::Cycle, "parent index must precede child");
            specs[parent[i]].children.push_back(static_cast<int>(i));
        }
    }
    return from_specs(0, specs);
}

void Tree::finish() {
    std::size_t n = parent_.size();
    depth_.assign(n, 0);
    subtree_.assign(n, 1);
    height_ = 0;
    for (std::size_t v = 1; v < n; ++v) {
        depth_[v] = depth_[parent_[v]] + 1;
        height_ = std::max(height_, depth_[v]);
    }
    for (std::size_t v = n; v-- > 1;) subtree_[parent_[v]] += subtree_[v];
}

bool Tree::has(int v, const std::string& p) const {
    const auto& l = labels_[v];
    return std::binary_search(l.begin(), l.end(), p);
}

int Tree::find(int ext_id) const {
    for (std::size_t i = 0; i < ext_.size(); ++i)
        if (ext_[i] == ext_id) return static_cast<int>(i);
    return -1;
}

std::vector<TreeNodeSpec> Tree::specs() const {
    std::vector<TreeNodeSpec> out(size());
    for (std::size_t v = 0; v < size(); ++v) {
        out[v].id = ext_[v];
        out[v].props = labels_[v];
        for (int c : children_[v]) out[v].children.push_back(ext_[c]);
    }
    return out;
}

std::vector<int> Tree::leaves_below(int v) const {
    std::vector<int> out;
    for (int w = v; w < v + subtree_[v]; ++w)
        if (children_[w].empty()) out.push_back(w);
    return out;
}

std::vector<int> Tree::path_from_root(int v) const {
    std::vector<int> out;
    for (int w = v; w >= 0; w = parent_[w]) out.push_back(w);
    std::reverse(out.begin(), out.end());
    return out;
}

int TransitionSystem::index_of(int id) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].id == id) return static_cast<int>(i);
    return -1;
}

void TransitionSystem::validate() const {
    std::map<int, int> seen;
    for (const auto& s : states)
        if (seen[s.id]++) throw std::invalid_argument("duplicate state id " + std::to_string(s.id));
    if (index_of(initial) < 0) throw std::invalid_argument("initial state " + std::to_string(initial) + " missing");
    for (auto [a, b] : edges)
        if (index_of(a) < 0 || index_of(b) < 0)
            throw std::invalid_argument("edge references missing state (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
}

std::vector<std::vector<int>> TransitionSystem::successors() const {
    std::vector<std::vector<int>> out(states.size());
    for (auto [a, b] : edges) out[index_of(a)].push_back(index_of(b));
    return out;
}

}  // namespace btl
