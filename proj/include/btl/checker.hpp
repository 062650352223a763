// Model checking on finite trees and evaluation on lasso words.
//
// Tree paths: E and A range over the paths from a node down to a leaf.  In
// leaf-loop mode the leaf repeats forever; in strict mode the path ends
// there (X is false at the last position, Finf is false, Ginf is true).
//
// Past operators on trees look at the node's history, which in a tree is
// the unique root path.  Y/wY/S therefore need state operands there and are
// state formulas; positions past the leaf denote the leaf node itself.
// Lasso words support arbitrary nesting of past and future; E and A are
// transparent there since each position has exactly one path, its suffix.
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "btl/formula.hpp"
#include "btl/tree.hpp"

namespace btl {

enum class PathMode { LeafLoop, Strict };

using Assignment = std::vector<int>;

struct TreePath {
    std::vector<int> nodes;  // start node first, leaf last
};

class CheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LassoWord {
    std::vector<std::set<std::string>> prefix;
    std::vector<std::set<std::string>> period;  // nonempty
};

// Evaluation engine bound to one tree; memo tables persist across calls so
// several formulas over the same tree share work on common subformulas.
class TreeChecker {
public:
    explicit TreeChecker(const Tree& t, PathMode mode = PathMode::LeafLoop);
    ~TreeChecker();
    TreeChecker(const TreeChecker&) = delete;
    TreeChecker& operator=(const TreeChecker&) = delete;

    bool check(const Formula& f, int v, const Assignment& u);
    bool check_path(const TreePath& pi, std::size_t i, const Assignment& u, const Formula& psi);
    // All-root assignment of length max_var(f), at the root.
    bool models(const Formula& f);

    const Tree& tree() const { return t_; }

private:
    struct Impl;
    const Tree& t_;
    std::unique_ptr<Impl> impl_;
};

bool check_state(const Tree& t, int v, const Assignment& u, const Formula& f,
                 PathMode mode = PathMode::LeafLoop);
bool check_path(const Tree& t, const TreePath& pi, std::size_t i, const Assignment& u, const Formula& psi,
                PathMode mode = PathMode::LeafLoop);
bool models(const Tree& t, const Formula& f, PathMode mode = PathMode::LeafLoop);

// Truth of psi at position 0 of prefix . period^omega.
bool lasso_eval(const LassoWord& w, const Formula& psi);
// Truth of psi at the given position.
bool lasso_eval_at(const LassoWord& w, const Formula& psi, std::size_t position);

}  // namespace btl
