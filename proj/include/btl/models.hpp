// Transition-system unraveling, the A_i / B_k model families, and
// Ehrenfeucht games on {0,1}-strings.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "btl/tree.hpp"

namespace btl {

// Tree of all paths v0..vn (n <= depth) from the initial state.
// Throws std::length_error if the tree would exceed max_nodes.
Tree unravel(const TransitionSystem& ts, int depth, std::size_t max_nodes = 2000000);

// Black states carry "p".  A_i: black root, white state with a self-loop,
// and a copy of A_{i-1} whose black states are all successors of the white
// state.  State ids: black of level j is 2j, white of level j is 2j+1, so
// the root of A_i is 2i.
TransitionSystem build_A(int i);

// Black root, a white path of length S whose last state loops and returns
// to the root, plus a copy of A_N; every white path state has an edge to
// every black state of the copy.
TransitionSystem build_B(int k, int S, int N);

// Maximal number of p-labeled nodes on a root-to-leaf path.
int max_black_on_path(const Tree& t, const std::string& p = "p");

// Duplicator wins the k-round EF game on s, s' (linear orders with one
// unary predicate, '1' marking it).
bool string_ef_equiv(const std::string& s, const std::string& t, int k);

struct SResult {
    int S = 0;
    int search_bound = 0;
    bool stabilized = false;
    // Shortest representative for every string up to the bound.
    std::map<std::string, std::string> representative;
};

// Least S such that every string of length <= search_bound has an
// equivalent string of length <= S.  stabilized is set when S < search_bound,
// i.e. no string longer than S needed itself as representative.
SResult compute_S(int k, int search_bound = 10);

// N_0 = 0, N_k = N_{k-1} + max(S_3, S_k) + 1.  S must hold indices 1..k and 3.
int compute_N(int k, const std::map<int, int>& S);

}  // namespace btl
