// JSON (de)serialization.  Saved documents use a fixed key order.
//
//   Tree              {"root": id, "nodes": [{"id": n, "props": [..], "children": [..]}]}
//   TransitionSystem  {"initial": id, "states": [{"id": n, "props": [..]}], "edges": [[from, to]]}
//   TilingInstance    {"tiles": [..], "H": [[t, t']], "V": [[t, t']], "F": [..], "L": [..], "n": n}
#pragma once

#include <stdexcept>
#include <string>

#include "btl/rewriter.hpp"
#include "btl/tiling.hpp"
#include "btl/tree.hpp"

namespace btl {

// Malformed JSON or a document of the wrong shape.  Tree validation errors
// surface as TreeError.
class JsonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Tree load_tree(const std::string& json);
std::string save_tree(const Tree& t);

TransitionSystem load_transition_system(const std::string& json);
std::string save_transition_system(const TransitionSystem& ts);

TilingInstance load_tiling_instance(const std::string& json);
std::string save_tiling_instance(const TilingInstance& I);

std::string rewrite_report_json(const RewriteReport& r);

std::string read_file(const std::string& path);

}  // namespace btl
