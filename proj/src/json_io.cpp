#include "btl/json_io.hpp"

#include <fstream>
#include <sstream>

#include "btl/parser.hpp"
#include "json.hpp"

namespace btl {

using ojson = nlohmann::ordered_json;

namespace {

ojson parse_doc(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonError(std::string("malformed JSON: ") + e.what());
    }
}

const ojson& field(const ojson& obj, const char* key, const char* what) {
    if (!obj.is_object()) throw JsonError(std::string(what) + " must be an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw JsonError(std::string(what) + " lacks \"" + key + "\"");
    return *it;
}

int as_id(const ojson& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 2000000000)
        throw JsonError(std::string(what) + " must be a natural number");
    return static_cast<int>(v.get<long long>());
}

std::vector<std::string> as_strings(const ojson& v, const char* what) {
    if (!v.is_array()) throw JsonError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string()) throw JsonError(std::string(what) + " must be an array of strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> as_string_pairs(const ojson& v, const char* what) {
    if (!v.is_array()) throw JsonError(std::string(what) + " must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : v) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw JsonError(std::string(what) + " entries must be [tile, tile]");
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return out;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

Tree load_tree(const std::string& json) {
    ojson doc = parse_doc(json);
    int root = as_id(field(doc, "root", "tree"), "root");
    const ojson& nodes = field(doc, "nodes", "tree");
    if (!nodes.is_array()) throw JsonError("\"nodes\" must be an array");
    std::vector<TreeNodeSpec> specs;
    for (const auto& n : nodes) {
        TreeNodeSpec s;
        s.id = as_id(field(n, "id", "node"), "node id");
        if (n.contains("props")) s.props = as_strings(n["props"], "props");
        if (n.contains("children")) {
            const auto& ch = n["children"];
            if (!ch.is_array()) throw JsonError("children must be an array of ids");
            for (const auto& c : ch) s.children.push_back(as_id(c, "child id"));
        }
        specs.push_back(std::move(s));
    }
    return Tree::from_specs(root, specs);
}

std::string save_tree(const Tree& t) {
    ojson doc;
    doc["root"] = t.ext_id(t.root());
    doc["nodes"] = ojson::array();
    for (const auto& s : t.specs()) {
        ojson n;
        n["id"] = s.id;
        n["props"] = s.props;
        n["children"] = s.children;
        doc["nodes"].push_back(std::move(n));
    }
    return dump(doc);
}

TransitionSystem load_transition_system(const std::string& json) {
    ojson doc = parse_doc(json);
    TransitionSystem ts;
    ts.initial = as_id(field(doc, "initial", "transition system"), "initial");
    const ojson& states = field(doc, "states", "transition system");
    if (!states.is_array()) throw JsonError("\"states\" must be an array");
    for (const auto& s : states) {
        TransitionSystem::State st;
        st.id = as_id(field(s, "id", "state"), "state id");
        if (s.contains("props")) st.props = as_strings(s["props"], "props");
        ts.states.push_back(std::move(st));
    }
    const ojson& edges = field(doc, "edges", "transition system");
    if (!edges.is_array()) throw JsonError("\"edges\" must be an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw JsonError("edges must be [from, to] pairs");
        ts.edges.emplace_back(as_id(e[0], "edge source"), as_id(e[1], "edge target"));
    }
    try {
        ts.validate();
    } catch (const std::invalid_argument& e) {
        throw JsonError(e.what());
    }
    return ts;
}

std::string save_transition_system(const TransitionSystem& ts) {
    ojson doc;
    doc["initial"] = ts.initial;
    doc["states"] = ojson::array();
    for (const auto& s : ts.states) {
        ojson st;
        st["id"] = s.id;
        st["props"] = s.props;
        doc["states"].push_back(std::move(st));
    }
    doc["edges"] = ojson::array();
    for (const auto& [a, b] : ts.edges) doc["edges"].push_back({a, b});
    return dump(doc);
}

TilingInstance load_tiling_instance(const std::string& json) {
    ojson doc = parse_doc(json);
    TilingInstance I;
    I.tiles = as_strings(field(doc, "tiles", "tiling instance"), "tiles");
    I.H = as_string_pairs(field(doc, "H", "tiling instance"), "H");
    I.V = as_string_pairs(field(doc, "V", "tiling instance"), "V");
    I.F = as_strings(field(doc, "F", "tiling instance"), "F");
    I.L = as_strings(field(doc, "L", "tiling instance"), "L");
    I.n = as_id(field(doc, "n", "tiling instance"), "n");
    try {
        I.validate();
    } catch (const TilingError& e) {
        throw JsonError(e.what());
    }
    return I;
}

std::string save_tiling_instance(const TilingInstance& I) {
    ojson doc;
    doc["tiles"] = I.tiles;
    auto pairs = [](const std::vector<std::pair<std::string, std::string>>& ps) {
        ojson a = ojson::array();
        for (const auto& [x, y] : ps) a.push_back({x, y});
        return a;
    };
    doc["H"] = pairs(I.H);
    doc["V"] = pairs(I.V);
    doc["F"] = I.F;
    doc["L"] = I.L;
    doc["n"] = I.n;
    return dump(doc);
}

std::string rewrite_report_json(const RewriteReport& r) {
    ojson doc;
    doc["input"] = print_formula(r.input);
    doc["output"] = print_formula(r.output);
    doc["input_size"] = r.input_size;
    doc["output_size"] = r.output_size;
    doc["satisfiability_only"] = r.satisfiability_only;
    doc["fresh_props"] = r.fresh_props;
    doc["steps"] = std::vector<int>(r.steps.begin(), r.steps.end());
    return dump(doc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace btl
