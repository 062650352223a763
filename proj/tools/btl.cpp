// btl: command-line front end.  Exit codes: 0 ok/true, 1 false/loser,
// 2 usage or input error, 3 budget exceeded or bound inconclusive.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "btl/checker.hpp"
#include "btl/formula.hpp"
#include "btl/game.hpp"
#include "btl/json_io.hpp"
#include "btl/models.hpp"
#include "btl/parser.hpp"
#include "btl/rewriter.hpp"
#include "btl/sat.hpp"
#include "btl/tiling.hpp"
#include "json.hpp"

using namespace btl;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit(const ojson& j, const std::string& text) {
    if (g_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

ojson tree_json(const Tree& t) { return ojson::parse(save_tree(t)); }

Formula read_formula(const std::string& text, const std::string& file) {
    if (!text.empty() && !file.empty()) throw Usage("give either --formula or --file");
    if (text.empty() && file.empty()) throw Usage("a formula is required (--formula or --file)");
    std::string src = text.empty() ? read_file(file) : text;
    while (!src.empty() && (src.back() == '\n' || src.back() == '\r')) src.pop_back();
    return parse_formula(src);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

int to_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Usage(std::string("bad ") + what + " '" + s + "'");
}

PathMode parse_mode(const std::string& m) {
    if (m == "leaf-loop") return PathMode::LeafLoop;
    if (m == "strict") return PathMode::Strict;
    throw Usage("mode must be leaf-loop or strict");
}

// ---------------------------------------------------------------------------

struct ParseOpts {
    std::string formula, file;
};

int run_parse(const ParseOpts& o) {
    Formula f = read_formula(o.formula, o.file);
    Classification c = classify(f);
    ojson j;
    j["formula"] = print_formula(f);
    j["class"] = level_name(c.level);
    j["size"] = size(f);
    j["depth"] = depth(f);
    j["k"] = c.k;
    j["uses_past"] = c.uses_past;
    j["uses_fairness"] = c.uses_fairness;
    std::ostringstream os;
    os << print_formula(f) << "\nclass " << level_name(c.level) << ", size " << size(f) << ", depth " << depth(f)
       << ", k " << c.k << (c.uses_past ? ", past" : "") << (c.uses_fairness ? ", fairness" : "") << "\n";
    emit(j, os.str());
    return kOk;
}

struct CheckOpts {
    std::string tree, formula, file, mode = "leaf-loop", assign;
    std::optional<int> node;
};

int run_check(const CheckOpts& o) {
    Tree t = load_tree(read_file(o.tree));
    Formula f = read_formula(o.formula, o.file);
    int v = t.root();
    if (o.node) {
        v = t.find(*o.node);
        if (v < 0) throw Usage("no node with id " + std::to_string(*o.node));
    }
    Assignment u(static_cast<std::size_t>(max_var(f)), t.root());
    if (!o.assign.empty()) {
        auto ids = split_list(o.assign);
        if (ids.size() < u.size())
            throw Usage("formula uses " + std::to_string(u.size()) + " variables, --assign gives " +
                        std::to_string(ids.size()));
        u.clear();
        for (const auto& s : ids) {
            int w = t.find(to_int(s, "node id"));
            if (w < 0) throw Usage("no node with id " + s);
            u.push_back(w);
        }
    }
    bool r = check_state(t, v, u, f, parse_mode(o.mode));
    ojson j;
    j["result"] = r;
    j["node"] = t.ext_id(v);
    j["mode"] = o.mode;
    j["formula"] = print_formula(f);
    emit(j, std::string(r ? "true" : "false") + "\n");
    return r ? kOk : kFalse;
}

struct RewriteOpts {
    std::string pipeline, formula, file, prefix = "_p";
};

int run_rewrite(const RewriteOpts& o) {
    Formula f = read_formula(o.formula, o.file);
    RewriteReport rep;
    if (o.pipeline == "eliminate-past-fairness") {
        rep = eliminate_past_fairness(f, o.prefix);
    } else {
        rep.input = f;
        rep.input_size = size(f);
        if (o.pipeline == "u-normal")
            rep.output = to_u_normal(f);
        else if (o.pipeline == "e-normal")
            rep.output = to_e_normal(f);
        else if (o.pipeline == "to-ctl")
            rep.output = ctlplus_to_ctl(f);
        else if (o.pipeline == "nnf")
            rep.output = push_negations(f);
        else
            throw Usage("unknown pipeline '" + o.pipeline + "'");
        rep.output_size = size(rep.output);
    }
    std::ostringstream os;
    os << print_formula(rep.output) << "\nsize " << rep.input_size << " -> " << rep.output_size << "\n";
    if (rep.satisfiability_only) os << "satisfiability-preserving only (fresh:";
    if (rep.satisfiability_only) {
        for (const auto& p : rep.fresh_props) os << " " << p;
        os << ")\n";
    }
    emit(ojson::parse(rewrite_report_json(rep)), os.str());
    return kOk;
}

struct EncodeOpts {
    std::string instance, part;
    std::optional<int> n;
};

int run_encode(const EncodeOpts& o) {
    TilingInstance I = load_tiling_instance(read_file(o.instance));
    if (o.n) I.n = *o.n;
    TilingEncoding enc = encode_tiling_parts(I);
    Formula f = o.part.empty() ? enc.formula : enc.part(o.part);
    ojson j;
    j["part"] = o.part.empty() ? "all" : o.part;
    j["size"] = size(f);
    j["formula"] = print_formula(f);
    if (o.part.empty()) {
        j["parts"] = ojson::object();
        for (const auto& [name, g] : enc.parts) j["parts"][name] = size(g);
    }
    emit(j, print_formula(f) + "\nsize " + std::to_string(size(f)) + "\n");
    return kOk;
}

struct SolveTilingOpts {
    std::string instance;
    int width = 2, max_rows = 4;
    std::size_t budget = 2000000;
};

int run_solve_tiling(const SolveTilingOpts& o) {
    TilingInstance I = load_tiling_instance(read_file(o.instance));
    TilingResult r = solve_tiling(I, o.width, o.max_rows, o.budget);
    ojson j;
    j["verdict"] = verdict_name(r.verdict);
    j["width"] = o.width;
    j["max_rows"] = o.max_rows;
    j["bounded_states"] = r.bounded_states;
    j["unbounded_states"] = r.unbounded_states;
    emit(j, std::string(verdict_name(r.verdict)) + "\n");
    switch (r.verdict) {
        case TilingVerdict::EWins: return kOk;
        case TilingVerdict::AWins: return kFalse;
        case TilingVerdict::Inconclusive: return kBudget;
    }
    return kBudget;
}

struct GameSolveOpts {
    std::string left, right;
    int rounds = 1;
    std::size_t budget = 5000000;
};

int run_game_solve(const GameSolveOpts& o) {
    Tree l = load_tree(read_file(o.left)), r = load_tree(read_file(o.right));
    SolveStats st;
    Player p = solve_game(l, r, o.rounds, {}, {}, o.budget, &st);
    ojson j;
    j["winner"] = player_name(p);
    j["rounds"] = o.rounds;
    j["states"] = st.states;
    emit(j, std::string(player_name(p)) + "\n");
    return p == Player::Spoiler ? kOk : kFalse;
}

struct ReplayOpts {
    std::string script, left, right;
    std::optional<int> rounds;
};

int run_replay(const ReplayOpts& o) {
    Tree l = load_tree(read_file(o.left)), r = load_tree(read_file(o.right));
    ReplayResult res = replay(read_file(o.script), l, r, o.rounds);
    ojson j;
    j["winner"] = player_name(res.winner);
    j["rounds"] = res.rounds;
    j["a"] = res.a;
    j["a_prime"] = res.b;
    j["clauses"] = {{"root", res.check.root},
                    {"equality", res.check.equality},
                    {"props", res.check.props},
                    {"path", res.check.path},
                    {"child", res.check.child}};
    j["transcript"] = res.transcript;
    std::ostringstream os;
    for (const auto& line : res.transcript) os << line << "\n";
    os << "winner: " << player_name(res.winner) << "\n";
    emit(j, os.str());
    return res.winner == Player::Spoiler ? kOk : kFalse;
}

struct SatOpts {
    std::string formula, file, props, against, mode = "leaf-loop";
    int depth = 3, branch = 2, max_nodes = 0;
    std::size_t budget = 1000000;
};

int run_sat(const SatOpts& o) {
    Formula f = read_formula(o.formula, o.file);
    SearchBounds b;
    b.max_depth = o.depth;
    b.max_branching = o.branch;
    b.max_nodes = o.max_nodes;
    b.budget = o.budget;
    if (o.props.empty()) {
        auto ps = props_of(f);
        b.props.assign(ps.begin(), ps.end());
    } else {
        b.props = split_list(o.props);
    }
    PathMode mode = parse_mode(o.mode);
    ojson j;
    if (!o.against.empty()) {
        Formula g = parse_formula(o.against);
        if (o.props.empty())
            for (const auto& p : props_of(g))
                if (std::find(b.props.begin(), b.props.end(), p) == b.props.end()) b.props.push_back(p);
        EquisatResult r = equisat_check(f, g, b, mode);
        j["verdict"] = equisat_name(r.verdict);
        j["first_sat"] = r.f_sat;
        j["second_sat"] = r.g_sat;
        j["within_bounds_only"] = r.within_bounds_only;
        j["note"] = r.note;
        if (r.witness) j["witness"] = tree_json(*r.witness);
        std::string text = std::string(equisat_name(r.verdict)) + ": " + r.note + "\n";
        if (r.witness) text += save_tree(*r.witness);
        emit(j, text);
        if (r.verdict == EquisatVerdict::Inconclusive) return kBudget;
        return r.verdict == EquisatVerdict::Agree ? kOk : kFalse;
    }
    SatResult r = bounded_sat(f, b, mode);
    j["sat"] = r.model.has_value();
    j["candidates"] = r.candidates;
    if (r.model) j["model"] = tree_json(*r.model);
    emit(j, r.model ? "sat\n" + save_tree(*r.model) : std::string("unsat within bounds\n"));
    return r.model ? kOk : kFalse;
}

struct BuildOpts {
    std::string family;
    int index = 0, S = 1, N = 0;
    std::optional<int> depth;
};

int run_build(const BuildOpts& o) {
    TransitionSystem ts;
    if (o.family == "A")
        ts = build_A(o.index);
    else if (o.family == "B")
        ts = build_B(o.index, o.S, o.N);
    else
        throw Usage("family must be A or B");
    if (o.depth) {
        Tree t = unravel(ts, *o.depth);
        ojson j;
        j["tree"] = tree_json(t);
        j["nodes"] = t.size();
        j["height"] = t.height();
        j["max_black_on_path"] = max_black_on_path(t);
        emit(j, save_tree(t));
    } else {
        emit(ojson::parse(save_transition_system(ts)), save_transition_system(ts));
    }
    return kOk;
}

int fail(int code, const std::string& msg, const ojson& extra = ojson::object()) {
    if (g_json) {
        ojson j = extra;
        j["error"] = msg;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error: " << msg << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid branching-time logic workbench"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "Machine-readable output");

    int code = kOk;
    auto add_json = [](CLI::App* sc) { sc->add_flag("--json", g_json, "Machine-readable output"); };

    ParseOpts po;
    auto* sp = app.add_subcommand("parse", "Parse a formula and report metrics");
    sp->add_option("--formula", po.formula, "Formula text");
    sp->add_option("--file", po.file, "File holding the formula");
    add_json(sp);

    CheckOpts co;
    auto* sc = app.add_subcommand("check", "Evaluate a state formula on a tree");
    sc->add_option("--tree", co.tree, "Tree JSON file")->required();
    sc->add_option("--formula", co.formula, "Formula text");
    sc->add_option("--file", co.file, "File holding the formula");
    sc->add_option("--mode", co.mode, "leaf-loop or strict");
    sc->add_option("--node", co.node, "Evaluation node id (default: root)");
    sc->add_option("--assign", co.assign, "Comma-separated node ids for x1, x2, ...");
    add_json(sc);

    RewriteOpts ro;
    auto* sr = app.add_subcommand("rewrite", "Apply a rewrite pipeline");
    sr->add_option("--pipeline", ro.pipeline, "u-normal, e-normal, to-ctl, eliminate-past-fairness or nnf")
        ->required();
    sr->add_option("--formula", ro.formula, "Formula text");
    sr->add_option("--file", ro.file, "File holding the formula");
    sr->add_option("--fresh-prefix", ro.prefix, "Prefix of fresh propositions");
    add_json(sr);

    EncodeOpts eo;
    auto* se = app.add_subcommand("encode-tiling", "Encode a tiling instance as a formula");
    se->add_option("--instance", eo.instance, "Tiling instance JSON")->required();
    se->add_option("--part", eo.part, "Single part, e.g. chi4 or psi7");
    se->add_option("--n", eo.n, "Override the instance's n");
    add_json(se);

    SolveTilingOpts to;
    auto* st = app.add_subcommand("solve-tiling", "Solve the tiling game on a bounded board");
    st->add_option("--instance", to.instance, "Tiling instance JSON")->required();
    st->add_option("--width", to.width, "Board width")->required();
    st->add_option("--max-rows", to.max_rows, "Row cap")->required();
    st->add_option("--budget", to.budget, "State budget");
    add_json(st);

    GameSolveOpts go;
    auto* sg = app.add_subcommand("game-solve", "Solve the k-round core game");
    sg->add_option("--left", go.left, "Left tree JSON")->required();
    sg->add_option("--right", go.right, "Right tree JSON")->required();
    sg->add_option("--rounds", go.rounds, "Rounds k")->required();
    sg->add_option("--budget", go.budget, "State budget");
    add_json(sg);

    ReplayOpts rp;
    auto* sy = app.add_subcommand("game-replay", "Replay a game script");
    sy->add_option("--script", rp.script, "Script file")->required();
    sy->add_option("--left", rp.left, "Left tree JSON")->required();
    sy->add_option("--right", rp.right, "Right tree JSON")->required();
    sy->add_option("--rounds", rp.rounds, "Expected number of rounds");
    add_json(sy);

    SatOpts so;
    auto* ss = app.add_subcommand("sat", "Bounded satisfiability search");
    ss->add_option("--formula", so.formula, "Formula text");
    ss->add_option("--file", so.file, "File holding the formula");
    ss->add_option("--depth", so.depth, "Maximal tree depth");
    ss->add_option("--branch", so.branch, "Maximal branching");
    ss->add_option("--props", so.props, "Comma-separated proposition universe");
    ss->add_option("--max-nodes", so.max_nodes, "Maximal node count (0: unbounded)");
    ss->add_option("--budget", so.budget, "Candidate budget");
    ss->add_option("--mode", so.mode, "leaf-loop or strict");
    ss->add_option("--against", so.against, "Second formula for an equisatisfiability check");
    add_json(ss);

    BuildOpts bo;
    auto* sb = app.add_subcommand("build-model", "Build an A_i or B_k transition system");
    sb->add_option("--family", bo.family, "A or B")->required();
    sb->add_option("--index", bo.index, "i for A, k for B")->required();
    sb->add_option("--S", bo.S, "White path length of B");
    sb->add_option("--N", bo.N, "Index of the A copy inside B");
    sb->add_option("--depth", bo.depth, "Unravel to this depth and print the tree");
    add_json(sb);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*sp) code = run_parse(po);
        else if (*sc) code = run_check(co);
        else if (*sr) code = run_rewrite(ro);
        else if (*se) code = run_encode(eo);
        else if (*st) code = run_solve_tiling(to);
        else if (*sg) code = run_game_solve(go);
        else if (*sy) code = run_replay(rp);
        else if (*ss) code = run_sat(so);
        else if (*sb) code = run_build(bo);
    } catch (const ParseError& e) {
        ojson extra;
        extra["span"] = {e.span().start, e.span().end};
        extra["expected"] = e.expected();
        return fail(kUsage, e.what(), extra);
    } catch (const TilingBudgetExceeded& e) {
        return fail(kBudget, e.what());
    } catch (const SatBudgetExceeded& e) {
        return fail(kBudget, e.what());
    } catch (const GameError& e) {
        ojson extra;
        if (e.line() > 0) extra["line"] = e.line();
        return fail(e.code() == GameError::Code::BudgetExceeded ? kBudget : kUsage, e.what(), extra);
    } catch (const std::length_error& e) {
        return fail(kBudget, e.what());
    } catch (const std::exception& e) {
        return fail(kUsage, e.what());
    }
    return code;
}
