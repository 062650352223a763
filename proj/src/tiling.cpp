#include "btl/tiling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "btl/checker.hpp"
#include "btl/parser.hpp"

namespace btl {

void TilingInstance::validate() const {
    if (tiles.empty()) throw TilingError("tile set is empty");
    std::set<std::string> seen;
    for (const auto& t : tiles) {
        if (t.empty()) throw TilingError("empty tile name");
        if (!seen.insert(t).second) throw TilingError("duplicate tile '" + t + "'");
    }
    auto known = [&](const std::string& t, const char* where) {
        if (!seen.count(t)) throw TilingError(std::string("unknown tile '") + t + "' in " + where);
    };
    for (const auto& [a, b] : H) known(a, "H"), known(b, "H");
    for (const auto& [a, b] : V) known(a, "V"), known(b, "V");
    for (const auto& t : F) known(t, "F");
    for (const auto& t : L) known(t, "L");
    if (n < 0) throw TilingError("n must be nonnegative");
}

int TilingInstance::index(const std::string& tile) const {
    auto it = std::find(tiles.begin(), tiles.end(), tile);
    return it == tiles.end() ? -1 : static_cast<int>(it - tiles.begin());
}

std::string tile_prop(const std::string& tile) { return "p_" + tile; }

const std::vector<std::string>& tiling_part_names() {
    static const std::vector<std::string> names = {
        "chi2", "chi1", "chi3", "chi4a", "chi4b", "chi5", "chi6a", "chi6b", "chi7", "chi8a", "chi8b",
        "chi8c", "chi9a", "chi9b", "chi10", "psi1", "psi2", "psi3", "psi4", "psi5", "psi6", "psi7"};
    return names;
}

namespace {

const std::vector<std::string> kMarkers = {"row_e", "row_o", "pos_e", "pos_o", "q#", "o", "c"};

std::string canonical_part_name(std::string s) {
    // Greek spellings: χ is CE A7, ψ is CF 88 in UTF-8.
    auto replace = [&](const std::string& from, const std::string& to) {
        if (s.rfind(from, 0) == 0) s = to + s.substr(from.size());
    };
    replace("\xCF\x87", "chi");
    replace("\xCF\x88", "psi");
    replace("\xCE\xA7", "chi");
    std::string out;
    for (char ch : s)
        if (ch != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

// Builders for the encoding.  The only variable is x1.
struct Enc {
    const TilingInstance& I;
    int n;

    Formula P(const std::string& s) const { return prop(s); }
    Formula b(int i) const { return prop("b_" + std::to_string(i)); }
    Formula d(int i) const { return prop("d_" + std::to_string(i)); }
    Formula e(int i) const { return prop("e_" + std::to_string(i)); }
    Formula pt(const std::string& t) const { return prop(tile_prop(t)); }

    static Formula AG(Formula f) { return forall(always(std::move(f))); }
    static Formula EF(Formula f) { return exists(eventually(std::move(f))); }
    static Formula EX(Formula f) { return exists(next(std::move(f))); }
    static Formula AX(Formula f) { return forall(next(std::move(f))); }
    static Formula X1() { return var(1); }
    static Formula down(Formula f) { return bind(1, std::move(f)); }
    static Formula at_x(Formula f) { return at_var(1, std::move(f)); }
    static Formula and_(std::vector<Formula> fs) { return conj_all(fs); }
    static Formula or_(std::vector<Formula> fs) { return disj_all(fs); }
    // Path conjunction without dropping anything; used for E[...] bodies.
    static Formula pand(std::vector<Formula> fs) {
        Formula acc = fs.front();
        for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
        return acc;
    }

    Formula pos() const { return disj(P("pos_e"), P("pos_o")); }
    Formula row() const { return disj(P("row_e"), P("row_o")); }
    Formula first() const {
        std::vector<Formula> fs{P("o")};
        for (int i = 0; i < n; ++i) fs.push_back(neg(b(i)));
        return pand(fs);
    }
    Formula last() const {
        std::vector<Formula> fs;
        for (int i = 0; i < n; ++i) fs.push_back(b(i));
        return pand(fs);
    }
    // Path formula: stays inside the position sequence and its copies.
    Formula cur() const { return conj(always(neg(pos())), eventually(conj(P("c"), last()))); }
    Formula two(const char* even, const char* odd) const {
        return disj(conj(eventually(P(even)), neg(eventually(P(odd)))),
                    conj(eventually(P(odd)), neg(eventually(P(even)))));
    }
    Formula ppos() const { return two("pos_e", "pos_o"); }
    Formula prow() const { return two("row_e", "row_o"); }

    // /\_i (b_i <-> @x b_i) & (b <-> @x b)
    Formula same_bits_as_x() const {
        std::vector<Formula> fs;
        for (int i = 0; i < n; ++i) fs.push_back(iff(b(i), at_x(b(i))));
        fs.push_back(iff(P("b"), at_x(P("b"))));
        return pand(fs);
    }
    // /\_i (b_i <-> F(c & b_i)) & (b <-> F(c & b)), a path formula
    Formula bits_match_copy() const {
        std::vector<Formula> fs;
        for (int i = 0; i < n; ++i) fs.push_back(iff(b(i), eventually(conj(P("c"), b(i)))));
        fs.push_back(iff(P("b"), eventually(conj(P("c"), P("b")))));
        return pand(fs);
    }
    // The only child of its parent: @root EF(EX x & AX(guard -> x)).
    Formula unique_child(Formula guard) const {
        Formula ax = guard.empty() ? AX(X1()) : AX(implies(guard, X1()));
        return down(at_root(EF(conj(EX(X1()), ax))));
    }

    Formula chi1() const {
        std::vector<Formula> fs{or_({row(), pos(), P("q#"), P("o"), P("c")})};
        for (const auto& m : kMarkers) {
            std::vector<Formula> others;
            for (const auto& m2 : kMarkers)
                if (m2 != m) others.push_back(neg(P(m2)));
            fs.push_back(implies(P(m), pand(others)));
        }
        return AG(pand(fs));
    }
    Formula chi2() const {
        return conj(P("row_e"), AG(implies(row(), EX(conj(P("pos_e"), unique_child({}))))));
    }
    Formula chi3() const { return AG(implies(pos(), AX(first()))); }
    Formula chi4a() const {
        std::vector<Formula> fs{d(0)};
        for (int i = 1; i < n; ++i) fs.push_back(iff(d(i), conj(d(i - 1), b(i - 1))));
        fs.push_back(e(0));
        for (int i = 1; i < n; ++i) fs.push_back(iff(e(i), conj(e(i - 1), neg(b(i - 1)))));
        return AG(pand(fs));
    }
    Formula chi4b() const {
        int h = n - 1;
        std::vector<Formula> fs{P("o"),
                                disj(pand({e(h), b(h), at_x(neg(b(h)))}), conj(neg(e(h)), iff(b(h), at_x(b(h)))))};
        for (int i = 0; i <= n - 2; ++i)
            fs.push_back(or_({conj(e(i + 1), at_x(d(i + 1))), pand({e(i), b(i), at_x(neg(b(i)))}),
                              conj(neg(e(i)), iff(b(i), at_x(b(i))))}));
        return AG(implies(conj(P("o"), neg(last())), down(EX(pand(fs)))));
    }
    Formula chi5() const {
        return AG(conj(implies(P("o"), down(EX(conj(P("c"), same_bits_as_x())))),
                       implies(P("c"), down(AG(conj(P("c"), same_bits_as_x()))))));
    }
    Formula chi6a() const {
        return AG(implies(conj(P("o"), neg(last())),
                          pand({EX(conj(P("o"), unique_child(P("o")))), EX(conj(P("c"), unique_child(P("c")))),
                                AX(disj(P("o"), P("c")))})));
    }
    Formula chi6b() const {
        return AG(implies(conj(P("o"), last()),
                          pand({EX(conj(P("c"), unique_child(P("c")))),
                                EX(conj(neg(P("c")), unique_child(neg(P("c"))))),
                                AX(or_({P("c"), pos(), row(), P("q#")}))})));
    }
    Formula chi7() const { return AG(implies(row(), EX(AX(exists(conj(cur(), always(neg(P("b"))))))))); }
    Formula chi8a() const {
        return AG(implies(conj(first(), exists(conj(cur(), always(P("b"))))),
                          exists(conj(always(neg(pos())),
                                      eventually(pand({P("o"), last(), EX(disj(row(), P("q#")))}))))));
    }
    Formula theta2() const {
        Formula inner = implies(conj(ppos(), [&] {
                                    std::vector<Formula> fs;
                                    for (int i = 0; i < n; ++i) fs.push_back(iff(b(i), eventually(conj(P("c"), b(i)))));
                                    return pand(fs);
                                }()),
                                iff(P("b"), eventually(conj(P("c"), P("b")))));
        std::vector<Formula> match;
        match.push_back(P("c"));
        for (int i = 0; i < n; ++i) match.push_back(iff(b(i), at_x(b(i))));
        Formula body = pand({always(neg(pos())), eventually(X1()), eventually(pand(match)),
                             always(implies(conj(P("o"), neg(X1())), forall(inner)))});
        return at_root(EF(conj(first(), exists(body))));
    }
    Formula theta1() const {
        Formula flipped = pand({P("o"), same_bits_as_x(),
                                EX(conj(neg(P("c")), implies(P("o"), exists(conj(cur(), always(neg(P("b")))))))) });
        Formula next_seq =
            pand({P("o"), last(), EX(conj(pos(), AX(exists(conj(cur(), eventually(flipped))))))});
        return down(conj(theta2(), exists(conj(cur(), eventually(next_seq)))));
    }
    Formula theta() const {
        Formula hi = pand({P("o"), neg(P("b")),
                           EX(conj(neg(P("c")), implies(P("o"), exists(conj(cur(), always(P("b"))))))), theta1()});
        return exists(conj(cur(), eventually(hi)));
    }
    Formula chi8b() const {
        Formula lhs = pand({first(),
                            exists(conj(always(neg(pos())), eventually(pand({P("c"), last(), P("b")})))),
                            exists(conj(cur(), eventually(neg(P("b")))))});
        return AG(implies(lhs, theta()));
    }
    Formula chi8c() const {
        Formula lhs =
            conj(first(), exists(conj(always(neg(pos())), eventually(pand({P("c"), last(), neg(P("b"))})))));
        Formula over = exists(conj(cur(), eventually(pand({P("o"), last(), EX(P("q#"))}))));
        return AG(implies(lhs, disj(over, theta())));
    }
    Formula chi9a() const {
        Formula succ = conj(pos(), EX(exists(conj(cur(), eventually(pand({P("o"), last(), EX(X1())}))))));
        return AG(implies(pos(), down(at_root(AG(implies(succ, iff(P("pos_e"), at_x(P("pos_o")))))))));
    }
    Formula chi9b() const {
        Formula path = pand({always(neg(row())), eventually(conj(P("c"), last())),
                             eventually(pand({P("o"), last(), EX(X1())}))});
        Formula succ = conj(row(), EX(exists(path)));
        return AG(implies(row(), down(at_root(AG(implies(succ, iff(P("row_e"), at_x(P("row_o")))))))));
    }
    Formula chi10() const { return AG(implies(P("pos_e"), EX(unique_child({})))); }

    Formula psi1() const {
        return conj(forall(implies(always(neg(P("c"))), eventually(P("q#")))),
                    AG(implies(P("q#"), AG(P("q#")))));
    }
    Formula psi2() const {
        std::vector<Formula> one;
        for (const auto& t : I.tiles) {
            std::vector<Formula> fs{pt(t)};
            for (const auto& t2 : I.tiles)
                if (t2 != t) fs.push_back(neg(pt(t2)));
            one.push_back(pand(fs));
        }
        std::vector<Formula> keep;
        for (const auto& t : I.tiles) keep.push_back(iff(pt(t), EX(conj(P("o"), pt(t)))));
        return AG(conj(implies(P("o"), or_(one)), implies(conj(P("o"), neg(last())), pand(keep))));
    }
    Formula psi3() const {
        std::vector<Formula> fs;
        for (const auto& t2 : I.tiles) {
            std::vector<Formula> left;
            for (const auto& [t, u] : I.H)
                if (u == t2) left.push_back(pt(t));
            Formula prev_pos = pand({first(), neg(X1()),
                                     exists(pand({eventually(X1()), ppos(), always(neg(row()))}))});
            fs.push_back(implies(pt(t2), down(at_root(AG(implies(prev_pos, or_(left)))))));
        }
        return AG(implies(first(), pand(fs)));
    }
    Formula xi() const {
        Formula reach = always(implies(neg(P("c")), EF(X1())));
        Formula a = exists(pand({eventually(X1()), reach, prow()}));
        Formula inner = pand({reach, eventually(exists(conj(always(neg(pos())), eventually(X1())))),
                              bits_match_copy()});
        Formula bcase = exists(conj(cur(), always(implies(P("o"), exists(inner)))));
        return pand({first(), a, bcase});
    }
    Formula psi4() const {
        std::vector<Formula> fs;
        for (const auto& t2 : I.tiles) {
            std::vector<Formula> below;
            for (const auto& [t, u] : I.V)
                if (u == t2) below.push_back(pt(t));
            Formula at_end = pand({P("o"), last(), down(at_root(AG(implies(xi(), or_(below)))))});
            fs.push_back(implies(pt(t2), exists(conj(cur(), eventually(at_end)))));
        }
        return AG(implies(first(), pand(fs)));
    }
    Formula psi5() const {
        Formula lhs = conj(first(), exists(conj(cur(), eventually(pand({P("o"), last(), neg(P("b"))})))));
        std::vector<Formula> per_tile;
        for (const auto& t : I.tiles) {
            std::vector<Formula> moves;
            for (const auto& [h1, t2] : I.H) {
                if (h1 != t) continue;
                Formula placed =
                    exists(conj(cur(), eventually(pand({P("o"), last(), EX(conj(pos(), EX(pt(t2))))}))));
                std::vector<Formula> blocked;
                for (const auto& t3 : I.tiles) {
                    bool ok = std::find(I.V.begin(), I.V.end(), std::make_pair(t3, t2)) != I.V.end();
                    if (ok) continue;
                    blocked.push_back(
                        exists(conj(cur(), eventually(pand({P("o"), last(), EX(conj(pt(t3), EF(X1())))})))));
                }
                Formula refuted = exists(conj(
                    cur(), eventually(pand({P("o"), last(), down(at_root(EF(conj(xi(), or_(blocked)))))}))));
                moves.push_back(disj(placed, refuted));
            }
            per_tile.push_back(implies(pt(t), and_(moves)));
        }
        return AG(implies(lhs, and_(per_tile)));
    }
    Formula psi6() const {
        std::vector<Formula> start;
        for (const auto& t : I.F) start.push_back(pt(t));
        Formula in_first_row = down(at_root(EX(exists(conj(always(neg(row())), eventually(X1()))))));
        return AG(implies(conj(first(), in_first_row), or_(start)));
    }
    Formula psi7() const {
        std::vector<Formula> fin;
        for (const auto& t : I.L) fin.push_back(pt(t));
        Formula lhs = pand({P("o"), last(), P("b"), EX(P("q#"))});
        Formula rowpath =
            pand({always(neg(row())), eventually(X1()), always(implies(first(), or_(fin)))});
        return AG(implies(lhs, down(at_root(EF(conj(row(), EX(exists(rowpath))))))));
    }
};

std::set<std::string> reserved_props(int n) {
    std::set<std::string> r(kMarkers.begin(), kMarkers.end());
    r.insert("b");
    for (int i = 0; i < n; ++i) {
        r.insert("b_" + std::to_string(i));
        r.insert("d_" + std::to_string(i));
        r.insert("e_" + std::to_string(i));
    }
    return r;
}

}  // namespace

Formula TilingEncoding::part(const std::string& name) const {
    std::string key = canonical_part_name(name);
    for (const auto& [n, f] : parts)
        if (n == key) return f;
    static const std::map<std::string, std::vector<std::string>> groups = {
        {"chi4", {"chi4a", "chi4b"}},
        {"chi6", {"chi6a", "chi6b"}},
        {"chi8", {"chi8a", "chi8b", "chi8c"}},
        {"chi9", {"chi9a", "chi9b"}}};
    auto g = groups.find(key);
    if (g == groups.end()) throw TilingError("unknown encoder part '" + name + "'");
    std::vector<Formula> fs;
    for (const auto& m : g->second) fs.push_back(part(m));
    return conj_all(fs);
}

TilingEncoding encode_tiling_parts(const TilingInstance& I) {
    I.validate();
    if (I.n < 1) throw TilingError("the encoder needs n >= 1");
    auto reserved = reserved_props(I.n);
    for (const auto& t : I.tiles) {
        if (reserved.count(t) || reserved.count(tile_prop(t)))
            throw TilingError("tile name '" + t + "' clashes with a reserved proposition");
        if (!is_valid_prop_name(tile_prop(t)))
            throw TilingError("tile name '" + t + "' does not give a valid proposition name");
    }
    Enc e{I, I.n};
    TilingEncoding out;
    out.parts = {{"chi2", e.chi2()},   {"chi1", e.chi1()},   {"chi3", e.chi3()},   {"chi4a", e.chi4a()},
                 {"chi4b", e.chi4b()}, {"chi5", e.chi5()},   {"chi6a", e.chi6a()}, {"chi6b", e.chi6b()},
                 {"chi7", e.chi7()},   {"chi8a", e.chi8a()}, {"chi8b", e.chi8b()}, {"chi8c", e.chi8c()},
                 {"chi9a", e.chi9a()}, {"chi9b", e.chi9b()}, {"chi10", e.chi10()}, {"psi1", e.psi1()},
                 {"psi2", e.psi2()},   {"psi3", e.psi3()},   {"psi4", e.psi4()},   {"psi5", e.psi5()},
                 {"psi6", e.psi6()},   {"psi7", e.psi7()}};
    Formula acc = out.parts.front().second;
    for (std::size_t i = 1; i < out.parts.size(); ++i) acc = conj(acc, out.parts[i].second);
    out.formula = acc;
    return out;
}

Formula encode_tiling(const TilingInstance& I) { return encode_tiling_parts(I).formula; }

TilingInstance corollary_instance(int n) {
    if (n < 0) throw TilingError("n must be nonnegative");
    TilingInstance I;
    I.n = n;
    for (const char* b : {"0", "1"})
        for (const char* x : {"l", "f", "s"}) I.tiles.push_back(std::string(b) + x);
    I.F = {"0l", "0s"};
    for (const char* b : {"0", "1"}) {
        std::string bb = b;
        I.H.push_back({"0l", bb + "s"});
        I.H.push_back({"1l", bb + "f"});
        I.H.push_back({"0f", bb + "s"});
        I.H.push_back({"1f", bb + "f"});
        I.H.push_back({"0s", bb + "s"});
        I.H.push_back({"1s", bb + "s"});
    }
    std::sort(I.H.begin(), I.H.end());
    I.V = {{"0l", "1l"}, {"1l", "0l"}};
    for (const char* x : {"f", "s"}) {
        std::string xx = x;
        I.V.push_back({"0f", "1" + xx});
        I.V.push_back({"1f", "0" + xx});
        I.V.push_back({"0s", "0" + xx});
        I.V.push_back({"1s", "1" + xx});
    }
    std::sort(I.V.begin(), I.V.end());
    I.L = {"1l", "1f"};
    return I;
}

const char* verdict_name(TilingVerdict v) {
    switch (v) {
        case TilingVerdict::EWins: return "E-wins";
        case TilingVerdict::AWins: return "A-wins";
        case TilingVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

class TilingGame {
public:
    TilingGame(const TilingInstance& I, int width, std::size_t budget) : W_(width), budget_(budget) {
        I.validate();
        m_ = static_cast<int>(I.tiles.size());
        H_.assign(m_ * m_, 0);
        V_.assign(m_ * m_, 0);
        for (const auto& [a, b] : I.H) H_[I.index(a) * m_ + I.index(b)] = 1;
        for (const auto& [a, b] : I.V) V_[I.index(a) * m_ + I.index(b)] = 1;
        F_.assign(m_, 0);
        L_.assign(m_, 0);
        for (const auto& t : I.F) F_[I.index(t)] = 1;
        for (const auto& t : I.L) L_[I.index(t)] = 1;
        // Row codes must fit in 62 bits together with the prefix length.
        std::uint64_t cap = 1;
        for (int j = 0; j < W_; ++j) {
            if (cap > (std::uint64_t{1} << 28) / static_cast<std::uint64_t>(m_))
                throw TilingBudgetExceeded("board row space too large");
            cap *= static_cast<std::uint64_t>(m_);
        }
        rowspace_ = cap;
    }

    // Legal tiles at column j given the row above (empty for the first row).
    std::vector<int> moves(const std::vector<int>& above, const std::vector<int>& prefix) const {
        std::vector<int> out;
        std::size_t j = prefix.size();
        for (int t = 0; t < m_; ++t) {
            if (j > 0 && !H_[prefix[j - 1] * m_ + t]) continue;
            if (above.empty() ? !F_[t] : !V_[above[j] * m_ + t]) continue;
            out.push_back(t);
        }
        return out;
    }

    bool all_final(const std::vector<int>& row) const {
        return std::all_of(row.begin(), row.end(), [&](int t) { return L_[t] != 0; });
    }

    // E forces a win within rows [r, max_rows).
    bool bounded(int r, const std::vector<int>& above, std::vector<int>& prefix) {
        std::uint64_t key = ((static_cast<std::uint64_t>(r) * (W_ + 1) + prefix.size()) * (rowspace_ + 1) +
                             (above.empty() ? rowspace_ : code(above))) *
                                rowspace_ +
                            code(prefix);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (memo_.size() >= budget_) throw TilingBudgetExceeded("tiling search exceeds the state budget");
        bool e_turn = prefix.size() % 2 == 0;
        bool result = !e_turn;
        for (int t : moves(above, prefix)) {
            prefix.push_back(t);
            bool win;
            if (static_cast<int>(prefix.size()) == W_) {
                if (all_final(prefix))
                    win = true;
                else if (r + 1 >= max_rows_)
                    win = false;
                else {
                    std::vector<int> row = prefix, empty;
                    win = bounded(r + 1, row, empty);
                }
            } else {
                win = bounded(r, above, prefix);
            }
            prefix.pop_back();
            if (e_turn && win) {
                result = true;
                break;
            }
            if (!e_turn && !win) {
                result = false;
                break;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    bool solve_bounded(int max_rows) {
        max_rows_ = max_rows;
        if (max_rows <= 0) return false;
        std::vector<int> above, prefix;
        return bounded(0, above, prefix);
    }

    // Attractor of E's winning positions in the unbounded game.
    bool solve_unbounded(std::size_t& positions) {
        struct Pos {
            std::vector<int> above, prefix;
            std::vector<int> succ;  // -1 marks an immediate win for E
            bool e_turn;
        };
        std::vector<Pos> nodes;
        std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
        auto intern = [&](const std::vector<int>& above, const std::vector<int>& prefix) {
            auto key = std::make_pair(above, prefix);
            auto it = index.find(key);
            if (it != index.end()) return it->second;
            if (nodes.size() >= budget_) throw TilingBudgetExceeded("tiling game graph exceeds the state budget");
            int id = static_cast<int>(nodes.size());
            index.emplace(key, id);
            nodes.push_back({above, prefix, {}, prefix.size() % 2 == 0});
            return id;
        };
        intern({}, {});
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            std::vector<int> above = nodes[i].above, prefix = nodes[i].prefix;
            std::vector<int> succ;
            for (int t : moves(above, prefix)) {
                std::vector<int> p = prefix;
                p.push_back(t);
                if (static_cast<int>(p.size()) == W_)
                    succ.push_back(all_final(p) ? -1 : intern(p, {}));
                else
                    succ.push_back(intern(above, p));
            }
            nodes[i].succ = std::move(succ);
        }
        positions = nodes.size();
        std::vector<char> win(nodes.size(), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = nodes.size(); i-- > 0;) {
                if (win[i]) continue;
                const auto& nd = nodes[i];
                bool w;
                if (nd.e_turn)
                    w = std::any_of(nd.succ.begin(), nd.succ.end(), [&](int s) { return s < 0 || win[s]; });
                else
                    w = std::all_of(nd.succ.begin(), nd.succ.end(), [&](int s) { return s < 0 || win[s]; });
                if (w) {
                    win[i] = 1;
                    changed = true;
                }
            }
        }
        return win[0] != 0;
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    std::uint64_t code(const std::vector<int>& row) const {
        std::uint64_t c = 0;
        for (int t : row) c = c * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(t);
        return c;
    }

    int W_;
    int m_ = 0;
    int max_rows_ = 0;
    std::size_t budget_;
    std::uint64_t rowspace_ = 1;
    std::vector<char> H_, V_, F_, L_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

TilingResult solve_tiling(const TilingInstance& I, int width, int max_rows, std::size_t state_budget) {
    if (width < 1) throw TilingError("width must be positive");
    if (max_rows < 0) throw TilingError("max_rows must be nonnegative");
    TilingGame g(I, width, state_budget);
    TilingResult res;
    bool bounded = g.solve_bounded(max_rows);
    res.bounded_states = g.memo_size();
    if (bounded) {
        res.verdict = TilingVerdict::EWins;
        return res;
    }
    bool unbounded = g.solve_unbounded(res.unbounded_states);
    res.verdict = unbounded ? TilingVerdict::Inconclusive : TilingVerdict::AWins;
    return res;
}

bool strategy_tree_check(const Tree& t, const TilingInstance& I) { return models(t, encode_tiling(I)); }

}  // namespace btl
