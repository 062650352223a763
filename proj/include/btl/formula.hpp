// Formula AST shared by state and path formulas of hybrid CTL* with past
// and fairness operators.  Nodes are immutable and shared.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace btl {

enum class Kind : std::uint8_t {
    True,
    False,
    Prop,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Exists,
    Forall,
    Bind,    // down x_i . f
    Var,     // x_i
    AtVar,   // @x_i f
    Root,
    AtRoot,
    Next,
    Until,
    Eventually,
    Always,
    Prev,      // Y, false at position 0
    WeakPrev,  // wY, true at position 0
    Since,
    InfOften,     // Finf
    AlmostAlways  // Ginf
};

struct Node;

class Formula {
public:
    Formula() = default;
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    const Node& node() const { return *n_; }
    const Node* operator->() const { return n_.get(); }
    bool empty() const { return !n_; }
    Kind kind() const;
    const Formula& lhs() const;
    const Formula& rhs() const;
    const std::string& name() const;
    int var() const;

    // Structural equality.
    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }
    std::size_t hash() const;
    const void* identity() const { return n_.get(); }

private:
    std::shared_ptr<const Node> n_;
};

struct Node {
    Kind kind;
    std::string name;  // Prop
    int var = 0;       // Bind, Var, AtVar
    Formula a, b;
    std::size_t hash = 0;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Factories.
Formula top();
Formula bot();
Formula prop(const std::string& name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula exists(Formula path);
Formula forall(Formula path);
Formula bind(int var, Formula f);
Formula var(int i);
Formula at_var(int var, Formula f);
Formula root();
Formula at_root(Formula f);
Formula next(Formula f);
Formula until(Formula a, Formula b);
Formula eventually(Formula f);
Formula always(Formula f);
Formula prev(Formula f);
Formula weak_prev(Formula f);
Formula since(Formula a, Formula b);
Formula inf_often(Formula f);
Formula almost_always(Formula f);

// n-ary helpers; empty conjunction is true, empty disjunction is false.
// True conjuncts and false disjuncts are skipped.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

bool is_binary(Kind k);
bool is_unary(Kind k);
bool is_temporal(Kind k);

// State formulas: no temporal operator outside a quantifier, except the past
// operators Y, wY and S applied to state formulas (a node in a tree has a
// unique history, so these are state properties there).
bool is_state_formula(const Formula& f);

// |f| after expanding F, G, -> and <->.
std::size_t size(const Formula& f);
// Nesting depth of E/A.
std::size_t depth(const Formula& f);

enum class Level { CTL, CTLPlus, CTLStar };
const char* level_name(Level l);

struct Classification {
    Level level = Level::CTL;
    int k = 0;  // highest variable index
    bool uses_past = false;
    bool uses_fairness = false;
};
Classification classify(const Formula& f);

// A path formula that a CTL quantifier may carry: X, U, F, G, Y, wY, S,
// Finf or Ginf with state operands.
bool is_basic_path(const Formula& f);
// Boolean combination of basics and state formulas.
bool is_plus_path(const Formula& f);

// Expands F, G, -> and <-> into the U/not/and/or basis.
Formula normalize(const Formula& f);
// Expands only -> and <->.
Formula expand_sugar(const Formula& f);

std::set<std::string> props_of(const Formula& f);
int max_var(const Formula& f);
bool has_free_var(const Formula& f);
// Free variable indices (x_i occurrences and @x_i not under a down x_i).
std::set<int> free_vars(const Formula& f);

}  // namespace btl
