// Formula-to-formula translations.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "btl/formula.hpp"

namespace btl {

class RewriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Negation normal form: negations only on propositions, variables and root.
// Uses the until dual with G, the corrected since dual
//   !(a S b) == ((a & !b) S (!a & !b)) | (!b S (!b & wY false)),
// !Y a == wY !a, !Finf a == Ginf !a and !Ginf a == Finf !a.
Formula push_negations(const Formula& f);

// Only EX, EU and AU remain.  Input must be CTL-shaped.
Formula to_u_normal(const Formula& f);
// No A remains.  Input must be CTL-shaped.
Formula to_e_normal(const Formula& f);

// CTL+ to CTL; hybrid operators pass through.  CTL-shaped quantifiers are
// kept as they are, only their operands are translated.
Formula ctlplus_to_ctl(const Formula& f);

struct RewriteReport {
    Formula input;
    Formula output;
    std::size_t input_size = 0;
    std::size_t output_size = 0;
    bool satisfiability_only = false;  // the fairness step fired
    std::vector<std::string> fresh_props;
    std::set<int> steps;  // equivalences applied, numbered as in the pipeline
};

// Removes Finf, Ginf and Boolean path combinations; keeps Y, wY and S.
// The last step introduces fresh propositions named fresh_prefix + counter
// and only preserves satisfiability; it requires positive occurrences whose
// Finf arguments have no free variables.
RewriteReport eliminate_past_fairness(const Formula& f, const std::string& fresh_prefix = "_p");

// Output shape of the pipeline: every quantifier carries one basic operator
// and no Finf/Ginf occurs.
bool is_h1_past(const Formula& f);
// Every quantifier carries a single X/U/F/G with state operands and there
// are no past or fairness operators.
bool is_ctl_shaped(const Formula& f);

}  // namespace btl
