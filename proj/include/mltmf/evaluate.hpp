#pragma once

#include <map>
#include <string>
#include <vector>

#include "mltmf/ast.hpp"
#include "mltmf/interpretation.hpp"

namespace mltmf {

// Quantifier-free, variable-free normal form. Leaves are domain elements
// (as constants) or closed applications evaluable against the tables.
struct GroundFormula {
    Wff formula;
};

// Expands quantifiers over the finite domain: first-order binders become
// chained conjunctions/disjunctions, higher-order binders enumerate every
// relation / total function table of the bound symbol's arity (within
// budget). Truth constants introduced by higher-order expansion are folded.
GroundFormula ground(const Wff& f, const Interpretation& interp, const QuantifierBudget& budget);

// Classical two-valued truth under the tables. Free variables must be covered
// by `assignment`. Predicate-terms evaluate to the designated element pair.
bool evaluate(const Wff& f, const Interpretation& interp, const QuantifierBudget& budget,
              const std::map<std::string, std::string>& assignment = {});

// The distinct ground atoms of a formula, keyed and sorted by canonical text.
std::vector<Wff> collect_atoms(const Wff& f);
void collect_atoms_into(const Wff& f, std::map<std::string, Wff>& out);

namespace detail {

// Guards a higher-order expansion of `symbol` (arity `arity`, relation or
// function candidates) over a domain of `domain_size` elements. Returns the
// candidate count; throws BudgetExceeded when the budget does not permit it.
std::uint64_t check_ho_budget(const std::string& symbol, int arity, std::size_t domain_size,
                              bool function_candidates, const QuantifierBudget& budget);

// Folding constructors used by grounding.
Wff mk_not(Wff a);
Wff mk_and(Wff a, Wff b);
Wff mk_or(Wff a, Wff b);
Wff mk_implies(Wff a, Wff b);
Wff mk_iff(Wff a, Wff b);

}  // namespace detail

}  // namespace mltmf
