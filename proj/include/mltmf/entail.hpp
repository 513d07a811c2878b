#pragma once

#include <string>
#include <vector>

#include "mltmf/ast.hpp"
#include "mltmf/interpretation.hpp"

namespace mltmf {

struct ConsistencyVerdict {
    bool consistent = true;
    // One minimal (by deletion) unsatisfiable core when inconsistent.
    std::vector<Wff> core;
};

// Finite-domain entailment: S |= f over all interpretations of the signature
// with `domain_size` elements. Quantifiers are expanded over a canonical
// domain and the resulting ground atoms are treated as propositional
// variables, decided by a backtracking satisfiability search on S + {~f}
// (propagation of forced atoms, lexicographic atom order). Throws
// BudgetExceeded when the expansion exceeds budget.max_ground_atoms.
bool entails(const std::vector<Wff>& premises, const Wff& conclusion, const Signature& sig,
             int domain_size, const QuantifierBudget& budget);

// Satisfiability of the set under the same semantics.
ConsistencyVerdict check_consistency(const std::vector<Wff>& formulas, const Signature& sig,
                                     int domain_size, const QuantifierBudget& budget);

}  // namespace mltmf
