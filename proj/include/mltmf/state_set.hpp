#pragma once

#include <string>
#include <vector>

#include "mltmf/ast.hpp"
#include "mltmf/evaluate.hpp"
#include "mltmf/interpretation.hpp"

namespace mltmf {

// A finite set of formulas together with the interpretation realizing them
// over an object/time domain. Formulas are kept sorted by canonical text and
// deduplicated; membership and equality compare desugared structure.
struct StateSet {
    std::string name;
    std::vector<std::string> objects;
    std::vector<std::string> times;
    std::vector<Wff> formulas;
    Interpretation realization;

    bool contains(const Wff& f) const;
    std::vector<std::string> formula_texts() const;
};

// Checked constructor: validates the realization, sorts/dedupes the formulas,
// and verifies that every formula evaluates true under the realization. A
// surviving model witnesses logical consistency, so the set's invariants hold
// by construction.
StateSet make_state_set(std::string name, std::vector<std::string> objects,
                        std::vector<std::string> times, std::vector<Wff> formulas,
                        Interpretation realization, const QuantifierBudget& budget);

// Sorts/dedupes without verifying truth; for loading artifacts whose
// verification is the caller's job (e.g. trace verification) and for tests
// that need broken inputs.
StateSet make_state_set_unchecked(std::string name, std::vector<std::string> objects,
                                  std::vector<std::string> times, std::vector<Wff> formulas,
                                  Interpretation realization);

// Re-runs the checked-constructor verification on an existing set.
void verify_state_set(const StateSet& s, const QuantifierBudget& budget);

// Set equality up to desugaring.
bool same_formulas(const std::vector<Wff>& a, const std::vector<Wff>& b);

// Sorted, deduplicated copy (canonical text order).
std::vector<Wff> canonical_formulas(std::vector<Wff> formulas);

// a \ b and a ∪ b with desugared membership; results stay canonical.
std::vector<Wff> formula_difference(const std::vector<Wff>& a, const std::vector<Wff>& b);
std::vector<Wff> formula_union(const std::vector<Wff>& a, const std::vector<Wff>& b);
bool formula_subset(const std::vector<Wff>& a, const std::vector<Wff>& b);
bool formulas_contain(const std::vector<Wff>& set, const Wff& f);

}  // namespace mltmf
