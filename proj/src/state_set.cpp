#include "mltmf/state_set.hpp"

#include <algorithm>

#include "mltmf/errors.hpp"

namespace mltmf {

bool StateSet::contains(const Wff& f) const { return formulas_contain(formulas, f); }

std::vector<std::string> StateSet::formula_texts() const {
    std::vector<std::string> out;
    out.reserve(formulas.size());
    for (const auto& f : formulas) out.push_back(format_formula(f));
    return out;
}

std::vector<Wff> canonical_formulas(std::vector<Wff> formulas) {
    std::sort(formulas.begin(), formulas.end(), WffLess{});
    formulas.erase(std::unique(formulas.begin(), formulas.end(),
                               [](const Wff& a, const Wff& b) { return compare(a, b) == 0; }),
                   formulas.end());
    return formulas;
}

bool formulas_contain(const std::vector<Wff>& set, const Wff& f) {
    const Wff key = desugar(f);
    return std::any_of(set.begin(), set.end(),
                       [&](const Wff& g) { return desugar(g) == key; });
}

bool formula_subset(const std::vector<Wff>& a, const std::vector<Wff>& b) {
    return std::all_of(a.begin(), a.end(), [&](const Wff& f) { return formulas_contain(b, f); });
}

bool same_formulas(const std::vector<Wff>& a, const std::vector<Wff>& b) {
    return formula_subset(a, b) && formula_subset(b, a);
}

std::vector<Wff> formula_difference(const std::vector<Wff>& a, const std::vector<Wff>& b) {
    std::vector<Wff> out;
    for (const auto& f : a)
        if (!formulas_contain(b, f)) out.push_back(f);
    return canonical_formulas(std::move(out));
}

std::vector<Wff> formula_union(const std::vector<Wff>& a, const std::vector<Wff>& b) {
    std::vector<Wff> out = a;
    for (const auto& f : b)
        if (!formulas_contain(out, f)) out.push_back(f);
    return canonical_formulas(std::move(out));
}

StateSet make_state_set_unchecked(std::string name, std::vector<std::string> objects,
                                  std::vector<std::string> times, std::vector<Wff> formulas,
                                  Interpretation realization) {
    StateSet s;
    s.name = std::move(name);
    s.objects = std::move(objects);
    s.times = std::move(times);
    s.formulas = canonical_formulas(std::move(formulas));
    s.realization = std::move(realization);
    return s;
}

void verify_state_set(const StateSet& s, const QuantifierBudget& budget) {
    validate_interpretation(s.realization);
    for (const auto& f : s.formulas) {
        if (!evaluate(f, s.realization, budget))
            throw Error(Errc::ResultInconsistent,
                        "formula not satisfied by the realization: " + format_formula(f));
    }
}

StateSet make_state_set(std::string name, std::vector<std::string> objects,
                        std::vector<std::string> times, std::vector<Wff> formulas,
                        Interpretation realization, const QuantifierBudget& budget) {
    StateSet s = make_state_set_unchecked(std::move(name), std::move(objects), std::move(times),
                                          std::move(formulas), std::move(realization));
    verify_state_set(s, budget);
    return s;
}

}  // namespace mltmf
