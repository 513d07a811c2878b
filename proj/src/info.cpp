#include "mltmf/info.hpp"

#include <algorithm>
#include <map>

#include "mltmf/automaton.hpp"
#include "mltmf/errors.hpp"

namespace mltmf {

std::optional<Wff> EnablingMapping::image_of(const Wff& source_formula) const {
    const Wff key = desugar(source_formula);
    for (const auto& [src, dst] : pairs)
        if (desugar(src) == key) return dst;
    return std::nullopt;
}

EnablingMapping make_enabling_mapping(StateSet source, StateSet target,
                                      std::vector<std::pair<Wff, Wff>> pairs,
                                      std::string provenance) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
        if (compare(pairs[i].first, pairs[i + 1].first) == 0) {
            if (compare(pairs[i].second, pairs[i + 1].second) == 0) continue;
            throw Error(Errc::Usage, "multivalued enabling mapping at source formula: " +
                                         format_formula(pairs[i].first));
        }
    }
    pairs.erase(std::unique(pairs.begin(), pairs.end(),
                            [](const auto& a, const auto& b) {
                                return compare(a.first, b.first) == 0;
                            }),
                pairs.end());
    for (const auto& [src, dst] : pairs) {
        if (!source.contains(src))
            throw Error(Errc::Usage,
                        "mapping source is not a source formula: " + format_formula(src));
        if (!target.contains(dst))
            throw Error(Errc::Usage,
                        "mapping image is not a target formula: " + format_formula(dst));
    }
    for (const auto& f : source.formulas) {
        const Wff key = desugar(f);
        const bool mapped = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
            return desugar(p.first) == key;
        });
        if (!mapped)
            throw Error(Errc::NotTotal,
                        "mapping is not total, missing source formula: " + format_formula(f));
    }
    EnablingMapping m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.pairs = std::move(pairs);
    m.provenance = std::move(provenance);
    return m;
}

MappingReport check_enabling_map(const EnablingMapping& m) {
    MappingReport report;
    std::map<std::string, std::vector<std::string>> by_image;
    for (const auto& [src, dst] : m.pairs)
        by_image[format_formula(desugar(dst))].push_back(format_formula(src));

    report.injective = true;
    for (auto& [image, sources] : by_image) {
        (void)image;
        if (sources.size() > 1) {
            report.injective = false;
            std::sort(sources.begin(), sources.end());
            report.collision_classes.push_back(sources);
        }
    }
    std::sort(report.collision_classes.begin(), report.collision_classes.end());

    report.surjective = true;
    for (const auto& t : m.target.formulas) {
        if (!by_image.count(format_formula(desugar(t)))) {
            report.surjective = false;
            report.unhit_targets.push_back(format_formula(t));
        }
    }
    report.recoverable = report.surjective && report.injective;
    return report;
}

std::pair<QuotientStateSet, EnablingMapping> recoverable_reduction(const EnablingMapping& m) {
    const MappingReport report = check_enabling_map(m);
    if (!report.surjective)
        throw Error(Errc::NotSurjective, "recoverable reduction requires a surjective mapping");

    // Same-image classes; each class is sorted, and classes are listed by
    // their representative (the class minimum).
    std::map<std::string, std::vector<Wff>> classes_by_image;
    std::map<std::string, Wff> image_formula;
    for (const auto& [src, dst] : m.pairs) {
        const std::string key = format_formula(desugar(dst));
        classes_by_image[key].push_back(src);
        image_formula.emplace(key, dst);
    }

    QuotientStateSet quotient;
    std::vector<std::pair<Wff, Wff>> reduced_pairs;
    std::vector<Wff> representatives;
    std::vector<std::pair<std::string, std::vector<Wff>>> ordered;
    for (auto& [key, members] : classes_by_image) {
        std::sort(members.begin(), members.end(), WffLess{});
        ordered.emplace_back(key, members);
    }
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return format_formula(a.second.front()) < format_formula(b.second.front());
    });
    for (auto& [key, members] : ordered) {
        representatives.push_back(members.front());
        reduced_pairs.emplace_back(members.front(), image_formula.at(key));
        quotient.classes.push_back(std::move(members));
    }

    quotient.representatives = make_state_set_unchecked(
        m.source.name + "_quotient", m.source.objects, m.source.times, representatives,
        m.source.realization);

    EnablingMapping reduced = make_enabling_mapping(quotient.representatives, m.target,
                                                    std::move(reduced_pairs), m.provenance);
    return {std::move(quotient), std::move(reduced)};
}

StateSet compose_noisy(const StateSet& s, const NoiseSpec& n, const QuantifierBudget& budget,
                       const std::optional<Interpretation>& override_realization) {
    if (!formula_subset(n.loss, s.formulas))
        throw Error(Errc::LossNotSubset, "loss state must be a subset of the state");
    for (const auto& f : n.superposed) {
        if (formulas_contain(s.formulas, f))
            throw Error(Errc::SuperposedOverlaps,
                        "superposed formula already present: " + format_formula(f));
    }
    std::vector<Wff> result = formula_union(formula_difference(s.formulas, n.loss), n.superposed);
    const Interpretation& realization =
        override_realization ? *override_realization : s.realization;
    // All result formulas must hold in the realization, which also witnesses
    // logical consistency of the noisy state.
    try {
        return make_state_set(s.name + "_noisy", s.objects, s.times, std::move(result),
                              realization, budget);
    } catch (const Error& e) {
        if (e.code() == Errc::ResultInconsistent) throw;
        throw Error(Errc::ResultInconsistent, e.what());
    }
}

InformationSextuple make_information_sextuple(std::string ontology,
                                              std::vector<std::string> occurrence_times,
                                              StateSet ontological_state, std::string carrier,
                                              std::vector<std::string> reflection_times,
                                              StateSet carrier_state, EnablingMapping enabling) {
    if (ontology.empty() || carrier.empty() || occurrence_times.empty() ||
        reflection_times.empty() || ontological_state.formulas.empty() ||
        carrier_state.formulas.empty())
        throw Error(Errc::ComponentMismatch, "all six components must be non-empty");
    if (!same_formulas(enabling.source.formulas, ontological_state.formulas))
        throw Error(Errc::ComponentMismatch,
                    "enabling mapping source must be the ontological state");
    if (!same_formulas(enabling.target.formulas, carrier_state.formulas))
        throw Error(Errc::ComponentMismatch, "enabling mapping target must be the carrier state");
    InformationSextuple info;
    info.ontology = std::move(ontology);
    info.occurrence_times = std::move(occurrence_times);
    info.ontological_state = std::move(ontological_state);
    info.carrier = std::move(carrier);
    info.reflection_times = std::move(reflection_times);
    info.carrier_state = std::move(carrier_state);
    info.enabling = std::move(enabling);
    return info;
}

bool check_noisy_symmetry(const InformationSextuple& a, const InformationSextuple& b,
                          const QuantifierBudget& budget) {
    if (a.ontology != b.ontology || a.carrier != b.carrier ||
        a.occurrence_times != b.occurrence_times || a.reflection_times != b.reflection_times)
        throw Error(Errc::ComponentMismatch,
                    "noisy information must share ontology, carrier, and both time sets");

    const auto direction = [&](const InformationSextuple& from, const InformationSextuple& to) {
        NoiseSpec witness;
        witness.loss = formula_difference(from.ontological_state.formulas,
                                          to.ontological_state.formulas);
        witness.superposed = formula_difference(to.ontological_state.formulas,
                                                from.ontological_state.formulas);
        const StateSet composed = compose_noisy(from.ontological_state, witness, budget,
                                                to.ontological_state.realization);
        return same_formulas(composed.formulas, to.ontological_state.formulas);
    };
    return direction(a, b) && direction(b, a);
}

bool is_information_system(const InformationSextuple& info) {
    return check_enabling_map(info.enabling).recoverable &&
           is_automaton_state(info.ontological_state);
}

InterpretabilityVerdict check_interpretability(const InformationSextuple& model,
                                               const InformationSextuple& input,
                                               const InformationSextuple& output,
                                               const ProcessRule& rule) {
    Signature shared = model.ontological_state.realization.signature();
    for (const auto* s : {&input.ontological_state, &output.ontological_state}) {
        const Signature other = s->realization.signature();
        if (!shared.compatible_with(other))
            throw Error(Errc::SignatureMismatch,
                        "ontological states do not share one formal system");
        shared.merge(other);
    }

    InterpretabilityVerdict verdict;
    const struct {
        const InformationSextuple* info;
        const char* reason;
    } checks[] = {{&model, "iu_not_recoverable"},
                  {&input, "iq_not_recoverable"},
                  {&output, "ir_not_recoverable"}};
    for (const auto& c : checks) {
        if (!check_enabling_map(c.info->enabling).recoverable) {
            verdict.reason = c.reason;
            return verdict;
        }
    }

    if (!rule.processable(model.ontological_state.formulas, input.ontological_state.formulas)) {
        verdict.reason = "not_processable";
        return verdict;
    }
    const std::vector<Wff> produced =
        rule.process(model.ontological_state.formulas, input.ontological_state.formulas);
    if (!same_formulas(produced, output.ontological_state.formulas)) {
        verdict.reason = "output_mismatch";
        return verdict;
    }

    verdict.interpretable = true;
    verdict.explanation_model = model.ontological_state.formula_texts();
    verdict.explanation_input = input.ontological_state.formula_texts();
    verdict.explanation_output = output.ontological_state.formula_texts();
    return verdict;
}

}  // namespace mltmf
