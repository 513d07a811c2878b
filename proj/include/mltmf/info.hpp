#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mltmf/learn.hpp"
#include "mltmf/state_set.hpp"

namespace mltmf {

// ── Enabling mappings ────────────────────────────────────────────────────────

// A total, single-valued association from source formulas to target formulas.
// Pairs are kept sorted by source text. Surjectivity is a reported property,
// not a load-time requirement, so defective mappings can be diagnosed.
struct EnablingMapping {
    StateSet source;
    StateSet target;
    std::vector<std::pair<Wff, Wff>> pairs;
    std::string provenance;  // free-text physical-causality note, not checked

    std::optional<Wff> image_of(const Wff& source_formula) const;
};

EnablingMapping make_enabling_mapping(StateSet source, StateSet target,
                                      std::vector<std::pair<Wff, Wff>> pairs,
                                      std::string provenance = "");

struct MappingReport {
    bool surjective = false;
    bool injective = false;
    bool recoverable = false;  // surjective && injective
    // Source-text groups sharing one image (size >= 2 each).
    std::vector<std::vector<std::string>> collision_classes;
    std::vector<std::string> unhit_targets;
};

MappingReport check_enabling_map(const EnablingMapping& m);

// ── Recoverable reduction ────────────────────────────────────────────────────

struct QuotientStateSet {
    // Same-image equivalence classes, each sorted, listed by representative.
    std::vector<std::vector<Wff>> classes;
    // State set whose formulas are the class representatives.
    StateSet representatives;
};

// Quotients the source by same-image equivalence and returns the induced
// mapping on representatives, which is a bijection. Requires surjectivity.
std::pair<QuotientStateSet, EnablingMapping> recoverable_reduction(const EnablingMapping& m);

// ── Noisy information ────────────────────────────────────────────────────────

struct NoiseSpec {
    std::vector<Wff> loss;        // removed from the state
    std::vector<Wff> superposed;  // added to the state
};

// (s \ loss) ∪ superposed, re-verified against the realization (or against
// `override_realization` when the noisy state lives in a different one).
StateSet compose_noisy(const StateSet& s, const NoiseSpec& n, const QuantifierBudget& budget,
                       const std::optional<Interpretation>& override_realization = std::nullopt);

// ── Information sextuples ────────────────────────────────────────────────────

struct InformationSextuple {
    std::string ontology;
    std::vector<std::string> occurrence_times;
    StateSet ontological_state;
    std::string carrier;
    std::vector<std::string> reflection_times;
    StateSet carrier_state;
    EnablingMapping enabling;
};

InformationSextuple make_information_sextuple(std::string ontology,
                                              std::vector<std::string> occurrence_times,
                                              StateSet ontological_state, std::string carrier,
                                              std::vector<std::string> reflection_times,
                                              StateSet carrier_state, EnablingMapping enabling);

// Both directions of noisy-information symmetry: each ontological state must
// be reachable from the other by some noise. Throws ComponentMismatch unless
// ontology, occurrence times, carrier and reflection times agree.
bool check_noisy_symmetry(const InformationSextuple& a, const InformationSextuple& b,
                          const QuantifierBudget& budget);

// The information-system recognizer: recoverable and the ontological state
// encodes a finite automaton.
bool is_information_system(const InformationSextuple& info);

// ── Interpretability ─────────────────────────────────────────────────────────

struct InterpretabilityVerdict {
    bool interpretable = false;
    std::string reason;  // empty when interpretable
    std::vector<std::string> explanation_model;   // E_u, printable formulas
    std::vector<std::string> explanation_input;   // E_q
    std::vector<std::string> explanation_output;  // E_r
};

// Interpretable iff the three enabling mappings are bijections and `rule`
// certifies that the model state processes the input state into the output
// state. Reason codes: iu_not_recoverable, iq_not_recoverable,
// ir_not_recoverable, not_processable, output_mismatch.
InterpretabilityVerdict check_interpretability(const InformationSextuple& model,
                                               const InformationSextuple& input,
                                               const InformationSextuple& output,
                                               const ProcessRule& rule);

}  // namespace mltmf
