#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mltmf/rational.hpp"
#include "mltmf/state_set.hpp"

namespace mltmf {

// ── Rule framework ───────────────────────────────────────────────────────────
// Learn and process rules are meta-level callables over formula sets. Both
// shipped rules preserve logical consistency of consistent inputs; apply_*
// re-verifies the result and treats a breach as a rule bug.

struct LearnRule {
    std::string name;
    std::function<bool(const std::vector<Wff>&, const std::vector<Wff>&)> learnable;
    std::function<std::vector<Wff>(const std::vector<Wff>&, const std::vector<Wff>&)> learn;
};

struct ProcessRule {
    std::string name;
    std::function<bool(const std::vector<Wff>&, const std::vector<Wff>&)> processable;
    std::function<std::vector<Wff>(const std::vector<Wff>&, const std::vector<Wff>&)> process;
};

bool can_learn(const LearnRule& rule, const StateSet& sx, const StateSet& sy);
bool can_process(const ProcessRule& rule, const StateSet& su, const StateSet& sq);

// Applies the rule and returns the successor state: the rule's output plus
// the instantiated learning-rule formula that carries the capability forward.
StateSet apply_learn(const LearnRule& rule, const StateSet& sx, const StateSet& sy,
                     const QuantifierBudget& budget);

StateSet apply_process(const ProcessRule& rule, const StateSet& su, const StateSet& sq,
                       const QuantifierBudget& budget);

// True iff `after` contains the learning-rule formula adapted to itself:
// the same template with the current-state constant renamed to `after` and
// the successor constant to its follower.
bool check_inheritance(const StateSet& before, const StateSet& after, const LearnRule& rule);

// Successor naming used by apply_learn and expected by check_inheritance.
std::string next_state_name(const std::string& name);

// The instantiated rule formula (the capability template over explicit
// state-set constants).
Wff learn_rule_formula(const std::string& rule_name, const std::string& current_set,
                       const std::string& data_set, const std::string& next_set);

// Constant name anchoring a state set inside rule formulas.
std::string state_set_constant(const std::string& state_name);

// ── Shipped rules ────────────────────────────────────────────────────────────

// Fact-union learner: learnable iff the union is consistent, learn = union.
LearnRule make_fact_union_learn_rule(Signature sig, int domain_size, QuantifierBudget budget);

// Fact-union processor: answers each query formula by closure membership,
// falling back to the designated unknown formula.
ProcessRule make_fact_union_process_rule(Signature sig, int domain_size, QuantifierBudget budget);
Wff unknown_answer_formula();

// ── Toy gradient rule (linear model, quadratic loss) ─────────────────────────

struct ToyModelState {
    std::vector<Rational> params;       // row weights then bias
    Rational lr{1, 10};                 // eta > 0
    Rational momentum{0};               // beta >= 0
    std::vector<Rational> velocity;     // same length as params
    std::vector<int> architecture;      // layer dims, [d_in, 1] for the toy
    std::vector<std::string> activations;

    void validate() const;
};

struct ToyBatch {
    std::vector<Rational> inputs;
    Rational target{0};
    bool differentiable = true;
};

// Formula encodings used by the toy rule (positive conjunctions over value
// constants).
Wff encode_toy_model(const ToyModelState& m);
Wff encode_toy_batch(const ToyBatch& b);
std::optional<ToyModelState> decode_toy_model(const std::vector<Wff>& formulas);
std::optional<ToyBatch> decode_toy_batch(const std::vector<Wff>& formulas);

// Query/prediction encodings for the process side.
Wff encode_toy_query(const std::vector<Rational>& inputs);
Wff encode_toy_prediction(const std::vector<Rational>& inputs, const Rational& value);

// One optimizer step: params - lr * (grad + momentum * velocity), velocity
// updated to the damped gradient. Quadratic loss over the single sample.
ToyModelState toy_gradient_step(const ToyModelState& m, const ToyBatch& b);
std::vector<Rational> toy_loss_gradient(const ToyModelState& m, const ToyBatch& b);
double toy_loss(const std::vector<double>& params, const std::vector<double>& inputs,
                double target);

LearnRule make_toy_gradient_learn_rule();
ProcessRule make_toy_gradient_process_rule();

// Value constants: q3, qm1_2 ("-1/2"), q7_10 ("7/10") and back.
std::string rational_constant(const Rational& r);
std::optional<Rational> parse_rational_constant(const std::string& name);

// Builds an interpretation making a set of positive ground conjunctions true:
// every mentioned constant becomes a domain element, every asserted atom a
// relation tuple. Meta relations for rule formulas are included empty.
Interpretation positive_realization(const std::vector<Wff>& formulas);

}  // namespace mltmf
