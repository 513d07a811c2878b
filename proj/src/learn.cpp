#include "mltmf/learn.hpp"

#include <algorithm>
#include <cctype>

#include "mltmf/entail.hpp"
#include "mltmf/errors.hpp"

namespace mltmf {

namespace {

constexpr const char* kSubsetPred = "IsSubsetOf";
constexpr const char* kLearnablePred = "Learnable";
constexpr const char* kFormulaOfPred = "IsFormulaOf";
constexpr const char* kEqPred = "Eq";
constexpr const char* kUnknownPred = "Unknown";
constexpr const char* kUnknownConst = "noanswer";

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "s" + out;
    return out;
}

std::string learn_fn_name(const std::string& rule_name) { return "flearn_" + sanitize(rule_name); }

Wff template_from_constants(const std::string& fn_name, const std::string& c_cur,
                            const std::string& c_data, const std::string& c_next) {
    const Term phi_x = variable("phiX");
    const Term phi_y = variable("phiY");
    const Term phi_z = variable("phiZ");
    Wff antecedent = conjoin({atom(kSubsetPred, {phi_x, constant(c_cur)}),
                              atom(kSubsetPred, {phi_y, constant(c_data)}),
                              atom(kLearnablePred, {phi_x, phi_y})});
    Wff consequent = exists(
        "phiZ", BinderSort::Variable,
        land(atom(kFormulaOfPred, {phi_z, constant(c_next)}),
             atom(kEqPred, {phi_z, fn_app(fn_name, {phi_x, phi_y})})));
    Wff body = implies(std::move(antecedent), std::move(consequent));
    return forall("phiX", BinderSort::Variable,
                  forall("phiY", BinderSort::Variable, std::move(body)));
}

// Pulls the data-set constant out of a candidate rule formula so the rest can
// be compared against the rebuilt template.
std::optional<std::string> extract_data_constant(const Wff& f) {
    const Wff* p = &f;
    if (p->kind != WffKind::ForAll) return std::nullopt;
    p = &p->children[0];
    if (p->kind != WffKind::ForAll) return std::nullopt;
    p = &p->children[0];
    if (p->kind != WffKind::Implies) return std::nullopt;
    const Wff& ante = p->children[0];
    if (ante.kind != WffKind::And || ante.children[1].kind != WffKind::And) return std::nullopt;
    const Wff& second = ante.children[1].children[0];
    if (second.kind != WffKind::Atom || second.args.size() != 2 ||
        second.args[1].kind != TermKind::Constant)
        return std::nullopt;
    return second.args[1].name;
}

bool is_positive_ground_conjunction(const Wff& f) {
    switch (f.kind) {
        case WffKind::Atom:
            return std::all_of(f.args.begin(), f.args.end(),
                               [](const Term& t) { return t.kind == TermKind::Constant; });
        case WffKind::And:
            return is_positive_ground_conjunction(f.children[0]) &&
                   is_positive_ground_conjunction(f.children[1]);
        default:
            return false;
    }
}

void add_meta_tables(Interpretation& interp) {
    for (const char* name : {kSubsetPred, kLearnablePred, kFormulaOfPred, kEqPred}) {
        if (!interp.relations.count(name)) {
            RelationTable t;
            t.arity = 2;
            interp.relations.emplace(name, std::move(t));
        }
    }
}

void anchor_set_constants(Interpretation& interp, const std::vector<std::string>& names) {
    // Opaque anchors so the rule formula's terms denote something; the empty
    // meta relations keep its antecedent false on every instance.
    const std::string& anchor = interp.domain.front();
    for (const auto& n : names) {
        if (!interp.constants.count(n) && !interp.has_element(n)) interp.constants[n] = anchor;
    }
}

std::vector<std::string> merged_labels(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& x : b)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

void flatten_conjuncts(const Wff& f, std::vector<Wff>& out) {
    if (f.kind == WffKind::And) {
        flatten_conjuncts(f.children[0], out);
        flatten_conjuncts(f.children[1], out);
    } else {
        out.push_back(f);
    }
}

std::optional<std::vector<Rational>> decode_rational_args(const Wff& a) {
    std::vector<Rational> out;
    for (const auto& t : a.args) {
        if (t.kind != TermKind::Constant) return std::nullopt;
        auto r = parse_rational_constant(t.name);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return out;
}

bool activation_accepts(const std::string& activation, const std::vector<Rational>& values) {
    if (activation == "identity") return true;
    if (activation == "logact")
        return std::all_of(values.begin(), values.end(),
                           [](const Rational& v) { return v > Rational(0); });
    return false;
}

}  // namespace

std::string state_set_constant(const std::string& state_name) { return "set_" + sanitize(state_name); }

std::string next_state_name(const std::string& name) { return name + "_next"; }

Wff learn_rule_formula(const std::string& rule_name, const std::string& current_set,
                       const std::string& data_set, const std::string& next_set) {
    return template_from_constants(learn_fn_name(rule_name), state_set_constant(current_set),
                                   state_set_constant(data_set), state_set_constant(next_set));
}

bool can_learn(const LearnRule& rule, const StateSet& sx, const StateSet& sy) {
    return rule.learnable(sx.formulas, sy.formulas);
}

bool can_process(const ProcessRule& rule, const StateSet& su, const StateSet& sq) {
    return rule.processable(su.formulas, sq.formulas);
}

StateSet apply_learn(const LearnRule& rule, const StateSet& sx, const StateSet& sy,
                     const QuantifierBudget& budget) {
    if (!can_learn(rule, sx, sy))
        throw Error(Errc::NotLearnable,
                    "rule '" + rule.name + "' cannot learn: learnable predicate is false");
    std::vector<Wff> result = rule.learn(sx.formulas, sy.formulas);
    const std::string result_name = next_state_name(sx.name);
    const Wff rule_formula =
        learn_rule_formula(rule.name, result_name, sy.name, next_state_name(result_name));

    const bool positive = std::all_of(result.begin(), result.end(), is_positive_ground_conjunction);
    Interpretation realization =
        positive && !result.empty() ? positive_realization(result) : sx.realization;
    add_meta_tables(realization);
    anchor_set_constants(realization,
                         {state_set_constant(result_name), state_set_constant(sy.name),
                          state_set_constant(next_state_name(result_name))});

    result.push_back(rule_formula);
    try {
        return make_state_set(result_name, merged_labels(sx.objects, sy.objects),
                              merged_labels(sx.times, sy.times), std::move(result), realization,
                              budget);
    } catch (const Error& e) {
        if (e.code() == Errc::ResultInconsistent)
            throw Error(Errc::ResultInconsistent,
                        std::string("learn rule '") + rule.name +
                            "' broke the consistency invariant: " + e.what());
        throw;
    }
}

StateSet apply_process(const ProcessRule& rule, const StateSet& su, const StateSet& sq,
                       const QuantifierBudget& budget) {
    if (!can_process(rule, su, sq))
        throw Error(Errc::NotProcessable,
                    "rule '" + rule.name + "' cannot process: processable predicate is false");
    std::vector<Wff> result = rule.process(su.formulas, sq.formulas);
    const std::string result_name = su.name + "_out";

    const bool positive = std::all_of(result.begin(), result.end(), is_positive_ground_conjunction);
    Interpretation realization;
    if (positive && !result.empty()) {
        realization = positive_realization(result);
    } else {
        realization = su.realization;
        if (formulas_contain(result, unknown_answer_formula())) {
            if (!realization.has_element(kUnknownConst)) realization.domain.push_back(kUnknownConst);
            RelationTable& t = realization.relations[kUnknownPred];
            t.arity = 1;
            t.tuples.insert({kUnknownConst});
        }
    }

    try {
        return make_state_set(result_name, merged_labels(su.objects, sq.objects),
                              merged_labels(su.times, sq.times), std::move(result), realization,
                              budget);
    } catch (const Error& e) {
        if (e.code() == Errc::ResultInconsistent)
            throw Error(Errc::ResultInconsistent,
                        std::string("process rule '") + rule.name +
                            "' broke the consistency invariant: " + e.what());
        throw;
    }
}

bool check_inheritance(const StateSet& before, const StateSet& after, const LearnRule& rule) {
    (void)before;
    const std::string c_cur = state_set_constant(after.name);
    const std::string c_next = state_set_constant(next_state_name(after.name));
    const std::string fn = learn_fn_name(rule.name);
    for (const auto& f : after.formulas) {
        const auto data = extract_data_constant(f);
        if (!data) continue;
        if (f == template_from_constants(fn, c_cur, *data, c_next)) return true;
    }
    return false;
}

Wff unknown_answer_formula() { return atom(kUnknownPred, {constant(kUnknownConst)}); }

LearnRule make_fact_union_learn_rule(Signature sig, int domain_size, QuantifierBudget budget) {
    LearnRule rule;
    rule.name = "fact_union";
    rule.learnable = [sig, domain_size, budget](const std::vector<Wff>& x,
                                                const std::vector<Wff>& y) {
        return check_consistency(formula_union(x, y), sig, domain_size, budget).consistent;
    };
    rule.learn = [](const std::vector<Wff>& x, const std::vector<Wff>& y) {
        return formula_union(x, y);
    };
    return rule;
}

ProcessRule make_fact_union_process_rule(Signature sig, int domain_size, QuantifierBudget budget) {
    ProcessRule rule;
    rule.name = "fact_union";
    rule.processable = [](const std::vector<Wff>&, const std::vector<Wff>&) { return true; };
    rule.process = [sig, domain_size, budget](const std::vector<Wff>& knowledge,
                                              const std::vector<Wff>& queries) {
        std::vector<Wff> out;
        for (const auto& q : queries) {
            if (entails(knowledge, q, sig, domain_size, budget))
                out.push_back(q);
            else
                out.push_back(unknown_answer_formula());
        }
        return canonical_formulas(std::move(out));
    };
    return rule;
}

// ── Toy gradient rule ────────────────────────────────────────────────────────

void ToyModelState::validate() const {
    if (architecture.size() < 2) throw Error(Errc::Usage, "toy model needs input and output layers");
    if (architecture.front() < 1 || architecture.back() < 1)
        throw Error(Errc::Usage, "toy model layer dimensions must be positive");
    if (params.size() != static_cast<std::size_t>(architecture.front()) + 1)
        throw Error(Errc::Usage, "toy model expects one weight per input plus a bias");
    if (velocity.size() != params.size())
        throw Error(Errc::Usage, "velocity length must match parameter length");
    if (!(lr > Rational(0))) throw Error(Errc::Usage, "learning rate must be positive");
    if (momentum < Rational(0)) throw Error(Errc::Usage, "momentum must be non-negative");
    if (activations.empty()) throw Error(Errc::Usage, "toy model needs an activation list");
}

std::string rational_constant(const Rational& r) {
    std::string out = "q";
    if (r.num() < 0) out += "m";
    out += std::to_string(r.num() < 0 ? -r.num() : r.num());
    if (r.den() != 1) out += "_" + std::to_string(r.den());
    return out;
}

std::optional<Rational> parse_rational_constant(const std::string& name) {
    if (name.size() < 2 || name[0] != 'q') return std::nullopt;
    std::size_t i = 1;
    bool neg = false;
    if (name[i] == 'm') {
        neg = true;
        ++i;
    }
    std::int64_t num = 0;
    bool any = false;
    for (; i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])); ++i) {
        num = num * 10 + (name[i] - '0');
        any = true;
    }
    if (!any) return std::nullopt;
    std::int64_t den = 1;
    if (i < name.size()) {
        if (name[i] != '_' || i + 1 == name.size()) return std::nullopt;
        den = 0;
        for (++i; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            den = den * 10 + (name[i] - '0');
        }
        if (den == 0) return std::nullopt;
    }
    return Rational(neg ? -num : num, den);
}

namespace {

std::vector<Term> rational_args(const std::vector<Rational>& vs) {
    std::vector<Term> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(constant(rational_constant(v)));
    return out;
}

}  // namespace

Wff encode_toy_model(const ToyModelState& m) {
    m.validate();
    std::vector<Term> arch;
    for (int d : m.architecture) arch.push_back(constant(rational_constant(Rational(d))));
    std::vector<Term> acts;
    for (const auto& a : m.activations) acts.push_back(constant(a));
    return conjoin({atom("Params", rational_args(m.params)),
                    atom("Architecture", std::move(arch)),
                    atom("Activation", std::move(acts)),
                    atom("Hyper", rational_args({m.lr, m.momentum})),
                    atom("Velocity", rational_args(m.velocity))});
}

Wff encode_toy_batch(const ToyBatch& b) {
    std::vector<Rational> xy = b.inputs;
    xy.push_back(b.target);
    std::vector<Wff> parts = {
        atom("Batch", rational_args(xy)),
        atom("DimMatch", rational_args({Rational(static_cast<std::int64_t>(b.inputs.size())),
                                        Rational(static_cast<std::int64_t>(b.inputs.size()))}))};
    if (b.differentiable) parts.push_back(atom("Differentiable", {constant("quadratic")}));
    return conjoin(parts);
}

Wff encode_toy_query(const std::vector<Rational>& inputs) {
    return atom("Query", rational_args(inputs));
}

Wff encode_toy_prediction(const std::vector<Rational>& inputs, const Rational& value) {
    std::vector<Rational> xy = inputs;
    xy.push_back(value);
    return atom("Prediction", rational_args(xy));
}

std::optional<ToyModelState> decode_toy_model(const std::vector<Wff>& formulas) {
    for (const auto& f : formulas) {
        std::vector<Wff> parts;
        flatten_conjuncts(f, parts);
        ToyModelState m;
        bool has_params = false, has_arch = false, has_act = false, has_hyper = false,
             has_vel = false;
        for (const auto& p : parts) {
            if (p.kind != WffKind::Atom) continue;
            if (p.name == "Params") {
                auto vs = decode_rational_args(p);
                if (!vs) continue;
                m.params = *vs;
                has_params = true;
            } else if (p.name == "Architecture") {
                auto vs = decode_rational_args(p);
                if (!vs) continue;
                m.architecture.clear();
                for (const auto& v : *vs) {
                    if (v.den() != 1) return std::nullopt;
                    m.architecture.push_back(static_cast<int>(v.num()));
                }
                has_arch = true;
            } else if (p.name == "Activation") {
                m.activations.clear();
                for (const auto& t : p.args) m.activations.push_back(t.name);
                has_act = true;
            } else if (p.name == "Hyper") {
                auto vs = decode_rational_args(p);
                if (!vs || vs->size() != 2) continue;
                m.lr = (*vs)[0];
                m.momentum = (*vs)[1];
                has_hyper = true;
            } else if (p.name == "Velocity") {
                auto vs = decode_rational_args(p);
                if (!vs) continue;
                m.velocity = *vs;
                has_vel = true;
            }
        }
        if (has_params && has_arch && has_act && has_hyper && has_vel) return m;
    }
    return std::nullopt;
}

std::optional<ToyBatch> decode_toy_batch(const std::vector<Wff>& formulas) {
    for (const auto& f : formulas) {
        std::vector<Wff> parts;
        flatten_conjuncts(f, parts);
        ToyBatch b;
        b.differentiable = false;
        bool has_batch = false;
        for (const auto& p : parts) {
            if (p.kind != WffKind::Atom) continue;
            if (p.name == "Batch") {
                auto vs = decode_rational_args(p);
                if (!vs || vs->size() < 2) continue;
                b.target = vs->back();
                vs->pop_back();
                b.inputs = *vs;
                has_batch = true;
            } else if (p.name == "Differentiable") {
                b.differentiable = true;
            }
        }
        if (has_batch) return b;
    }
    return std::nullopt;
}

std::vector<Rational> toy_loss_gradient(const ToyModelState& m, const ToyBatch& b) {
    // Quadratic loss 1/2 (w.x + bias - y)^2 over one sample.
    Rational pred(0);
    for (std::size_t i = 0; i < b.inputs.size(); ++i) pred = pred + m.params[i] * b.inputs[i];
    pred = pred + m.params.back();
    const Rational err = pred - b.target;
    std::vector<Rational> grad;
    grad.reserve(m.params.size());
    for (const auto& x : b.inputs) grad.push_back(err * x);
    grad.push_back(err);
    return grad;
}

double toy_loss(const std::vector<double>& params, const std::vector<double>& inputs,
                double target) {
    double pred = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) pred += params[i] * inputs[i];
    pred += params.back();
    const double err = pred - target;
    return 0.5 * err * err;
}

ToyModelState toy_gradient_step(const ToyModelState& m, const ToyBatch& b) {
    m.validate();
    if (b.inputs.size() + 1 != m.params.size())
        throw Error(Errc::NotLearnable, "batch dimension does not match the model");
    const std::vector<Rational> grad = toy_loss_gradient(m, b);
    ToyModelState out = m;
    for (std::size_t i = 0; i < m.params.size(); ++i) {
        const Rational damped = grad[i] + m.momentum * m.velocity[i];
        out.velocity[i] = damped;
        out.params[i] = m.params[i] - m.lr * damped;
    }
    return out;
}

namespace {

bool toy_learnable(const std::vector<Wff>& model_formulas, const std::vector<Wff>& batch_formulas) {
    const auto m = decode_toy_model(model_formulas);
    const auto b = decode_toy_batch(batch_formulas);
    if (!m || !b) return false;
    // Dimensionality, ActivationFeasible, GradientExists.
    if (b->inputs.size() != static_cast<std::size_t>(m->architecture.front())) return false;
    if (m->params.size() != b->inputs.size() + 1) return false;
    for (const auto& a : m->activations)
        if (!activation_accepts(a, b->inputs)) return false;
    return b->differentiable;
}

}  // namespace

LearnRule make_toy_gradient_learn_rule() {
    LearnRule rule;
    rule.name = "toy_gradient";
    rule.learnable = toy_learnable;
    rule.learn = [](const std::vector<Wff>& model_formulas, const std::vector<Wff>& batch_formulas) {
        const auto m = decode_toy_model(model_formulas);
        const auto b = decode_toy_batch(batch_formulas);
        if (!m || !b) throw Error(Errc::NotLearnable, "toy rule could not decode its inputs");
        return std::vector<Wff>{encode_toy_model(toy_gradient_step(*m, *b))};
    };
    return rule;
}

ProcessRule make_toy_gradient_process_rule() {
    ProcessRule rule;
    rule.name = "toy_gradient";
    rule.processable = [](const std::vector<Wff>& model_formulas,
                          const std::vector<Wff>& query_formulas) {
        const auto m = decode_toy_model(model_formulas);
        if (!m) return false;
        // InputMatch and ActivationFeasible and OutputDefined.
        for (const auto& f : query_formulas) {
            if (f.kind != WffKind::Atom || f.name != "Query") continue;
            auto xs = decode_rational_args(f);
            if (!xs || xs->size() != static_cast<std::size_t>(m->architecture.front())) return false;
            for (const auto& a : m->activations)
                if (!activation_accepts(a, *xs)) return false;
            return m->architecture.size() >= 2 && m->architecture.back() >= 1;
        }
        return false;
    };
    rule.process = [](const std::vector<Wff>& model_formulas,
                      const std::vector<Wff>& query_formulas) {
        const auto m = decode_toy_model(model_formulas);
        if (!m) throw Error(Errc::NotProcessable, "toy rule could not decode the model");
        std::vector<Wff> out;
        for (const auto& f : query_formulas) {
            if (f.kind != WffKind::Atom || f.name != "Query") continue;
            auto xs = decode_rational_args(f);
            if (!xs) continue;
            Rational y(0);
            for (std::size_t i = 0; i < xs->size(); ++i) y = y + m->params[i] * (*xs)[i];
            y = y + m->params.back();
            out.push_back(encode_toy_prediction(*xs, y));
        }
        return canonical_formulas(std::move(out));
    };
    return rule;
}

Interpretation positive_realization(const std::vector<Wff>& formulas) {
    Interpretation interp;
    std::set<std::string> elements;
    for (const auto& f : formulas) {
        if (!is_positive_ground_conjunction(f)) continue;
        std::vector<Wff> parts;
        flatten_conjuncts(f, parts);
        for (const auto& p : parts) {
            Tuple tuple;
            for (const auto& t : p.args) {
                tuple.push_back(t.name);
                elements.insert(t.name);
            }
            RelationTable& table = interp.relations[p.name];
            table.arity = static_cast<int>(tuple.size());
            table.tuples.insert(tuple);
        }
    }
    if (elements.empty()) elements.insert("_e");
    interp.domain.assign(elements.begin(), elements.end());
    add_meta_tables(interp);
    return interp;
}

}  // namespace mltmf
