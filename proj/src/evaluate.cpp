#include "mltmf/evaluate.hpp"

#include <cmath>
#include <sstream>

#include "mltmf/errors.hpp"

namespace mltmf {

namespace detail {

std::uint64_t check_ho_budget(const std::string& symbol, int arity, std::size_t domain_size,
                              bool function_candidates, const QuantifierBudget& budget) {
    std::uint64_t slots = 1;  // |D|^arity input tuples
    bool slots_overflow = false;
    for (int i = 0; i < arity; ++i) {
        if (slots > UINT64_MAX / domain_size) {
            slots_overflow = true;
            break;
        }
        slots *= domain_size;
    }
    std::uint64_t count = UINT64_MAX;
    std::string count_text;
    if (slots_overflow) {
        count_text = "more than 2^64";
    } else if (function_candidates) {
        const double approx = std::pow(static_cast<double>(domain_size), static_cast<double>(slots));
        if (approx < 1e18) {
            count = 1;
            for (std::uint64_t i = 0; i < slots; ++i) count *= domain_size;
            count_text = std::to_string(count);
        } else {
            count_text = std::to_string(domain_size) + "^" + std::to_string(slots);
        }
    } else {
        if (slots < 63) {
            count = std::uint64_t{1} << slots;
            count_text = std::to_string(count);
        } else {
            count_text = "2^" + std::to_string(slots);
        }
    }

    const char* kind = function_candidates ? "function table(s)" : "relation(s)";
    if (domain_size > static_cast<std::size_t>(budget.max_domain_for_ho) ||
        arity > budget.max_ho_arity || count > budget.max_candidates()) {
        std::ostringstream msg;
        msg << "higher-order quantifier over '" << symbol << "' would enumerate " << count_text
            << " " << kind << " (domain " << domain_size << ", arity " << arity
            << "); budget allows domain <= " << budget.max_domain_for_ho << ", arity <= "
            << budget.max_ho_arity << ", candidates <= " << budget.max_candidates();
        throw Error(Errc::BudgetExceeded, msg.str());
    }
    return count;
}

Wff mk_not(Wff a) {
    if (a.kind == WffKind::TrueLit) return falsum();
    if (a.kind == WffKind::FalseLit) return verum();
    return lnot(std::move(a));
}

Wff mk_and(Wff a, Wff b) {
    if (a.kind == WffKind::FalseLit || b.kind == WffKind::FalseLit) return falsum();
    if (a.kind == WffKind::TrueLit) return b;
    if (b.kind == WffKind::TrueLit) return a;
    return land(std::move(a), std::move(b));
}

Wff mk_or(Wff a, Wff b) {
    if (a.kind == WffKind::TrueLit || b.kind == WffKind::TrueLit) return verum();
    if (a.kind == WffKind::FalseLit) return b;
    if (b.kind == WffKind::FalseLit) return a;
    return lor(std::move(a), std::move(b));
}

Wff mk_implies(Wff a, Wff b) {
    if (a.kind == WffKind::FalseLit || b.kind == WffKind::TrueLit) return verum();
    if (a.kind == WffKind::TrueLit) return b;
    if (b.kind == WffKind::FalseLit) return mk_not(std::move(a));
    return implies(std::move(a), std::move(b));
}

Wff mk_iff(Wff a, Wff b) {
    if (a.kind == WffKind::TrueLit) return b;
    if (b.kind == WffKind::TrueLit) return a;
    if (a.kind == WffKind::FalseLit) return mk_not(std::move(b));
    if (b.kind == WffKind::FalseLit) return mk_not(std::move(a));
    return liff(std::move(a), std::move(b));
}

}  // namespace detail

namespace {

using detail::check_ho_budget;

// Candidate tables for higher-order symbols live in the overlay; variable
// bindings map to domain elements.
struct Env {
    std::map<std::string, std::string> vars;
    std::map<std::string, RelationTable> rel_overlay;
    std::map<std::string, FunctionTable> fn_overlay;
};

class Machine {
public:
    Machine(const Interpretation& interp, const QuantifierBudget& budget)
        : interp_(interp), budget_(budget) {}

    std::string eval_term(const Term& t, Env& env) {
        switch (t.kind) {
            case TermKind::Variable: {
                auto it = env.vars.find(t.name);
                if (it == env.vars.end())
                    throw Error(Errc::MissingTable, "no assignment for variable '" + t.name + "'");
                return it->second;
            }
            case TermKind::Constant: {
                auto it = interp_.constants.find(t.name);
                if (it != interp_.constants.end()) return it->second;
                if (interp_.has_element(t.name)) return t.name;
                throw Error(Errc::MissingTable, "no interpretation for constant '" + t.name + "'");
            }
            case TermKind::FunctionApp: {
                Tuple args = eval_args(t, env);
                const FunctionTable* table = nullptr;
                if (auto o = env.fn_overlay.find(t.name); o != env.fn_overlay.end())
                    table = &o->second;
                else if (auto b = interp_.functions.find(t.name); b != interp_.functions.end())
                    table = &b->second;
                if (!table)
                    throw Error(Errc::MissingTable, "no table for function '" + t.name + "'");
                auto entry = table->entries.find(args);
                if (entry == table->entries.end())
                    throw Error(Errc::MissingTable,
                                "function table '" + t.name + "' has no entry for an input tuple");
                return entry->second;
            }
            case TermKind::PredicateTerm: {
                const bool holds = relation_holds(t.name, eval_args(t, env), env);
                const std::string& e = holds ? interp_.designated_true : interp_.designated_false;
                if (e.empty())
                    throw Error(Errc::MissingTable,
                                "designated truth elements required to evaluate predicate-terms");
                return e;
            }
        }
        throw Error(Errc::Usage, "unreachable term kind");
    }

    bool eval(const Wff& f, Env& env) {
        switch (f.kind) {
            case WffKind::TrueLit: return true;
            case WffKind::FalseLit: return false;
            case WffKind::Atom: return relation_holds(f.name, eval_atom_args(f, env), env);
            case WffKind::Not: return !eval(f.children[0], env);
            case WffKind::And: return eval(f.children[0], env) && eval(f.children[1], env);
            case WffKind::Or: return eval(f.children[0], env) || eval(f.children[1], env);
            case WffKind::Implies: return !eval(f.children[0], env) || eval(f.children[1], env);
            case WffKind::Iff: return eval(f.children[0], env) == eval(f.children[1], env);
            case WffKind::ForAll: return eval_binder(f, env, true);
            case WffKind::Exists: return eval_binder(f, env, false);
        }
        throw Error(Errc::Usage, "unreachable formula kind");
    }

    Wff ground(const Wff& f, Env& env) {
        using namespace detail;
        switch (f.kind) {
            case WffKind::TrueLit:
            case WffKind::FalseLit:
                return f;
            case WffKind::Atom: {
                if (env.rel_overlay.count(f.name))
                    return relation_holds(f.name, eval_atom_args(f, env), env) ? verum() : falsum();
                Wff out = f;
                for (auto& a : out.args) a = ground_term(a, env);
                return out;
            }
            case WffKind::Not: return mk_not(ground(f.children[0], env));
            case WffKind::And: return mk_and(ground(f.children[0], env), ground(f.children[1], env));
            case WffKind::Or: return mk_or(ground(f.children[0], env), ground(f.children[1], env));
            case WffKind::Implies:
                return mk_implies(ground(f.children[0], env), ground(f.children[1], env));
            case WffKind::Iff: return mk_iff(ground(f.children[0], env), ground(f.children[1], env));
            case WffKind::ForAll:
            case WffKind::Exists: {
                const bool universal = f.kind == WffKind::ForAll;
                std::vector<Wff> parts;
                expand_binder(f, env, [&](Env& inner) { parts.push_back(ground(f.children[0], inner)); });
                Wff out = universal ? verum() : falsum();
                if (!parts.empty()) {
                    out = parts.back();
                    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
                        out = universal ? mk_and(std::move(*it), std::move(out))
                                        : mk_or(std::move(*it), std::move(out));
                }
                return out;
            }
        }
        throw Error(Errc::Usage, "unreachable formula kind");
    }

private:
    Tuple eval_args(const Term& t, Env& env) {
        Tuple out;
        out.reserve(t.args.size());
        for (const auto& a : t.args) out.push_back(eval_term(a, env));
        return out;
    }

    Tuple eval_atom_args(const Wff& f, Env& env) {
        Tuple out;
        out.reserve(f.args.size());
        for (const auto& a : f.args) out.push_back(eval_term(a, env));
        return out;
    }

    bool relation_holds(const std::string& name, const Tuple& args, Env& env) {
        if (auto o = env.rel_overlay.find(name); o != env.rel_overlay.end())
            return o->second.contains(args);
        auto b = interp_.relations.find(name);
        if (b == interp_.relations.end())
            throw Error(Errc::MissingTable, "no table for predicate '" + name + "'");
        return b->second.contains(args);
    }

    Term ground_term(const Term& t, Env& env) {
        switch (t.kind) {
            case TermKind::Variable: {
                auto it = env.vars.find(t.name);
                return it != env.vars.end() ? constant(it->second) : t;
            }
            case TermKind::Constant:
                return t;
            case TermKind::FunctionApp:
                // Candidate tables exist only while a binder is being
                // expanded, so applications of the bound symbol must collapse
                // to the element they denote.
                if (env.fn_overlay.count(t.name)) return constant(eval_term(t, env));
                [[fallthrough]];
            case TermKind::PredicateTerm: {
                Term out = t;
                for (auto& a : out.args) a = ground_term(a, env);
                return out;
            }
        }
        throw Error(Errc::Usage, "unreachable term kind");
    }

    template <typename Visit>
    void expand_binder(const Wff& f, Env& env, Visit&& visit) {
        switch (f.binder) {
            case BinderSort::Variable: {
                const bool had = env.vars.count(f.name) > 0;
                const std::string saved = had ? env.vars[f.name] : std::string();
                for (const auto& e : interp_.domain) {
                    env.vars[f.name] = e;
                    visit(env);
                }
                if (had)
                    env.vars[f.name] = saved;
                else
                    env.vars.erase(f.name);
                return;
            }
            case BinderSort::Predicate: {
                const int arity = bound_arity(f, false);
                const std::uint64_t masks =
                    check_ho_budget(f.name, arity, interp_.domain.size(), false, budget_);
                const auto tuples = all_tuples(interp_.domain, arity);
                for (std::uint64_t mask = 0; mask < masks; ++mask) {
                    RelationTable cand;
                    cand.arity = arity;
                    for (std::size_t i = 0; i < tuples.size(); ++i)
                        if (mask & (std::uint64_t{1} << i)) cand.tuples.insert(tuples[i]);
                    env.rel_overlay[f.name] = std::move(cand);
                    visit(env);
                }
                env.rel_overlay.erase(f.name);
                return;
            }
            case BinderSort::Function: {
                const int arity = bound_arity(f, true);
                check_ho_budget(f.name, arity, interp_.domain.size(), true, budget_);
                const auto tuples = all_tuples(interp_.domain, arity);
                std::vector<std::size_t> choice(tuples.size(), 0);
                while (true) {
                    FunctionTable cand;
                    cand.arity = arity;
                    for (std::size_t i = 0; i < tuples.size(); ++i)
                        cand.entries[tuples[i]] = interp_.domain[choice[i]];
                    env.fn_overlay[f.name] = std::move(cand);
                    visit(env);
                    std::size_t i = 0;
                    for (; i < choice.size(); ++i) {
                        if (++choice[i] < interp_.domain.size()) break;
                        choice[i] = 0;
                    }
                    if (i == choice.size()) break;
                }
                env.fn_overlay.erase(f.name);
                return;
            }
        }
    }

    int bound_arity(const Wff& f, bool function) const {
        const Signature sig = interp_.signature();
        if (function) {
            if (sig.is_function(f.name)) return sig.functions.at(f.name);
        } else {
            if (sig.is_predicate(f.name)) return sig.predicates.at(f.name);
        }
        throw Error(Errc::UnknownSymbol,
                    "higher-order binder over undeclared symbol '" + f.name + "'");
    }

    bool eval_binder(const Wff& f, Env& env, bool universal) {
        bool result = universal;
        bool done = false;
        expand_binder(f, env, [&](Env& inner) {
            if (done) return;
            const bool v = eval(f.children[0], inner);
            if (universal && !v) {
                result = false;
                done = true;
            }
            if (!universal && v) {
                result = true;
                done = true;
            }
        });
        return result;
    }

    const Interpretation& interp_;
    const QuantifierBudget& budget_;
};

}  // namespace

GroundFormula ground(const Wff& f, const Interpretation& interp, const QuantifierBudget& budget) {
    budget.validate();
    Machine m(interp, budget);
    Env env;
    return GroundFormula{m.ground(f, env)};
}

bool evaluate(const Wff& f, const Interpretation& interp, const QuantifierBudget& budget,
              const std::map<std::string, std::string>& assignment) {
    budget.validate();
    Machine m(interp, budget);
    Env env;
    env.vars = assignment;
    return m.eval(f, env);
}

void collect_atoms_into(const Wff& f, std::map<std::string, Wff>& out) {
    switch (f.kind) {
        case WffKind::Atom:
            out.emplace(format_formula(f), f);
            return;
        case WffKind::TrueLit:
        case WffKind::FalseLit:
            return;
        default:
            for (const auto& c : f.children) collect_atoms_into(c, out);
            return;
    }
}

std::vector<Wff> collect_atoms(const Wff& f) {
    std::map<std::string, Wff> atoms;
    collect_atoms_into(f, atoms);
    std::vector<Wff> out;
    out.reserve(atoms.size());
    for (auto& [key, a] : atoms) {
        (void)key;
        out.push_back(a);
    }
    return out;
}

}  // namespace mltmf
