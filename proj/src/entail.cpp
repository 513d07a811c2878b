#include "mltmf/entail.hpp"

#include <map>
#include <sstream>

#include "mltmf/errors.hpp"
#include "mltmf/evaluate.hpp"

namespace mltmf {

namespace {

using detail::check_ho_budget;
using detail::mk_and;
using detail::mk_implies;
using detail::mk_not;
using detail::mk_or;

// Canonical element names for the quantifier expansion. The underscore prefix
// keeps them clear of user-declared constants.
std::vector<std::string> canonical_domain(int size) {
    std::vector<std::string> out;
    out.reserve(size);
    for (int i = 1; i <= size; ++i) out.push_back("_d" + std::to_string(i));
    return out;
}

struct SymEnv {
    std::map<std::string, std::string> vars;
    std::map<std::string, RelationTable> rel_overlay;
    std::map<std::string, FunctionTable> fn_overlay;
};

// Grounds without an interpretation: quantified variables range over the
// canonical domain, higher-order binders enumerate candidate tables, and
// everything else stays a syntactic leaf of its propositional atom.
class SymbolicGrounder {
public:
    SymbolicGrounder(const Signature& sig, const std::vector<std::string>& domain,
                     const QuantifierBudget& budget)
        : sig_(sig), domain_(domain), budget_(budget) {}

    Wff ground(const Wff& f, SymEnv& env) {
        switch (f.kind) {
            case WffKind::TrueLit:
            case WffKind::FalseLit:
                return f;
            case WffKind::Atom: {
                if (auto o = env.rel_overlay.find(f.name); o != env.rel_overlay.end()) {
                    Tuple args;
                    args.reserve(f.args.size());
                    for (const auto& a : f.args) args.push_back(resolve_element(a, env, f.name));
                    return o->second.contains(args) ? verum() : falsum();
                }
                Wff out = f;
                for (auto& a : out.args) a = ground_term(a, env);
                return out;
            }
            case WffKind::Not: return mk_not(ground(f.children[0], env));
            case WffKind::And: return mk_and(ground(f.children[0], env), ground(f.children[1], env));
            case WffKind::Or: return mk_or(ground(f.children[0], env), ground(f.children[1], env));
            case WffKind::Implies:
                return mk_implies(ground(f.children[0], env), ground(f.children[1], env));
            case WffKind::Iff:
                return detail::mk_iff(ground(f.children[0], env), ground(f.children[1], env));
            case WffKind::ForAll:
            case WffKind::Exists: {
                const bool universal = f.kind == WffKind::ForAll;
                Wff acc = universal ? verum() : falsum();
                bool first = true;
                std::vector<Wff> parts;
                expand(f, env, [&](SymEnv& inner) { parts.push_back(ground(f.children[0], inner)); });
                for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
                    if (first) {
                        acc = std::move(*it);
                        first = false;
                    } else {
                        acc = universal ? mk_and(std::move(*it), std::move(acc))
                                        : mk_or(std::move(*it), std::move(acc));
                    }
                }
                return acc;
            }
        }
        throw Error(Errc::Usage, "unreachable formula kind");
    }

private:
    Term ground_term(const Term& t, SymEnv& env) {
        switch (t.kind) {
            case TermKind::Variable: {
                auto it = env.vars.find(t.name);
                return it != env.vars.end() ? constant(it->second) : t;
            }
            case TermKind::Constant:
                return t;
            case TermKind::FunctionApp:
                if (auto o = env.fn_overlay.find(t.name); o != env.fn_overlay.end()) {
                    Tuple args;
                    args.reserve(t.args.size());
                    for (const auto& a : t.args) args.push_back(resolve_element(a, env, t.name));
                    auto entry = o->second.entries.find(args);
                    if (entry == o->second.entries.end())
                        throw Error(Errc::MissingTable, "candidate table miss for '" + t.name + "'");
                    return constant(entry->second);
                }
                [[fallthrough]];
            case TermKind::PredicateTerm: {
                Term out = t;
                for (auto& a : out.args) a = ground_term(a, env);
                return out;
            }
        }
        throw Error(Errc::Usage, "unreachable term kind");
    }

    // Arguments of a higher-order-bound symbol must denote canonical domain
    // elements once variables are substituted; anything else has no decidable
    // membership without an interpretation.
    std::string resolve_element(const Term& t, SymEnv& env, const std::string& binder) {
        const Term g = ground_term(t, env);
        if (g.kind == TermKind::Constant) {
            for (const auto& d : domain_)
                if (d == g.name) return g.name;
        }
        throw Error(Errc::Usage,
                    "argument '" + format_term(g) + "' of higher-order bound symbol '" + binder +
                        "' does not denote a domain element; only quantified variables are "
                        "supported there in signature-level entailment");
    }

    template <typename Visit>
    void expand(const Wff& f, SymEnv& env, Visit&& visit) {
        switch (f.binder) {
            case BinderSort::Variable: {
                const bool had = env.vars.count(f.name) > 0;
                const std::string saved = had ? env.vars[f.name] : std::string();
                for (const auto& e : domain_) {
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
                const int arity = sig_.predicate_arity(f.name);
                const std::uint64_t masks =
                    check_ho_budget(f.name, arity, domain_.size(), false, budget_);
                const auto tuples = all_tuples(domain_, arity);
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
                const int arity = sig_.function_arity(f.name);
                check_ho_budget(f.name, arity, domain_.size(), true, budget_);
                const auto tuples = all_tuples(domain_, arity);
                std::vector<std::size_t> choice(tuples.size(), 0);
                while (true) {
                    FunctionTable cand;
                    cand.arity = arity;
                    for (std::size_t i = 0; i < tuples.size(); ++i)
                        cand.entries[tuples[i]] = domain_[choice[i]];
                    env.fn_overlay[f.name] = std::move(cand);
                    visit(env);
                    std::size_t i = 0;
                    for (; i < choice.size(); ++i) {
                        if (++choice[i] < domain_.size()) break;
                        choice[i] = 0;
                    }
                    if (i == choice.size()) break;
                }
                env.fn_overlay.erase(f.name);
                return;
            }
        }
    }

    const Signature& sig_;
    const std::vector<std::string>& domain_;
    const QuantifierBudget& budget_;
};

// ── Propositional search ────────────────────────────────────────────────────
// Formulas are compiled to index trees over the sorted atom list; the search
// assigns atoms in lexicographic order with forced-atom propagation.

struct Node {
    enum class Op : std::uint8_t { Var, True, False, Not, And, Or, Implies, Iff };
    Op op = Op::True;
    int a = -1;
    int b = -1;
    int var = -1;
};

class Solver {
public:
    explicit Solver(const std::vector<Wff>& ground_formulas) {
        std::map<std::string, Wff> atom_map;
        for (const auto& f : ground_formulas) collect_atoms_into(f, atom_map);
        int index = 0;
        for (const auto& [key, a] : atom_map) {
            (void)a;
            atom_index_[key] = index++;
        }
        atom_count_ = index;
        for (const auto& f : ground_formulas) roots_.push_back(compile(f));
    }

    int atom_count() const { return atom_count_; }

    bool satisfiable() {
        std::vector<int8_t> assignment(atom_count_, -1);
        return search(assignment);
    }

private:
    int compile(const Wff& f) {
        Node n;
        switch (f.kind) {
            case WffKind::Atom:
                n.op = Node::Op::Var;
                n.var = atom_index_.at(format_formula(f));
                break;
            case WffKind::TrueLit: n.op = Node::Op::True; break;
            case WffKind::FalseLit: n.op = Node::Op::False; break;
            case WffKind::Not:
                n.op = Node::Op::Not;
                n.a = compile(f.children[0]);
                break;
            case WffKind::And:
            case WffKind::Or:
            case WffKind::Implies:
            case WffKind::Iff:
                n.op = f.kind == WffKind::And       ? Node::Op::And
                       : f.kind == WffKind::Or      ? Node::Op::Or
                       : f.kind == WffKind::Implies ? Node::Op::Implies
                                                    : Node::Op::Iff;
                n.a = compile(f.children[0]);
                n.b = compile(f.children[1]);
                break;
            default:
                throw Error(Errc::Usage, "quantifier survived grounding");
        }
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size()) - 1;
    }

    // Three-valued evaluation: -1 unknown, 0 false, 1 true.
    int eval3(int idx, const std::vector<int8_t>& assignment) const {
        const Node& n = nodes_[idx];
        switch (n.op) {
            case Node::Op::Var: return assignment[n.var];
            case Node::Op::True: return 1;
            case Node::Op::False: return 0;
            case Node::Op::Not: {
                const int v = eval3(n.a, assignment);
                return v < 0 ? -1 : 1 - v;
            }
            case Node::Op::And: {
                const int x = eval3(n.a, assignment);
                if (x == 0) return 0;
                const int y = eval3(n.b, assignment);
                if (y == 0) return 0;
                return (x == 1 && y == 1) ? 1 : -1;
            }
            case Node::Op::Or: {
                const int x = eval3(n.a, assignment);
                if (x == 1) return 1;
                const int y = eval3(n.b, assignment);
                if (y == 1) return 1;
                return (x == 0 && y == 0) ? 0 : -1;
            }
            case Node::Op::Implies: {
                const int x = eval3(n.a, assignment);
                if (x == 0) return 1;
                const int y = eval3(n.b, assignment);
                if (y == 1) return 1;
                return (x == 1 && y == 0) ? 0 : -1;
            }
            case Node::Op::Iff: {
                const int x = eval3(n.a, assignment);
                const int y = eval3(n.b, assignment);
                if (x < 0 || y < 0) return -1;
                return x == y ? 1 : 0;
            }
        }
        return -1;
    }

    // 1 = all formulas true, 0 = some formula false, -1 = undecided.
    int status(const std::vector<int8_t>& assignment) const {
        int result = 1;
        for (int root : roots_) {
            const int v = eval3(root, assignment);
            if (v == 0) return 0;
            if (v < 0) result = -1;
        }
        return result;
    }

    // Assigns every atom whose value is forced (the opposite value falsifies
    // some formula). Returns false on conflict.
    bool propagate(std::vector<int8_t>& assignment) const {
        bool changed = true;
        while (changed) {
            changed = false;
            const int s = status(assignment);
            if (s == 0) return false;
            if (s == 1) return true;
            for (int v = 0; v < atom_count_; ++v) {
                if (assignment[v] != -1) continue;
                assignment[v] = 0;
                const bool false_ok = status(assignment) != 0;
                assignment[v] = 1;
                const bool true_ok = status(assignment) != 0;
                if (!false_ok && !true_ok) {
                    assignment[v] = -1;
                    return false;
                }
                if (false_ok == true_ok) {
                    assignment[v] = -1;
                } else {
                    assignment[v] = false_ok ? 0 : 1;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search(std::vector<int8_t>& assignment) {
        if (!propagate(assignment)) return false;
        const int s = status(assignment);
        if (s == 1) return true;
        if (s == 0) return false;
        int pick = -1;
        for (int v = 0; v < atom_count_; ++v) {
            if (assignment[v] == -1) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return false;
        for (int value : {0, 1}) {
            std::vector<int8_t> copy = assignment;
            copy[pick] = static_cast<int8_t>(value);
            if (search(copy)) return true;
        }
        return false;
    }

    std::map<std::string, int> atom_index_;
    int atom_count_ = 0;
    std::vector<Node> nodes_;
    std::vector<int> roots_;
};

std::vector<Wff> ground_all(const std::vector<Wff>& formulas, const Signature& sig,
                            int domain_size, const QuantifierBudget& budget) {
    if (domain_size < 1) throw Error(Errc::Usage, "domain size must be positive");
    budget.validate();
    const auto domain = canonical_domain(domain_size);
    SymbolicGrounder grounder(sig, domain, budget);
    std::vector<Wff> out;
    out.reserve(formulas.size());
    for (const auto& f : formulas) {
        SymEnv env;
        out.push_back(grounder.ground(desugar(f), env));
    }
    return out;
}

void enforce_atom_budget(const std::vector<Wff>& ground_formulas, const QuantifierBudget& budget) {
    std::map<std::string, Wff> atoms;
    for (const auto& f : ground_formulas) collect_atoms_into(f, atoms);
    if (atoms.size() > static_cast<std::size_t>(budget.max_ground_atoms)) {
        std::ostringstream msg;
        msg << "grounding produced " << atoms.size() << " atoms, budget allows "
            << budget.max_ground_atoms;
        throw Error(Errc::BudgetExceeded, msg.str());
    }
}

bool unsat(const std::vector<Wff>& ground_formulas) {
    Solver solver(ground_formulas);
    return !solver.satisfiable();
}

}  // namespace

bool entails(const std::vector<Wff>& premises, const Wff& conclusion, const Signature& sig,
             int domain_size, const QuantifierBudget& budget) {
    std::vector<Wff> all = premises;
    all.push_back(lnot(conclusion));
    std::vector<Wff> grounded = ground_all(all, sig, domain_size, budget);
    enforce_atom_budget(grounded, budget);
    return unsat(grounded);
}

ConsistencyVerdict check_consistency(const std::vector<Wff>& formulas, const Signature& sig,
                                     int domain_size, const QuantifierBudget& budget) {
    std::vector<Wff> grounded = ground_all(formulas, sig, domain_size, budget);
    enforce_atom_budget(grounded, budget);
    if (!unsat(grounded)) return ConsistencyVerdict{true, {}};

    // Deletion minimization over the input order: drop a member for good
    // whenever the rest stays unsatisfiable.
    std::vector<std::size_t> core;
    for (std::size_t i = 0; i < formulas.size(); ++i) core.push_back(i);
    for (std::size_t i = 0; i < core.size();) {
        std::vector<Wff> probe;
        for (std::size_t j = 0; j < core.size(); ++j)
            if (j != i) probe.push_back(grounded[core[j]]);
        if (unsat(probe)) {
            core.erase(core.begin() + i);
        } else {
            ++i;
        }
    }
    ConsistencyVerdict verdict;
    verdict.consistent = false;
    for (std::size_t i : core) verdict.core.push_back(formulas[i]);
    return verdict;
}

}  // namespace mltmf
