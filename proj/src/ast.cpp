#include "mltmf/ast.hpp"

#include <algorithm>

#include "mltmf/errors.hpp"

namespace mltmf {

void Signature::add_constant(const std::string& name) {
    if (declares(name) && !is_constant(name))
        throw Error(Errc::SignatureMismatch, "symbol already declared in another class: " + name);
    constants.insert(name);
}

void Signature::add_function(const std::string& name, int arity) {
    if (arity < 1) throw Error(Errc::SignatureMismatch, "function arity must be positive: " + name);
    auto it = functions.find(name);
    if (it != functions.end()) {
        if (it->second != arity)
            throw Error(Errc::SignatureMismatch, "conflicting arity for function " + name);
        return;
    }
    if (declares(name))
        throw Error(Errc::SignatureMismatch, "symbol already declared in another class: " + name);
    functions.emplace(name, arity);
}

void Signature::add_predicate(const std::string& name, int arity) {
    if (arity < 1) throw Error(Errc::SignatureMismatch, "predicate arity must be positive: " + name);
    auto it = predicates.find(name);
    if (it != predicates.end()) {
        if (it->second != arity)
            throw Error(Errc::SignatureMismatch, "conflicting arity for predicate " + name);
        return;
    }
    if (declares(name))
        throw Error(Errc::SignatureMismatch, "symbol already declared in another class: " + name);
    predicates.emplace(name, arity);
}

int Signature::function_arity(const std::string& name) const {
    auto it = functions.find(name);
    if (it == functions.end()) throw Error(Errc::UnknownSymbol, "unknown function: " + name);
    return it->second;
}

int Signature::predicate_arity(const std::string& name) const {
    auto it = predicates.find(name);
    if (it == predicates.end()) throw Error(Errc::UnknownSymbol, "unknown predicate: " + name);
    return it->second;
}

void Signature::merge(const Signature& other) {
    for (const auto& c : other.constants) add_constant(c);
    for (const auto& [n, a] : other.functions) add_function(n, a);
    for (const auto& [n, a] : other.predicates) add_predicate(n, a);
}

bool Signature::compatible_with(const Signature& other) const {
    Signature probe = *this;
    try {
        probe.merge(other);
    } catch (const Error&) {
        return false;
    }
    return true;
}

Term variable(std::string name) { return Term{TermKind::Variable, std::move(name), {}}; }
Term constant(std::string name) { return Term{TermKind::Constant, std::move(name), {}}; }
Term fn_app(std::string name, std::vector<Term> args) {
    return Term{TermKind::FunctionApp, std::move(name), std::move(args)};
}
Term pred_term(std::string name, std::vector<Term> args) {
    return Term{TermKind::PredicateTerm, std::move(name), std::move(args)};
}

Wff atom(std::string predicate, std::vector<Term> args) {
    Wff f;
    f.kind = WffKind::Atom;
    f.name = std::move(predicate);
    f.args = std::move(args);
    return f;
}

static Wff unary(WffKind k, Wff a) {
    Wff f;
    f.kind = k;
    f.children.push_back(std::move(a));
    return f;
}

static Wff binary(WffKind k, Wff a, Wff b) {
    Wff f;
    f.kind = k;
    f.children.push_back(std::move(a));
    f.children.push_back(std::move(b));
    return f;
}

Wff lnot(Wff f) { return unary(WffKind::Not, std::move(f)); }
Wff implies(Wff a, Wff b) { return binary(WffKind::Implies, std::move(a), std::move(b)); }
Wff land(Wff a, Wff b) { return binary(WffKind::And, std::move(a), std::move(b)); }
Wff lor(Wff a, Wff b) { return binary(WffKind::Or, std::move(a), std::move(b)); }
Wff liff(Wff a, Wff b) { return binary(WffKind::Iff, std::move(a), std::move(b)); }

Wff forall(std::string symbol, BinderSort sort, Wff body) {
    Wff f = unary(WffKind::ForAll, std::move(body));
    f.name = std::move(symbol);
    f.binder = sort;
    return f;
}

Wff exists(std::string symbol, BinderSort sort, Wff body) {
    Wff f = unary(WffKind::Exists, std::move(body));
    f.name = std::move(symbol);
    f.binder = sort;
    return f;
}

Wff verum() { return Wff{WffKind::TrueLit, "", BinderSort::Variable, {}, {}}; }
Wff falsum() { return Wff{WffKind::FalseLit, "", BinderSort::Variable, {}, {}}; }

Wff conjoin(const std::vector<Wff>& fs) {
    if (fs.empty()) throw Error(Errc::Usage, "conjoin of empty list");
    Wff out = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) out = land(*it, std::move(out));
    return out;
}

Wff disjoin(const std::vector<Wff>& fs) {
    if (fs.empty()) throw Error(Errc::Usage, "disjoin of empty list");
    Wff out = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) out = lor(*it, std::move(out));
    return out;
}

Wff desugar(const Wff& f) {
    switch (f.kind) {
        case WffKind::Atom:
        case WffKind::TrueLit:
        case WffKind::FalseLit:
            return f;
        case WffKind::Not:
            return lnot(desugar(f.children[0]));
        case WffKind::Implies:
            return implies(desugar(f.children[0]), desugar(f.children[1]));
        case WffKind::And:
            // a & b == ~(a -> ~b)
            return lnot(implies(desugar(f.children[0]), lnot(desugar(f.children[1]))));
        case WffKind::Or:
            // a | b == ~a -> b
            return implies(lnot(desugar(f.children[0])), desugar(f.children[1]));
        case WffKind::Iff: {
            // a <-> b == (a -> b) & (b -> a)
            Wff a = desugar(f.children[0]);
            Wff b = desugar(f.children[1]);
            Wff fwd = implies(a, b);
            Wff bwd = implies(b, a);
            return lnot(implies(std::move(fwd), lnot(std::move(bwd))));
        }
        case WffKind::ForAll: {
            Wff out = forall(f.name, f.binder, desugar(f.children[0]));
            return out;
        }
        case WffKind::Exists:
            // exists s. p == ~forall s. ~p
            return lnot(forall(f.name, f.binder, lnot(desugar(f.children[0]))));
    }
    throw Error(Errc::Usage, "unreachable formula kind");
}

bool equal_desugared(const Wff& a, const Wff& b) { return desugar(a) == desugar(b); }

int compare(const Term& a, const Term& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
    return 0;
}

int compare(const Wff& a, const Wff& b) {
    // Canonical text order keeps reports and tie-breaks human-predictable.
    const std::string sa = format_formula(a);
    const std::string sb = format_formula(b);
    if (int c = sa.compare(sb); c != 0) return c < 0 ? -1 : 1;
    if (a == b) return 0;
    // Distinct ASTs with identical text differ only in binder sort.
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    return a.binder < b.binder ? -1 : 1;
}

static void free_vars_term(const Term& t, const Signature& sig, std::set<std::string>& bound,
                           std::set<std::string>& out) {
    switch (t.kind) {
        case TermKind::Variable:
            if (!bound.count(t.name) && !sig.is_constant(t.name)) out.insert(t.name);
            break;
        case TermKind::Constant:
            break;
        case TermKind::FunctionApp:
        case TermKind::PredicateTerm:
            for (const auto& a : t.args) free_vars_term(a, sig, bound, out);
            break;
    }
}

static void free_vars_wff(const Wff& f, const Signature& sig, std::set<std::string>& bound,
                          std::set<std::string>& out) {
    switch (f.kind) {
        case WffKind::Atom:
            for (const auto& a : f.args) free_vars_term(a, sig, bound, out);
            break;
        case WffKind::TrueLit:
        case WffKind::FalseLit:
            break;
        case WffKind::ForAll:
        case WffKind::Exists: {
            const bool shadow = f.binder == BinderSort::Variable && !bound.count(f.name);
            if (shadow) bound.insert(f.name);
            free_vars_wff(f.children[0], sig, bound, out);
            if (shadow) bound.erase(f.name);
            break;
        }
        default:
            for (const auto& c : f.children) free_vars_wff(c, sig, bound, out);
            break;
    }
}

std::set<std::string> free_variables(const Wff& f, const Signature& sig) {
    std::set<std::string> bound, out;
    free_vars_wff(f, sig, bound, out);
    return out;
}

static Term substitute_term(const Term& t, const std::map<std::string, Term>& subst) {
    switch (t.kind) {
        case TermKind::Variable: {
            auto it = subst.find(t.name);
            return it != subst.end() ? it->second : t;
        }
        case TermKind::Constant:
            return t;
        default: {
            Term out = t;
            for (auto& a : out.args) a = substitute_term(a, subst);
            return out;
        }
    }
}

Wff substitute(const Wff& f, const std::map<std::string, Term>& subst) {
    switch (f.kind) {
        case WffKind::Atom: {
            Wff out = f;
            for (auto& a : out.args) a = substitute_term(a, subst);
            return out;
        }
        case WffKind::TrueLit:
        case WffKind::FalseLit:
            return f;
        case WffKind::ForAll:
        case WffKind::Exists: {
            if (f.binder == BinderSort::Variable && subst.count(f.name)) {
                auto inner = subst;
                inner.erase(f.name);
                Wff out = f;
                out.children[0] = substitute(f.children[0], inner);
                return out;
            }
            Wff out = f;
            out.children[0] = substitute(f.children[0], subst);
            return out;
        }
        default: {
            Wff out = f;
            for (auto& c : out.children) c = substitute(c, subst);
            return out;
        }
    }
}

}  // namespace mltmf
