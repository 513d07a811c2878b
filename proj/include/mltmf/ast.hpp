#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace mltmf {

// ── Signature ────────────────────────────────────────────────────────────────
// Declares the non-variable vocabulary of a formula language. Any identifier
// not declared here is read as a variable. Names are unique across the three
// symbol classes and every arity is >= 1.

struct Signature {
    std::set<std::string> constants;
    std::map<std::string, int> functions;   // name -> arity
    std::map<std::string, int> predicates;  // name -> arity

    void add_constant(const std::string& name);
    void add_function(const std::string& name, int arity);
    void add_predicate(const std::string& name, int arity);

    bool is_constant(const std::string& name) const { return constants.count(name) > 0; }
    bool is_function(const std::string& name) const { return functions.count(name) > 0; }
    bool is_predicate(const std::string& name) const { return predicates.count(name) > 0; }
    bool declares(const std::string& name) const {
        return is_constant(name) || is_function(name) || is_predicate(name);
    }

    int function_arity(const std::string& name) const;
    int predicate_arity(const std::string& name) const;

    // Merge `other` into this signature; conflicting declarations (same name,
    // different class or arity) raise SignatureMismatch.
    void merge(const Signature& other);
    bool compatible_with(const Signature& other) const;

    bool operator==(const Signature&) const = default;
};

// ── Term ─────────────────────────────────────────────────────────────────────
// Variables, constants, function applications, and predicate applications in
// term position (predicates applied to terms are themselves terms here).

enum class TermKind { Variable, Constant, FunctionApp, PredicateTerm };

struct Term {
    TermKind kind = TermKind::Variable;
    std::string name;
    std::vector<Term> args;  // empty for Variable/Constant

    bool operator==(const Term&) const = default;
};

// ── Wff ──────────────────────────────────────────────────────────────────────
// Core connectives are Atom / Not / Implies / ForAll; And, Or, Iff and Exists
// are defined sugar that desugar() removes. TrueLit/FalseLit are truth
// constants used as the grounding normal form's leaves.

enum class WffKind { Atom, Not, Implies, And, Or, Iff, ForAll, Exists, TrueLit, FalseLit };

// A binder ranges over a plain variable or over a declared function or
// predicate symbol (higher-order quantification).
enum class BinderSort { Variable, Function, Predicate };

struct Wff {
    WffKind kind = WffKind::TrueLit;
    std::string name;                    // Atom: predicate; ForAll/Exists: bound symbol
    BinderSort binder = BinderSort::Variable;
    std::vector<Term> args;              // Atom arguments
    std::vector<Wff> children;           // 1 for Not/binders, 2 for binary connectives

    bool operator==(const Wff&) const = default;
};

// Builders.
Term variable(std::string name);
Term constant(std::string name);
Term fn_app(std::string name, std::vector<Term> args);
Term pred_term(std::string name, std::vector<Term> args);

Wff atom(std::string predicate, std::vector<Term> args);
Wff lnot(Wff f);
Wff implies(Wff a, Wff b);
Wff land(Wff a, Wff b);
Wff lor(Wff a, Wff b);
Wff liff(Wff a, Wff b);
Wff forall(std::string symbol, BinderSort sort, Wff body);
Wff exists(std::string symbol, BinderSort sort, Wff body);
Wff verum();
Wff falsum();

// Right-nested conjunction/disjunction of a non-empty list; a single element
// is returned as-is.
Wff conjoin(const std::vector<Wff>& fs);
Wff disjoin(const std::vector<Wff>& fs);

// Rewrites And/Or/Iff/Exists into the ~ / -> / forall core. Identity on the
// core fragment and idempotent.
Wff desugar(const Wff& f);

// Structural equality modulo sugar.
bool equal_desugared(const Wff& a, const Wff& b);

// Deterministic total order (used for canonical formula sets).
int compare(const Term& a, const Term& b);
int compare(const Wff& a, const Wff& b);

struct WffLess {
    bool operator()(const Wff& a, const Wff& b) const { return compare(a, b) < 0; }
};

// Free variables of a formula (variables not captured by a Variable binder).
std::set<std::string> free_variables(const Wff& f, const Signature& sig);

// Substitutes terms for free variables; binder-shadowed occurrences are left
// alone.
Wff substitute(const Wff& f, const std::map<std::string, Term>& subst);

// ── Printing (format_formula) ────────────────────────────────────────────────
// Deterministic canonical text with minimal parenthesization. Sugar nodes are
// printed with their own connectives, not desugared.

std::string format_term(const Term& t);
std::string format_formula(const Wff& f);

}  // namespace mltmf
