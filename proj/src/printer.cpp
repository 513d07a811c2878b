#include <string>

#include "mltmf/ast.hpp"
#include "mltmf/errors.hpp"

namespace mltmf {

namespace {

int precedence(const Wff& f) {
    switch (f.kind) {
        case WffKind::Iff: return 0;
        case WffKind::Implies: return 1;
        case WffKind::Or: return 2;
        case WffKind::And: return 3;
        case WffKind::Not: return 4;
        default: return 5;
    }
}

bool is_binder(const Wff& f) { return f.kind == WffKind::ForAll || f.kind == WffKind::Exists; }

// `required` is the minimal precedence this position accepts without parens;
// `tail` marks positions that extend to the end of the enclosing unit, where
// a binder body soaks up the rest of the input anyway.
void print(const Wff& f, int required, bool tail, std::string& out) {
    if (is_binder(f)) {
        const bool parens = !tail;
        if (parens) out += '(';
        out += f.kind == WffKind::ForAll ? "forall " : "exists ";
        out += f.name;
        out += ". ";
        print(f.children[0], 0, true, out);
        if (parens) out += ')';
        return;
    }
    const int p = precedence(f);
    const bool parens = p < required;
    if (parens) out += '(';
    // Inside parens the last operand is followed by ')', so it is a tail again.
    const bool inner_tail = tail || parens;
    switch (f.kind) {
        case WffKind::Atom: {
            out += f.name;
            out += '(';
            for (std::size_t i = 0; i < f.args.size(); ++i) {
                if (i) out += ',';
                out += format_term(f.args[i]);
            }
            out += ')';
            break;
        }
        case WffKind::TrueLit: out += "true"; break;
        case WffKind::FalseLit: out += "false"; break;
        case WffKind::Not:
            out += '~';
            print(f.children[0], 4, inner_tail, out);
            break;
        case WffKind::And:
            print(f.children[0], 4, false, out);
            out += " & ";
            print(f.children[1], 3, inner_tail, out);
            break;
        case WffKind::Or:
            print(f.children[0], 3, false, out);
            out += " | ";
            print(f.children[1], 2, inner_tail, out);
            break;
        case WffKind::Implies:
            print(f.children[0], 2, false, out);
            out += " -> ";
            print(f.children[1], 1, inner_tail, out);
            break;
        case WffKind::Iff:
            print(f.children[0], 1, false, out);
            out += " <-> ";
            print(f.children[1], 0, inner_tail, out);
            break;
        default:
            throw Error(Errc::Usage, "unreachable in printer");
    }
    if (parens) out += ')';
}

}  // namespace

std::string format_term(const Term& t) {
    std::string out = t.name;
    if (t.kind == TermKind::FunctionApp || t.kind == TermKind::PredicateTerm) {
        out += '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ',';
            out += format_term(t.args[i]);
        }
        out += ')';
    }
    return out;
}

std::string format_formula(const Wff& f) {
    std::string out;
    print(f, 0, true, out);
    return out;
}

}  // namespace mltmf
