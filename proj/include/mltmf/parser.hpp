#pragma once

#include <string>
#include <vector>

#include "mltmf/ast.hpp"

namespace mltmf {

// Parses one formula. Grammar, tightest first: ~  &  |  ->  <->, with -> and
// <-> right-associative and & / | chained to the right. Binders are written
// `forall x. body` / `exists x. body` and their body extends as far right as
// possible. `true` and `false` are reserved truth constants; `#` starts a
// line comment.
//
// Every applied identifier must be declared in `sig`; anything else is a
// variable. Throws ParseError (SyntaxError, UnknownSymbol, ArityMismatch,
// SelfApplication).
Wff parse_formula(const std::string& text, const Signature& sig);

// Parses a formula-per-line document, skipping blanks and comments.
std::vector<Wff> parse_formula_lines(const std::string& text, const Signature& sig);

}  // namespace mltmf
