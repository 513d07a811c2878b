#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mltmf/ast.hpp"

namespace mltmf {

// Caps on higher-order quantifier expansion. Expansion counts beyond the cap
// raise BudgetExceeded rather than silently truncating.
struct QuantifierBudget {
    int max_domain_for_ho = 4;
    int max_ho_arity = 2;
    int max_ground_atoms = 24;

    void validate() const;
    // Largest candidate count ever enumerated: all relations of the maximal
    // arity over the maximal domain.
    std::uint64_t max_candidates() const;
};

using Tuple = std::vector<std::string>;

struct FunctionTable {
    int arity = 1;
    std::map<Tuple, std::string> entries;

    bool operator==(const FunctionTable&) const = default;
};

struct RelationTable {
    int arity = 1;
    std::set<Tuple> tuples;

    bool contains(const Tuple& t) const { return tuples.count(t) > 0; }
    bool operator==(const RelationTable&) const = default;
};

// A finite interpretation: named domain elements, constant assignments, total
// function tables, relation tables, and the designated pair of elements that
// predicate-terms evaluate to.
struct Interpretation {
    std::vector<std::string> domain;
    std::map<std::string, std::string> constants;
    std::map<std::string, FunctionTable> functions;
    std::map<std::string, RelationTable> relations;
    std::string designated_true;
    std::string designated_false;

    bool has_element(const std::string& name) const;

    // Symbols interpreted by the tables. Domain elements double as constants
    // naming themselves, so grounded formulas stay parseable.
    Signature signature() const;

    // Fills a function table with `value` on every missing input tuple.
    void pad_function_table(const std::string& name, int arity, const std::string& value);

    bool operator==(const Interpretation&) const = default;
};

// Checks the structural invariants: non-empty domain, assignments into the
// domain, totality and arity consistency of every table. Throws on violation.
void validate_interpretation(const Interpretation& interp);

// All arity-n tuples over the domain, in lexicographic index order.
std::vector<Tuple> all_tuples(const std::vector<std::string>& domain, int arity);

}  // namespace mltmf
