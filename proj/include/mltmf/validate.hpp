#pragma once

#include <string>
#include <vector>

#include "mltmf/ast.hpp"

namespace mltmf {

enum class FindingKind { UnknownSymbol, ArityMismatch, SelfApplication };

const char* finding_kind_name(FindingKind k) noexcept;

struct Finding {
    FindingKind kind;
    std::string symbol;
    std::string path;     // tree path from the root, e.g. "lhs/arg[0]"
    int expected = -1;    // ArityMismatch only
    int got = -1;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool ok() const { return findings.empty(); }
};

// Structural well-formedness over a signature: every applied symbol declared
// with the right arity, and no function or predicate symbol applied, directly
// or indirectly, to itself. The report is empty iff `f` is well formed.
ValidationReport validate_wff(const Wff& f, const Signature& sig);

}  // namespace mltmf
