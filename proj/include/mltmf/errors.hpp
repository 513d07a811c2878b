#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mltmf {

// Machine-readable error categories. The names below are also the reason
// codes emitted in JSON reports and mapped to CLI exit codes.
enum class Errc {
    Syntax,
    UnknownSymbol,
    ArityMismatch,
    SelfApplication,
    BudgetExceeded,
    MissingTable,
    NotTotal,
    NotSurjective,
    LossNotSubset,
    SuperposedOverlaps,
    ResultInconsistent,
    ComponentMismatch,
    SignatureMismatch,
    NotLearnable,
    NotProcessable,
    WordTooLong,
    SupportMismatch,
    InfiniteDivergence,
    TooLargeForExact,
    Io,
    Usage,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

// Source position for parse diagnostics (1-based).
struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public Error {
public:
    ParseError(Errc code, SourcePos pos, std::string message)
        : Error(code, std::move(message)), pos_(pos) {}

    SourcePos pos() const noexcept { return pos_; }

private:
    SourcePos pos_;
};

}  // namespace mltmf
