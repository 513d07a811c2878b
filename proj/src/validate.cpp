#include "mltmf/validate.hpp"

#include <set>

namespace mltmf {

const char* finding_kind_name(FindingKind k) noexcept {
    switch (k) {
        case FindingKind::UnknownSymbol: return "UnknownSymbol";
        case FindingKind::ArityMismatch: return "ArityMismatch";
        case FindingKind::SelfApplication: return "SelfApplication";
    }
    return "?";
}

namespace {

class Validator {
public:
    Validator(const Signature& sig, ValidationReport& report) : sig_(sig), report_(report) {}

    void walk(const Wff& f, const std::string& path) {
        switch (f.kind) {
            case WffKind::Atom:
                check_application(f.name, true, f.args.size(), path);
                walk_args(f.name, f.args, path);
                break;
            case WffKind::TrueLit:
            case WffKind::FalseLit:
                break;
            case WffKind::Not:
                walk(f.children[0], path + "/~");
                break;
            case WffKind::ForAll:
            case WffKind::Exists: {
                if (f.binder == BinderSort::Function && !sig_.is_function(f.name))
                    add(FindingKind::UnknownSymbol, f.name, path);
                if (f.binder == BinderSort::Predicate && !sig_.is_predicate(f.name))
                    add(FindingKind::UnknownSymbol, f.name, path);
                walk(f.children[0], path + "/body");
                break;
            }
            default:
                walk(f.children[0], path + "/lhs");
                walk(f.children[1], path + "/rhs");
                break;
        }
    }

private:
    void walk_args(const std::string& head, const std::vector<Term>& args, const std::string& path) {
        banned_.insert(head);
        for (std::size_t i = 0; i < args.size(); ++i)
            walk_term(args[i], path + "/arg[" + std::to_string(i) + "]");
        banned_.erase(head);
    }

    void walk_term(const Term& t, const std::string& path) {
        switch (t.kind) {
            case TermKind::Variable:
                // Declared symbols used bare are misclassified trees, not vars.
                if (sig_.is_function(t.name) || sig_.is_predicate(t.name))
                    add(FindingKind::ArityMismatch, t.name, path,
                        sig_.is_function(t.name) ? sig_.functions.at(t.name)
                                                 : sig_.predicates.at(t.name),
                        0);
                break;
            case TermKind::Constant:
                if (!sig_.is_constant(t.name)) add(FindingKind::UnknownSymbol, t.name, path);
                break;
            case TermKind::FunctionApp:
            case TermKind::PredicateTerm: {
                const bool is_fn = t.kind == TermKind::FunctionApp;
                check_application(t.name, !is_fn, t.args.size(), path);
                banned_.insert(t.name);
                for (std::size_t i = 0; i < t.args.size(); ++i)
                    walk_term(t.args[i], path + "/arg[" + std::to_string(i) + "]");
                banned_.erase(t.name);
                break;
            }
        }
    }

    void check_application(const std::string& name, bool as_predicate, std::size_t got,
                           const std::string& path) {
        const auto& table = as_predicate ? sig_.predicates : sig_.functions;
        auto it = table.find(name);
        if (it == table.end()) {
            add(FindingKind::UnknownSymbol, name, path);
            return;
        }
        if (static_cast<std::size_t>(it->second) != got)
            add(FindingKind::ArityMismatch, name, path, it->second, static_cast<int>(got));
        if (banned_.count(name)) add(FindingKind::SelfApplication, name, path);
    }

    void add(FindingKind kind, const std::string& symbol, const std::string& path,
             int expected = -1, int got = -1) {
        report_.findings.push_back(Finding{kind, symbol, path, expected, got});
    }

    const Signature& sig_;
    ValidationReport& report_;
    // Heads of the enclosing applications; hitting one again is a direct or
    // indirect self-application.
    std::multiset<std::string> banned_;
};

}  // namespace

ValidationReport validate_wff(const Wff& f, const Signature& sig) {
    ValidationReport report;
    Validator v(sig, report);
    v.walk(f, "root");
    return report;
}

}  // namespace mltmf
