#include "mltmf/interpretation.hpp"

#include <algorithm>

#include "mltmf/errors.hpp"

namespace mltmf {

void QuantifierBudget::validate() const {
    if (max_domain_for_ho < 1 || max_ho_arity < 1 || max_ground_atoms < 1)
        throw Error(Errc::Usage, "budget values must be positive");
}

std::uint64_t QuantifierBudget::max_candidates() const {
    std::uint64_t exponent = 1;
    for (int i = 0; i < max_ho_arity; ++i) exponent *= static_cast<std::uint64_t>(max_domain_for_ho);
    if (exponent >= 63) return UINT64_MAX;
    return std::uint64_t{1} << exponent;
}

bool Interpretation::has_element(const std::string& name) const {
    return std::find(domain.begin(), domain.end(), name) != domain.end();
}

Signature Interpretation::signature() const {
    Signature sig;
    for (const auto& d : domain) sig.constants.insert(d);
    for (const auto& [name, value] : constants) {
        (void)value;
        sig.constants.insert(name);
    }
    for (const auto& [name, table] : functions) sig.add_function(name, table.arity);
    for (const auto& [name, table] : relations) sig.add_predicate(name, table.arity);
    return sig;
}

void Interpretation::pad_function_table(const std::string& name, int arity,
                                        const std::string& value) {
    auto& table = functions[name];
    table.arity = arity;
    for (const auto& tuple : all_tuples(domain, arity)) {
        if (!table.entries.count(tuple)) table.entries[tuple] = value;
    }
}

void validate_interpretation(const Interpretation& interp) {
    if (interp.domain.empty()) throw Error(Errc::Usage, "interpretation domain must be non-empty");
    std::set<std::string> seen;
    for (const auto& d : interp.domain)
        if (!seen.insert(d).second) throw Error(Errc::Usage, "duplicate domain element: " + d);

    auto require_element = [&](const std::string& e, const std::string& where) {
        if (!seen.count(e))
            throw Error(Errc::Usage, where + " refers to non-domain element '" + e + "'");
    };
    for (const auto& [name, value] : interp.constants) require_element(value, "constant " + name);
    if (!interp.designated_true.empty()) require_element(interp.designated_true, "designated_true");
    if (!interp.designated_false.empty())
        require_element(interp.designated_false, "designated_false");

    for (const auto& [name, table] : interp.functions) {
        if (table.arity < 1) throw Error(Errc::Usage, "function arity must be positive: " + name);
        for (const auto& [key, value] : table.entries) {
            if (key.size() != static_cast<std::size_t>(table.arity))
                throw Error(Errc::Usage, "ragged function table: " + name);
            for (const auto& e : key) require_element(e, "function " + name);
            require_element(value, "function " + name);
        }
        std::uint64_t expected = 1;
        for (int i = 0; i < table.arity; ++i) expected *= interp.domain.size();
        if (table.entries.size() != expected)
            throw Error(Errc::MissingTable, "function table not total: " + name);
    }
    for (const auto& [name, table] : interp.relations) {
        if (table.arity < 1) throw Error(Errc::Usage, "relation arity must be positive: " + name);
        for (const auto& tuple : table.tuples) {
            if (tuple.size() != static_cast<std::size_t>(table.arity))
                throw Error(Errc::Usage, "ragged relation table: " + name);
            for (const auto& e : tuple) require_element(e, "relation " + name);
        }
    }
}

std::vector<Tuple> all_tuples(const std::vector<std::string>& domain, int arity) {
    std::vector<Tuple> out;
    std::uint64_t count = 1;
    for (int i = 0; i < arity; ++i) count *= domain.size();
    out.reserve(count);
    Tuple current(arity);
    std::vector<std::size_t> idx(arity, 0);
    for (std::uint64_t n = 0; n < count; ++n) {
        for (int i = 0; i < arity; ++i) current[i] = domain[idx[i]];
        out.push_back(current);
        for (int i = arity - 1; i >= 0; --i) {
            if (++idx[i] < domain.size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

}  // namespace mltmf
