#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mltmf/state_set.hpp"

namespace mltmf {

// A deterministic finite automaton with output (Mealy-style): next-state and
// output tables total over states x inputs, plus the strictly increasing time
// labels the encoding runs over.
struct FiniteAutomaton {
    std::vector<std::string> states;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::map<std::pair<std::string, std::string>, std::string> next;  // (state, input) -> state
    std::map<std::pair<std::string, std::string>, std::string> out;   // (state, input) -> output
    std::vector<std::string> times;
};

void validate_automaton(const FiniteAutomaton& m);

struct Trace {
    std::vector<std::string> states;   // |word| + 1 entries
    std::vector<std::string> outputs;  // |word| entries, emitted at t_{i+1}
};

Trace simulate(const FiniteAutomaton& m, const std::string& initial_state,
               const std::vector<std::string>& input_word);

// The logical image of a run: per step, the state/input/output assertions and
// the transition and output implications, realized by an interpretation built
// from the simulated trace.
struct EncodedAutomaton {
    StateSet state_set;
    std::string machine_constant;
    std::string output_set_constant;
};

EncodedAutomaton encode_automaton(const FiniteAutomaton& m, const std::string& initial_state,
                                  const std::vector<std::string>& input_word);

// True iff every encoded formula evaluates true under the bundled
// realization. Missing tables count as verification failure.
bool verify_trace(const EncodedAutomaton& e, const QuantifierBudget& budget = {});

// Recognizer for state sets of the encoded-automaton shape; used for the
// information-system flag.
bool is_automaton_state(const StateSet& s);

}  // namespace mltmf
