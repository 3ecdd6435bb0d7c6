#pragma once

#include <stdexcept>
#include <string>

namespace ecg {

// Arguments outside an operation's contract (bad vertex, bad length, ...).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A stated precondition does not hold (e.g. the set lacks the dependence
// property, or the graph has joint monochromatic triangles).
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Size guard on an exhaustive operation.
struct guard_error : input_error {
  using input_error::input_error;
};

// Invalid sweep configuration.
struct config_error : input_error {
  using input_error::input_error;
};

// Malformed ECG input. `line` is 1-based.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  int line;
};

// A machine-checked statement failed where the theory says it cannot.
// Harness code catches this and records a counterexample.
struct lemma_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ecg
