#pragma once
#include <stdexcept>
#include <string>

namespace aak {

// Malformed or precondition-violating caller input (CLI exit code 1).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal runtime law: indicates a defect, not bad input
// (CLI exit code 2).
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace aak
