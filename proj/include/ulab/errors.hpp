#pragma once

#include <stdexcept>
#include <string>

namespace ulab {

// Exit-code mapping for the CLI: input/parameter/size/dimension errors are
// "invalid input" (1), hypothesis/estimation/schedule failures are "diagnosed
// failures" (2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct size_error : input_error {
    using input_error::input_error;
};

struct dimension_error : input_error {
    using input_error::input_error;
};

struct parameter_error : input_error {
    using input_error::input_error;
};

struct range_error : input_error {
    using input_error::input_error;
};

struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct estimation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct schedule_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ulab
