#pragma once

#include <stdexcept>
#include <string>

namespace harmonic {

struct EmptyTaskSet : std::runtime_error {
    EmptyTaskSet() : std::runtime_error("task set is empty") {}
};

struct InvalidTask : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MultiplierOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHarmonic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IterationLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace harmonic
