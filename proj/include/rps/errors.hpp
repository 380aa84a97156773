#pragma once

#include <stdexcept>
#include <string>

namespace rps {

// Caller-side misuse (bad arguments, violated preconditions, unparsable
// input). The CLI maps this whole family to exit code 2.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct precondition_error : input_error {
    using input_error::input_error;
};

struct parse_error : input_error {
    using input_error::input_error;
};

// Division by zero and friends.
struct arithmetic_error : input_error {
    using input_error::input_error;
};

// x^2+1 has no root mod p unless p = 2 or p = 1 (mod 4).
struct no_root_error : input_error {
    using input_error::input_error;
};

// Series sum requested for a polynomial whose reciprocal series diverges.
struct divergence_error : input_error {
    using input_error::input_error;
};

// Greedy target provably (or by policy) not attainable.
struct unreachable_target_error : input_error {
    using input_error::input_error;
};

// Work guard tripped (index cap, factoring budget). Exit code 1.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A proven invariant failed at runtime. Never absorbed. Exit code 1.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace rps
