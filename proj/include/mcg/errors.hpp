#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

// Malformed input text: slope strings, config / binding / script files.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word references a curve label the binding does not cover.
struct unbound_label_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The relation cannot be checked in the requested representation at all,
// as opposed to being checked and failing.
struct unrepresentable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mcg
