#pragma once

#include <stdexcept>
#include <string>

namespace fairlist {

/// Raised for malformed user input: files, columns, flag values.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fairlist
