#pragma once

#include <stdexcept>
#include <string>

namespace dd {

// Unusable input: malformed file, empty dataset, contract violation in data.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Training or evaluation produced a non-finite value.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dd
