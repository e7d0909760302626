#pragma once

#include <stdexcept>
#include <string>

namespace dit {

/// Precondition violation on caller-supplied data.
class rejected_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed its configured bound.
class budget_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace dit
