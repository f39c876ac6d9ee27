#pragma once

#include <stdexcept>
#include <string>

namespace greymadm {

/// Malformed input: schema violations, unknown linguistic terms, ordering
/// violations, dimension mismatches. Maps to process exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally valid input on which a computation collapses (all plans
/// identical, zero denominators, uniform entropy). Maps to exit code 3.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace greymadm
