#pragma once

#include <stdexcept>
#include <string>

namespace qmono {

/// Input that violates an operation's precondition (bad bit string, index out
/// of range, malformed domain object).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A transform or constructor was configured with parameters it cannot honor.
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive search or a machine run hit its explicit cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Attempt to touch a string at or below a staged oracle's watermark.
class StagingViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A construction reached a state its invariants rule out.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qmono
