#pragma once

#include <stdexcept>
#include <string>

namespace rsq {

/// Parameter outside an operation's mathematical domain (e.g. theta >= theta_max).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Model-hypothesis violation (e.g. the large-deviations x-condition).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bracketed root could not be found (target slope unreachable).
class RootNotFoundError : public std::runtime_error {
public:
    RootNotFoundError(const std::string& msg, double achievable_sup)
        : std::runtime_error(msg), achievable_supremum(achievable_sup) {}
    double achievable_supremum;
};

} // namespace rsq
