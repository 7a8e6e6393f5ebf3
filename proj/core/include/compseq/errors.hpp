#pragma once

#include <stdexcept>
#include <string>

namespace compseq {

/// Input violates an operation's stated domain (bad lengths, alphabet
/// violations, malformed text, broken preconditions).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The request is well formed but exceeds a configured capability limit
/// (for example an exhaustive-enumeration cap). Distinct from DomainError
/// so callers can tell "can't" from "won't ever".
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace compseq
