#pragma once
#include <stdexcept>
#include <string>

namespace secular {

// argument breaks a documented precondition (CLI exit code 1)
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// computation would exceed a size budget (CLI exit code 2)
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an internal cross-check failed (CLI exit code 3)
struct verification_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw precondition_error("precondition violated: " + what);
}

inline void require_budget(bool ok, const std::string& what) {
    if (!ok) throw budget_error("budget exceeded: " + what);
}

inline void require_verified(bool ok, const std::string& what) {
    if (!ok) throw verification_error("verification failed: " + what);
}

} // namespace secular
