#ifndef DYNATOMIC_ERRORS_HPP
#define DYNATOMIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynatomic {

// phi^n has a non-finite fixed locus (e.g. phi^n is the identity); the
// witness names what was detected.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& witness)
        : std::runtime_error("degenerate iterate: " + witness) {}
};

// Theorem-level consistency failure (a Mobius division left a remainder, a
// certificate did not hold). Must never fire on valid inputs.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what)
        : std::logic_error("internal consistency violation: " + what) {}
};

} // namespace dynatomic

#endif
