#ifndef RCA_ERRORS_HPP
#define RCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rca {

// Thrown when two cyclotomic values of different orders meet without an
// explicit embedding.
struct OrderMismatchError : std::invalid_argument {
    explicit OrderMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

struct DivisionByZeroError : std::domain_error {
    explicit DivisionByZeroError(const std::string& what)
        : std::domain_error(what) {}
};

// Exact division left a nonzero remainder.  Inside the operator code this
// signals an implementation bug, since reflection differences are always
// divisible by the corresponding linear form.
struct NotDivisibleError : std::domain_error {
    explicit NotDivisibleError(const std::string& what)
        : std::domain_error(what) {}
};

// Exhaustive-search domain exceeds the configured cap.
struct BruteCapError : std::invalid_argument {
    explicit BruteCapError(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace rca

#endif
