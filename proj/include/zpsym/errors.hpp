#pragma once

#include <stdexcept>

namespace zpsym {

/// An argument combination outside an operation's stated domain.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A divisor that is structurally unusable: zero denominator, series whose
/// valuation does not match the requested shift, q = 1 in a q-recursion.
struct degenerate_divisor_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A p-adic operation would leave fewer than one significant digit.
struct precision_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zpsym
