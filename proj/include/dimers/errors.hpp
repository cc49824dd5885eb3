#pragma once

#include <stdexcept>
#include <string>

namespace dimers {

// A computation would exceed its configured state-space budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact identity that the theory guarantees failed to hold.
// Always indicates an implementation bug, never bad user input.
class CheckFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A 2-adic square root was requested of a residue that is not ≡ 1 (mod 8).
class NotASquare : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A rational with negative 2-adic valuation reached a mod-2^K reduction.
class NegativeValuation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Quasi-polynomial fitting: the sample set admits no solution at the
// requested degree bound.
class InconsistentSamples : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quasi-polynomial fitting: too few sample points to pin down a solution.
class UnderdeterminedFit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dimers
