#pragma once

#include <stdexcept>
#include <string>

namespace pinlab {

/// Argument outside the domain of an operation (e.g. evaluating past the horizon).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A documented precondition of an operation does not hold.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A greedy partition needed more intervals than the admissibility budget allows.
struct AdmissibilityError : std::runtime_error {
    AdmissibilityError(const std::string& what, long long achieved_k, long long budget)
        : std::runtime_error(what), achieved_k(achieved_k), budget(budget) {}
    long long achieved_k;
    long long budget;
};

/// The red/blue/green structure of a profile broke an invariant the construction relies on.
struct StructureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search would exceed its enumeration guard.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Geometric construction at a singular configuration.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pinlab
