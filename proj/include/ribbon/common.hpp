#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ribbon {

// All diagram coordinates, diagonal indices and part sizes fit comfortably in
// 64 bits at the scales this library is meant for (desk-scale verification).
using Int = long long;

// Library-wide error. A single exception type with a category keeps call
// sites simple; the category is part of the contract (the CLI maps it to
// exit codes, the tests assert on it).
class Error : public std::runtime_error {
public:
    enum class Kind {
        FillMismatch,          // edge sequence does not have the fills an operation requires
        Divergent,             // an infinite sum was requested (right fill 1 under cumulation)
        NotApplicable,         // ribbon addition/removal at a head where the bit pair does not match
        NotACore,              // claimed core has a removable ribbon
        NotCovering,           // a correspondence was asked about a non-cover pair
        PreconditionViolated,  // strip/admissibility precondition of a datum fails
        CoreMismatch,          // shapes fed to a datum do not share the required core
        Inadmissible,          // asymmetric datum input fails its profile constraints
        InvalidInput,          // malformed growth input (non-permutation matrix, shape mismatch, ...)
        MissingBound,          // a proper power series was requested without a truncation bound
        Internal,              // an invariant the algorithms guarantee was observed broken
    };

    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

    Kind kind;
};

}  // namespace ribbon
