#pragma once

#include <stdexcept>
#include <string>

namespace pmass {

/// Rejected input: bad field parameters, out-of-range strata, missing data.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mass identity that must hold exactly did not. Always a library bug.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Brute-force enumeration refused because the instance is too large.
class ScaleExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pmass
