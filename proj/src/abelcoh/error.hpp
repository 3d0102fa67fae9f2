#pragma once

#include <stdexcept>
#include <string>

namespace abelcoh {

/// Bad caller input: out-of-range rank, malformed element text, a root of the
/// wrong kind for the operation.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap (group enumeration, cohomology rank) was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant the library relies on did not hold. Never expected;
/// raising one means either a bug or a counterexample.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace abelcoh
