#pragma once

#include <stdexcept>
#include <string>

namespace divbarrier {

/// Bad or inconsistent inputs (flags, schedules, contract fields).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An adjustment produced a non-positive spot or an undefined ratio;
/// pricing with clamped inputs would be meaningless, so this is fatal.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Method/contract combination the closed forms do not cover.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Spot at or above the barrier: the knock-out closed form has no value here.
class KnockedOutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation needs data the bundled fixtures do not carry; the message
/// lists exactly what must be supplied.
class NeedsAssumptionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace divbarrier
