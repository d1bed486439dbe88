#pragma once

#include <stdexcept>
#include <string>

namespace vrsqueeze {

// Base for every error raised by the library. Callers that only need to
// report a failure can catch this; the subclasses name the failure kind.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Both the equivalent transmission rate and the computing rate are zero.
class DegenerateRates : public Error {
public:
    using Error::Error;
};

// T_cc or T_seg non-positive, horizon out of range, and similar.
class InvalidTiming : public Error {
public:
    using Error::Error;
};

// Field out of its documented domain, or two structures disagree.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

class InvalidStep : public Error {
public:
    using Error::Error;
};

class InvalidSweep : public Error {
public:
    using Error::Error;
};

// Fewer antennas than users: zero-forcing has no solution.
class ZFInfeasible : public Error {
public:
    using Error::Error;
};

// Repeated numerically singular channel draws.
class SingularDraw : public Error {
public:
    using Error::Error;
};

} // namespace vrsqueeze
