// Error types shared across the twenty-vertex toolkit.
#pragma once

#include <stdexcept>
#include <string>

namespace tv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidSize : Error {
    using Error::Error;
};
struct SizeCapExceeded : Error {
    using Error::Error;
};
struct IceRuleViolation : Error {
    using Error::Error;
};
struct DomainMismatch : Error {
    using Error::Error;
};
struct OutOfDomain : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct ZeroOmegaZero : Error {
    using Error::Error;
};
struct DegenerateSpectral : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct InvalidRegion : Error {
    using Error::Error;
};
struct NonFiniteValue : Error {
    using Error::Error;
};
struct NotALimitCase : Error {
    using Error::Error;
};
struct PhaseViolation : Error {
    using Error::Error;
};

}  // namespace tv
