#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace realhur {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or branch data that violates the Riemann-Hurwitz constraint.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Factorization enumeration exceeded its visit cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Requested degree is beyond the configured desk-scale bound.
class ScaleExceeded : public Error {
public:
    using Error::Error;
};

class IncompleteEnumeration : public Error {
public:
    IncompleteEnumeration(std::uint64_t found, std::uint64_t target)
        : Error("incomplete enumeration: found " + std::to_string(found) + " of " +
                std::to_string(target) + " solutions"),
          found_(found), target_(target) {}
    std::uint64_t found() const noexcept { return found_; }
    std::uint64_t target() const noexcept { return target_; }

private:
    std::uint64_t found_;
    std::uint64_t target_;
};

/// More distinct solutions than the factorization count allows.
class OvercountDetected : public Error {
public:
    OvercountDetected(std::uint64_t found, std::uint64_t target)
        : Error("overcount: " + std::to_string(found) + " distinct solutions exceed target " +
                std::to_string(target)),
          found_(found), target_(target) {}
    std::uint64_t found() const noexcept { return found_; }
    std::uint64_t target() const noexcept { return target_; }

private:
    std::uint64_t found_;
    std::uint64_t target_;
};

class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

class AmbiguousRealness : public Error {
public:
    using Error::Error;
};

/// Two real preimages of one branch value closer than the cluster tolerance.
class ClusterAmbiguity : public Error {
public:
    using Error::Error;
};

/// Two representatives of one covering class disagree in sign where they must agree.
class SignMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace realhur
