#pragma once

#include <stdexcept>
#include <string>

namespace gasfold {

/// Argument outside the declared domain (rho <= 0, T <= 0, rho outside the
/// model's declared interval, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The entropy equation s(T, rho) = s0 could not be bracketed/solved.
struct ReductionError : std::runtime_error {
    explicit ReductionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// dp/drho <= 0 somewhere on the requested range; carries the offending rho.
struct HyperbolicityError : std::runtime_error {
    double rho;
    HyperbolicityError(const std::string& msg, double rho_)
        : std::runtime_error(msg), rho(rho_) {}
};

/// A characteristic speed vanished (u = +-rho*A), the Y field is undefined.
struct SingularCharacteristic : std::runtime_error {
    explicit SingularCharacteristic(const std::string& msg) : std::runtime_error(msg) {}
};

/// rho*A(rho) = 0, the operator matrix is undefined.
struct SingularOperator : std::runtime_error {
    explicit SingularOperator(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation requires lambda != 0.
struct DegenerateFamily : std::runtime_error {
    explicit DegenerateFamily(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested point has negative radicand D(rho, t); carries the D value.
struct OutsideSupport : std::runtime_error {
    double radicand;
    OutsideSupport(const std::string& msg, double d) : std::runtime_error(msg), radicand(d) {}
};

/// Shock-front continuation failed to converge; carries the last good time.
struct ContinuationStall : std::runtime_error {
    double last_good_t;
    ContinuationStall(const std::string& msg, double t) : std::runtime_error(msg), last_good_t(t) {}
};

/// A brute-force validator hit a non-finite value or a subdivision limit.
struct OracleError : std::runtime_error {
    explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Config file problem; carries the line number (0 if not line-specific) and key.
struct ConfigError : std::runtime_error {
    int line;
    std::string key;
    ConfigError(const std::string& msg, int line_ = 0, std::string key_ = {})
        : std::runtime_error(msg), line(line_), key(std::move(key_)) {}
};

} // namespace gasfold
