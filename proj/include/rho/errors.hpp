#pragma once

#include <stdexcept>
#include <string>

namespace rho {

struct TruncationOverflow : std::runtime_error {
    explicit TruncationOverflow(const std::string& what)
        : std::runtime_error("truncation-overflow: " + what) {}
};

struct IdentityFailure : std::runtime_error {
    explicit IdentityFailure(const std::string& what)
        : std::runtime_error("identity-failure: " + what) {}
};

struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& what)
        : std::runtime_error("certification: " + what) {}
};

}  // namespace rho
