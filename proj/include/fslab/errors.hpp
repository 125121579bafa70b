#pragma once

#include <stdexcept>
#include <string>

namespace fslab {

// Raised when an enumeration would exceed the configured state-space cap.
struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a certificate generator cannot find a structure its
// hypotheses guarantee. Never silently recovered from.
struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fslab
