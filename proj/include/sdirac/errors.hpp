#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sdirac {

// Invalid physical parameter or regime for the requested operation.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// |p| < m_s c where a propagating (real-energy) state was requested.
class EvanescentError : public DomainError {
public:
    explicit EvanescentError(const std::string& what) : DomainError(what) {}
};

// E = 0 at |p| = m_s c; the closed-form normalization is singular there.
class ThresholdError : public DomainError {
public:
    explicit ThresholdError(const std::string& what) : DomainError(what) {}
};

// Time step above the configured stability bound of an explicit integrator.
class StabilityError : public DomainError {
public:
    explicit StabilityError(const std::string& what) : DomainError(what) {}
};

// Evanescent-mode amplitude exceeded the configured cap during evolution.
class BlowupError : public std::runtime_error {
public:
    BlowupError(const std::string& what, std::vector<int> modes)
        : std::runtime_error(what), offending_modes(std::move(modes)) {}
    std::vector<int> offending_modes;
};

} // namespace sdirac
