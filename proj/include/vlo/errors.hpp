#pragma once

#include <stdexcept>
#include <string>

namespace vlo {

struct BehindCameraError : std::runtime_error {
    explicit BehindCameraError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateEpipolarError : std::runtime_error {
    explicit DegenerateEpipolarError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LowParallaxError : std::runtime_error {
    explicit LowParallaxError(const std::string& msg) : std::runtime_error(msg) {}
};

struct AlignmentDegenerateError : std::runtime_error {
    explicit AlignmentDegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfBoundsError : std::runtime_error {
    explicit OutOfBoundsError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InsufficientSamplesError : std::runtime_error {
    explicit InsufficientSamplesError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoConsensusError : std::runtime_error {
    explicit NoConsensusError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RegistrationError : std::runtime_error {
    explicit RegistrationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfRangeError : std::runtime_error {
    explicit OutOfRangeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vlo
