#ifndef LWSIM_ERRORS_HPP
#define LWSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lwsim {

// Bad parameters, malformed config files, violated preconditions.
// The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Runtime processing failures (timing recovery lost, equalizer diverged, ...).
// The CLI maps this to exit code 2; sweeps record the point as a flagged row.
class DspError : public std::runtime_error {
public:
    explicit DspError(const std::string& what) : std::runtime_error(what) {}
};

// Corrupt or truncated waveform containers.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lwsim

#endif
