#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fgcxr {

// Two error classes, matching the process exit-code contract:
// data errors (bad input contents) exit 1, config errors (bad
// settings / missing configured paths) exit 2.
enum class ErrorKind { Data, Config };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void throw_data(const std::string& code, const std::string& message) {
    throw Error(ErrorKind::Data, code, message);
}

[[noreturn]] inline void throw_config(const std::string& code, const std::string& message) {
    throw Error(ErrorKind::Config, code, message);
}

} // namespace fgcxr
