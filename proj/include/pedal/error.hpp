#pragma once

#include <stdexcept>
#include <string>

namespace pedal {

// Domain errors carry a stable kind name; the CLI prints it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace pedal
