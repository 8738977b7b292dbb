#pragma once

#include <stdexcept>
#include <string>

namespace ksbim {

// All domain errors carry a stable identifier (e.g. "MalformedCartan",
// "InexactDivision") that the CLI prints verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
    throw Error(std::move(code), msg);
}

} // namespace ksbim
