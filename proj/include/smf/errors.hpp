#pragma once

#include <stdexcept>
#include <string>

namespace smf {

// Domain error carrying a stable, machine-readable name (e.g. "OutOfPrecision").
// The CLI prints the name on stderr and exits with status 3.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name))
    {
    }

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& detail)
{
    throw Error(name, detail);
}

}  // namespace smf
