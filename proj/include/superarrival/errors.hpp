#pragma once

#include <stdexcept>
#include <string>

namespace superarrival {

enum class ErrorKind {
    Config,       // invalid or unparseable configuration
    Resolution,   // grid too coarse for the packet
    Overlap,      // initial packet overlaps the barrier
    NoDeviation,  // perturbed series never leaves the static one
    NoCrossing,   // series end before the two curves cross
    Domain,       // argument outside an operation's domain
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace superarrival
