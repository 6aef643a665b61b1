#pragma once

#include <stdexcept>
#include <string>

namespace exgraph {

// Malformed input: bad files, out-of-range parameters, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured cap would be exceeded (product order, isomorphism order,
// clique-enumeration count, SDP constraint count).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative solver stopped before reaching the requested tolerance.
// Carries the best bracket known at the point of failure.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& msg, double lower, double upper)
        : std::runtime_error(msg), lower_(lower), upper_(upper) {}

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    double lower_;
    double upper_;
};

}  // namespace exgraph
