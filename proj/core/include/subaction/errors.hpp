#pragma once

#include <stdexcept>
#include <string>

namespace subaction {

/// A numerical routine was called on inputs outside the regime it is valid for.
class PreconditionViolated : public std::runtime_error {
public:
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

/// The distance a ratio would be taken against is below the grid's resolution.
class DegenerateDistance : public std::runtime_error {
public:
    explicit DegenerateDistance(const std::string& what) : std::runtime_error(what) {}
};

class NotFound : public std::runtime_error {
public:
    explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

} // namespace subaction
