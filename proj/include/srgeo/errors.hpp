#ifndef SRGEO_ERRORS_HPP
#define SRGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srgeo {

struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& msg) : std::runtime_error(msg) {}
};

struct GridMismatch : std::runtime_error {
    explicit GridMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidCost : std::runtime_error {
    explicit InvalidCost(const std::string& msg) : std::runtime_error(msg) {}
};

struct StartUnreachable : std::runtime_error {
    explicit StartUnreachable(const std::string& msg) : std::runtime_error(msg) {}
};

struct Stalled : std::runtime_error {
    explicit Stalled(const std::string& msg) : std::runtime_error(msg) {}
};

struct LeftDomain : std::runtime_error {
    explicit LeftDomain(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidMomentum : std::runtime_error {
    explicit InvalidMomentum(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyLevel : std::runtime_error {
    explicit EmptyLevel(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoValidEndpoints : std::runtime_error {
    explicit NoValidEndpoints(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainMismatch : std::runtime_error {
    explicit DomainMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace srgeo

#endif
