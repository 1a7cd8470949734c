#ifndef GMUX_ERRORS_HPP
#define GMUX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gmux {

// Base error carrying a stable machine-readable kind tag alongside the
// human-readable message. The CLI maps these to one-line reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InvalidDesignError : public Error {
public:
    explicit InvalidDesignError(const std::string& message)
        : Error("invalid-design", message) {}
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& message)
        : Error("singular-matrix", message) {}
};

class UnsupportedOrderError : public Error {
public:
    explicit UnsupportedOrderError(const std::string& message)
        : Error("unsupported-order", message) {}
};

class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& message)
        : Error("cap-exceeded", message) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& message)
        : Error("invalid-argument", message) {}
};

}  // namespace gmux

#endif
