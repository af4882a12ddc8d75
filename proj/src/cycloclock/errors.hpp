#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Thin exception taxonomy shared by all modules. The C API maps each type
// onto a stable status code, so new failure kinds get a new class here.

class OrderMismatchError : public std::invalid_argument {
public:
    explicit OrderMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

class DimMismatchError : public std::invalid_argument {
public:
    explicit DimMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

class ScaleMismatchError : public std::invalid_argument {
public:
    explicit ScaleMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

class IndexError : public std::out_of_range {
public:
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

class NotNormalizedError : public std::invalid_argument {
public:
    explicit NotNormalizedError(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZeroError : public std::domain_error {
public:
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

} // namespace cyclo
