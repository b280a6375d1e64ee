#pragma once

#include <stdexcept>
#include <string>

namespace pencil {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument outside the documented range of an operation.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Forms whose orders (or multidegree profiles) are required to agree but do not.
class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// exact_divide found a nonzero remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

// A pencil whose generators are linearly dependent (C1 vanishes).
class DegeneratePencil : public Error {
public:
    using Error::Error;
};

// An identity that must hold by theory failed on exact data.
class FormulaViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace pencil
