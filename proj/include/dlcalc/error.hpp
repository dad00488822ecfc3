#pragma once

#include <stdexcept>
#include <string>

namespace dlcalc {

enum class ErrorKind {
    NotASubspace,
    SpaceMismatch,
    ParityMismatch,
    NoSolution,
    NonUnique,
    BasisMismatch,
    NotPolynomial,
    NonDoubledWord,
    NotClosedUnderSquaring,
    InsufficientGeneratorData,
    DegreeOutOfRange,
    InvalidLabel,
    Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dlcalc
