#pragma once

#include <stdexcept>
#include <string>

namespace toricdm {

enum class ErrorKind {
    NotOnRay,
    DependentGenerators,
    RaysDoNotSpan,
    NotAFan,
    OutsideSupport,
    NotMaximalCone,
    NotACone,
    ConditionSpanQuotFails,
    InfiniteCokernel,
    BadDiagram,
    MismatchedGroup,
    NotComplete,
    NotAComponent,
    ParseError,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace toricdm
