#ifndef AZI_ERRORS_HPP
#define AZI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace azi {

enum class ErrorKind {
    InvalidEdge,
    NotConnected,
    ParseError,
    DegenerateEdge,
    UnsupportedGraph,
    OutOfDomain,
    InvalidSpec,
    NotATree,
    PatternMismatch,
    DegenerateResult,
    EmptyDomain,
    RefusedTooLarge,
    RefusedOutOfHypothesis,
    UsageError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace azi

#endif
