#include "autsys/error.hpp"

namespace autsys {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotAutonomous: return "NotAutonomous";
    case ErrorKind::ElementOutside: return "ElementOutside";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::MalformedMap: return "MalformedMap";
    case ErrorKind::MalformedPartition: return "MalformedPartition";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

} // namespace autsys
