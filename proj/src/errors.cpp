#include <hexorient/errors.hpp>

namespace hexorient
{
  std::string_view to_string(ErrorCode code)
  {
    switch (code)
      {
        case ErrorCode::InvalidArgument:
          return "InvalidArgument";
        case ErrorCode::IndexOutOfRange:
          return "IndexOutOfRange";
        case ErrorCode::DegenerateCell:
          return "DegenerateCell";
        case ErrorCode::NonManifold2D:
          return "NonManifold2D";
        case ErrorCode::NonManifoldInput:
          return "NonManifoldInput";
        case ErrorCode::DimensionMismatch:
          return "DimensionMismatch";
        case ErrorCode::UnknownClass:
          return "UnknownClass";
        case ErrorCode::InvalidOrientation:
          return "InvalidOrientation";
        case ErrorCode::InconsistentInput:
          return "InconsistentInput";
        case ErrorCode::TooLarge:
          return "TooLarge";
        case ErrorCode::InvalidTwist:
          return "InvalidTwist";
        case ErrorCode::DegenerateTet:
          return "DegenerateTet";
        case ErrorCode::DegenerateTriangle:
          return "DegenerateTriangle";
        case ErrorCode::ParseError:
          return "ParseError";
        case ErrorCode::SchemaError:
          return "SchemaError";
        case ErrorCode::UnknownEdge:
          return "UnknownEdge";
        case ErrorCode::DuplicateEdge:
          return "DuplicateEdge";
      }
    return "Unknown";
  }

  namespace
  {
    std::string compose(ErrorCode code, const std::string& message,
                        std::optional<std::size_t> line)
    {
      std::string text(to_string(code));
      if (line)
        text += " (line " + std::to_string(*line) + ")";
      text += ": ";
      text += message;
      return text;
    }
  } // namespace

  Error::Error(ErrorCode code, const std::string& message,
               std::optional<std::size_t> line)
    : std::runtime_error(compose(code, message, line))
    , code_(code)
    , line_(line)
  {}
} // namespace hexorient
