#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexorient
{
  enum class ErrorCode
  {
    InvalidArgument,
    IndexOutOfRange,
    DegenerateCell,
    NonManifold2D,
    NonManifoldInput,
    DimensionMismatch,
    UnknownClass,
    InvalidOrientation,
    InconsistentInput,
    TooLarge,
    InvalidTwist,
    DegenerateTet,
    DegenerateTriangle,
    ParseError,
    SchemaError,
    UnknownEdge,
    DuplicateEdge,
  };

  std::string_view to_string(ErrorCode code);

  /// Exception type thrown by every library entry point. The code is the
  /// machine-readable part; parse and schema errors also carry the 1-based
  /// line number of the offending input line when one is known.
  class Error : public std::runtime_error
  {
  public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> line = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

  private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
  };
} // namespace hexorient
