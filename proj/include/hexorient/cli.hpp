#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexorient::cli
{
  /// Exit codes of the command-line tool.
  enum ExitCode : int
  {
    success = 0,
    /// the mesh is not orientable, or an orientation has violations
    inconsistent = 1,
    /// bad arguments, unreadable or malformed input
    input_error = 2,
  };

  /// Runs one `hexorient` invocation; `args` excludes the program name.
  int run(const std::vector<std::string>& args, std::ostream& out,
          std::ostream& err);
} // namespace hexorient::cli
