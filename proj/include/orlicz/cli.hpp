#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orlicz::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitNotInSpace = 2;
inline constexpr int kExitCentering = 3;
inline constexpr int kExitCheckFailed = 4;

/// Runs one command line (args excludes the program name). Everything the
/// user should see goes to `out`/`err`; nothing touches the real streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RFC-4180 field quoting: quotes only when the field needs it.
std::string csv_field(const std::string& text);

}  // namespace orlicz::cli
