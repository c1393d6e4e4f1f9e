#pragma once

#include <iosfwd>

namespace nuclab {

/// Command-line front end:
///   nuclab [potential|slowroll|tunneling|kessence|all] [--config FILE] [--out DIR]
///          [--variant exact|published] [--key=value ...]
/// The config file holds flat `key = value` lines using the same keys as
/// the long options; command-line values win over the file, and the
/// NUCLAB_OUT environment variable is used when no output directory is given.
/// Returns the process exit status (0 ok, 1 numeric/I-O error, 2 bad config).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nuclab
