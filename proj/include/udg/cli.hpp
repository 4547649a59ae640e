// Command-line front end. run() parses an argument vector, dispatches to the
// library, and writes the requested artifact (JSON verdicts and paths, CSV
// samples, SVG region maps) either to stdout or atomically to --out.
//
// Exit codes: 0 success, 1 infeasible query (disconnected endpoints, a path
// that fails validation, a construction that gives up), 2 malformed input
// (bad flags, bad body descriptor, out-of-scope request).

#pragma once

#include <string>
#include <vector>

namespace udg {

// args excludes the program name, e.g. {"connect", "--body", "..."}.
int run(const std::vector<std::string>& args);

// Convenience wrapper for main(); skips argv[0].
int run(int argc, char** argv);

}  // namespace udg
