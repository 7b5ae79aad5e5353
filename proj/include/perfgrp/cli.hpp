#pragma once

#include <iosfwd>

namespace perfgrp {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,  // domain, semantic or syntax error in the request
  kExitUsage = 2,   // unknown subcommand or flag
  kExitResource = 3,
};

// Name of the environment variable that overrides the realization bound
// (the --max-order flag wins over it).
inline constexpr const char* kMaxOrderEnv = "PERFGRP_MAX_ORDER";

// Subcommands: analyze, perfect-numbers, search, paper-check. Results go to
// `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace perfgrp
