#pragma once

namespace borsuk::cli {

// Command-line entry point. Subcommands: verify, certify, export, report.
// Returns the process exit code: 0 verified, 1 verification failure,
// 2 usage or input error.
int run_cli(int argc, const char* const* argv);

}  // namespace borsuk::cli
