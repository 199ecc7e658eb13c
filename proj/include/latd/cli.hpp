#pragma once

namespace latd {

// Entry point for the latd tool: subcommands build, verify, pol, fer.
// Returns 0 on success, 1 on configuration errors, 2 on verification failure.
int run_cli(int argc, char** argv);

}  // namespace latd
