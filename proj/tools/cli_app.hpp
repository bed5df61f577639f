#pragma once

namespace swarmsim {

// Full CLI entry point; main() is a one-line wrapper so tests can call this
// in-process. Returns the process exit code: 0 success, 1 usage/config error,
// 2 runtime error, 3 replay divergence.
int cli_main(int argc, char** argv);

}  // namespace swarmsim
