#ifndef SCHELLING_CLI_COMMANDS_HPP
#define SCHELLING_CLI_COMMANDS_HPP

namespace schelling::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Parses argv, runs one subcommand and returns the process exit code.
/// Errors go to stderr as a single "error: <Code>: <message>" line.
int run(int argc, char** argv);

}  // namespace schelling::cli

#endif  // SCHELLING_CLI_COMMANDS_HPP
