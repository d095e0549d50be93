#pragma once

#include <iosfwd>

namespace liftkit {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInfeasible = 2;  // infeasible resample plan or exhausted search budget

// Entry point of the `liftkit` tool. Subcommands: gains, lift, deciles,
// benefit, auc, roc, compare, perturb, disagree, resample, chart. Output that
// is not redirected with --out goes to `out`; diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liftkit
