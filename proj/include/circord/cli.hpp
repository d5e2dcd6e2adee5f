// Command implementations behind the circord tool. Each returns its JSON
// payload and a short summary; run_cli adds argument parsing and maps
// exceptions to exit codes.

#ifndef CIRCORD_CLI_HPP_
#define CIRCORD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "circord/io.hpp"

namespace circord {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInvalidInput = 2, kExitBoundExceeded = 3 };

struct CommandResult {
  int status = kExitOk;
  Json json;
  std::string summary;
};

// Direct search on G x Z/n is used as a cross-check up to this order.
inline constexpr int kProductSearchLimit = 12;

CommandResult cmd_enumerate(const FiniteGroup& g, int max_order = kDefaultEnumerationBound);
CommandResult cmd_product_co(const FiniteGroup& g, long long n, int max_order = kDefaultEnumerationBound);
CommandResult cmd_obstruction(const FiniteGroup& g, long long max_n);
CommandResult cmd_obstruction_torsion(const std::vector<long long>& orders, long long max_n);
CommandResult cmd_obstruction_exponent(long long e, bool not_left_orderable, long long max_n);
CommandResult cmd_promislow(const PromislowDemoOptions& options = {});
CommandResult cmd_extension(const Json& descriptor);
CommandResult cmd_validate(const Json& ordering);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circord

#endif  // CIRCORD_CLI_HPP_
