#ifndef PFH_CLI_HPP
#define PFH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pfh {

// Command driver behind the pfh binary. Subcommands: decompose, identities,
// tables, sweep. Returns 0 when everything requested passed, 1 on a
// verification failure, 2 on a usage error (with usage text on err).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfh

#endif  // PFH_CLI_HPP
