#ifndef KM_CLI_HPP
#define KM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace km {

/// Runs the command-line surface. Exit status 0 on success, 1 on domain
/// errors (structured JSON on err), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace km

#endif
