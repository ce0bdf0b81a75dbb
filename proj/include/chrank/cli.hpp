#ifndef CHRANK_CLI_HPP
#define CHRANK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chrank {

// Command dispatch; returns the process exit code:
//   0 success, 1 verification failure, 2 parse/usage error,
//   3 inadmissible or non-confluent presentation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace chrank

#endif
