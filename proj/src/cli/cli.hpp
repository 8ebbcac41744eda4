// Command-line front end.
//
// Exit codes: 0 success (report on out), 1 domain error (message on err),
// 2 usage error.

#ifndef WORDPOW_CLI_CLI_HPP_
#define WORDPOW_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace wordpow::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordpow::cli

#endif  // WORDPOW_CLI_CLI_HPP_
