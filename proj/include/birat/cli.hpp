#ifndef BIRAT_CLI_HPP
#define BIRAT_CLI_HPP

#include <ostream>

namespace birat {

// Exit codes: 0 success, 1 negative verdict or domain error, 2 malformed
// input, 3 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace birat

#endif  // BIRAT_CLI_HPP
