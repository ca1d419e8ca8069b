#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacring {
namespace cli {

// Dispatches one command line.  Exit code 0 on any successful determination
// (including UNSAT), 1 on usage errors, 2 on internal errors or failed
// self-test criteria.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace jacring
