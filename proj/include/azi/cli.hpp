#ifndef AZI_CLI_HPP
#define AZI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace azi::cli {

// Runs one CLI invocation. argv excludes the program name. Exit status:
// 0 success, 1 verification violation, 2 usage or domain error. Output is
// deterministic given the flags and seed.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        std::istream& in);

int run_main(int argc, char** argv);

} // namespace azi::cli

#endif
