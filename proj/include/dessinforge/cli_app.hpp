#ifndef DESSINFORGE_CLI_APP_HPP
#define DESSINFORGE_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dessinforge {

// Runs the command-line front end on already-split arguments (no program
// name). Returns the process exit status:
//   0 all verdicts match or are documented paper-discrepancies
//   1 unexpected mismatch or internal failure
//   2 usage or parse error
//   3 resource cap exceeded
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace dessinforge

#endif
