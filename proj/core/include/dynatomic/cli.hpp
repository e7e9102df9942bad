#ifndef DYNATOMIC_CLI_HPP
#define DYNATOMIC_CLI_HPP

// Command-line front end. Every invocation emits exactly one structured JSON
// document on standard output; --pretty switches to indented rendering.
// Exit codes: 0 ok, 1 usage/parse error, 2 degenerate, 3 inconclusive.

#include <json.hpp>

#include <string>
#include <vector>

namespace dynatomic {

struct CliResult {
    nlohmann::ordered_json doc;
    int exit_code = 0;
    bool pretty = false;
};

// args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

// Parses argv, runs, prints the document, returns the exit code.
int run_cli_main(int argc, char** argv);

} // namespace dynatomic

#endif
