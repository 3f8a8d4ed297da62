#pragma once

#include <string>
#include <vector>

namespace nullcert {

// Runs the command-line tool on argv-style arguments (program name
// excluded). Exit codes: 0 decided/valid, 1 no certificate within the
// tried ansatz or invalid certificate, 2 usage error, 3 unreadable or
// malformed input, refusal, or internal failure.
int run(std::vector<std::string> args);

}  // namespace nullcert
