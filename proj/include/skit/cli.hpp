#pragma once

// Command-line front end. Every command prints one JSON document on `out`.
// Exit status: 0 verdict true, 1 verdict false (witness in the JSON),
// 2 usage, parse or domain error (message on `err`).

#include <ostream>
#include <string>
#include <vector>

namespace skit {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skit
