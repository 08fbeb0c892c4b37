/*
 * cli.hpp
 * -------
 * Command-line front end, separated from main() so tests can drive it with
 * captured streams.
 *
 *   compute  --group <expr> --b2 <int> --space <tag>
 *            [--format text|json|latex] [--series <N>] [--max-degree <N>] [--check]
 *   tables   --group <expr> --b2 <int>
 *   selftest
 *
 * Exit codes: 0 success; 1 parse/validation error (message on the error
 * stream); 2 internal consistency check failure (--check or selftest).
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaugetop {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace gaugetop
