#pragma once
// Command-line front end.  run_cli implements the whole tool against caller
// supplied streams so tests can drive it in-process; tools/main.cpp wires it
// to std::cout / std::cerr.
//
// Exit codes: 0 success / accepted / true / zero; 3 well-formed negative
// answer (rejected pair, false, nonzero, refuted); 2 parse or usage error;
// 1 internal error or resource limit.

#include <iosfwd>

namespace taugen {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace taugen
