// Command dispatch for the bess tool.
//
//   realize --field <d> --kind br|sbr|hbr|hsbr (--expr <text> | --in <file>) [--out <file>] [--nvars N]
//   verify  --pencil <file> (--expr <text> | --in <file>) --kind <k>
//   decide  --field <d> --kind sbr|hsbr (--expr <text> | --in <file>) [--nvars N]
//   reduce  --field <d> --ell <csv> --matrix <file> --r <text> [--trace]
//
// Exit status: 0 success, 1 not realizable or failed verification, 2 usage or input error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bess {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;
inline constexpr int input_error = 2;
}  // namespace exit_code

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bess
