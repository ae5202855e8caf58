#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

// Reports go to `out`, diagnostics to `err`. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// RFC 4180 field: quoted iff it holds a comma, quote, CR or LF.
std::string csv_field(const std::string& s);

}  // namespace hypersep::cli
