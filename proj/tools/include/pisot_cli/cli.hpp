#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pisot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

// args excludes the program name. CSV goes to --out or `out`, summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Flat "key = value" lines turned into "--key value" arguments. A "command"
// key names the subcommand; "true" values become bare flags.
std::vector<std::string> config_arguments(const std::string& path, std::string* command);

}  // namespace pisot::cli
