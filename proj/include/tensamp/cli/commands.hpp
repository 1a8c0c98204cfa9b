#pragma once

// The tensamp command line. Exit codes: 0 Yes (or true), 1 No (or false),
// 2 Unknown, 64 malformed input, 65 usage or invariant violation, 66 missing
// or unreadable file.

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace tensamp {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParse = 64;
constexpr int kExitUsage = 65;
constexpr int kExitIo = 66;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The path itself if it exists, else under $TENSAMP_MODELS, else under the
/// shipped corpus directory.
std::filesystem::path resolve_model_path(const std::string& path);

}  // namespace tensamp
