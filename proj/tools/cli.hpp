#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tspga::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // file errors, subject errors, non-conformance
inline constexpr int kExitUsage = 2;

/// "7", "5..10" or "5,6,8". Throws std::invalid_argument.
std::vector<std::size_t> parse_n_values(std::string_view text);

/// "1,2,3" or "0..4". Throws std::invalid_argument.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

/// Runs one of solve | brute | bench | verify. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspga::cli
