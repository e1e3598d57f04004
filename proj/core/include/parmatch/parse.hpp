#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace parmatch {

/// Pattern literal with \xNN byte escapes and \\ for a literal backslash.
/// Any other escape throws PatternEscapeError.
std::string unescapePattern(std::string_view raw);

/// "37M" -> 37 MiB. Accepts a decimal count with an optional K/M/G suffix
/// (powers of 1024, case-insensitive, trailing "iB"/"B" tolerated).
std::uint64_t parseByteSize(std::string_view raw);

/// "1,2,4" -> {1, 2, 4}; entries must be positive integers.
std::vector<std::size_t> parseWorkerList(std::string_view raw);

/// Split on commas, dropping empty pieces.
std::vector<std::string> splitCommaList(std::string_view raw);

}  // namespace parmatch
