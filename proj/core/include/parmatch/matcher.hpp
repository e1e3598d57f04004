#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parmatch/text.hpp"

namespace parmatch {

/// 0-based start offset of an occurrence within the global text.
using Offset = std::uint64_t;

enum class Algo { Naive, Quick, Horspool, BoyerMoore };

/// Lenient lookup by name ("naive", "quick", "horspool", "boyermoore").
std::optional<Algo> parseAlgo(std::string_view name) noexcept;

/// Strict lookup; throws UnknownAlgorithmError.
Algo algoFromName(std::string_view name);

std::string_view algoName(Algo algo) noexcept;

/// Scan instrumentation: one attempt per window alignment tried, one
/// comparison per byte pair examined. Every matcher satisfies
/// attempts <= (hi - lo) and comparisons <= n*m + m.
struct ScanStats {
    std::uint64_t attempts = 0;
    std::uint64_t comparisons = 0;
};

/// An immutable pattern with its shift tables precomputed once:
///   quickShift     byte just past the window -> advance in [1, m+1]
///   horspoolShift  last byte of the window   -> advance in [1, m]
///   goodSuffixShift matched suffix length    -> advance in [1, m]
class Pattern {
public:
    static constexpr std::size_t kDefaultMaxLength = std::size_t{1} << 16;

    /// Throws EmptyPatternError for zero-length input, PatternTooLongError above maxLength.
    explicit Pattern(std::string_view bytes, std::size_t maxLength = kDefaultMaxLength);

    std::size_t length() const noexcept { return bytes_.size(); }
    std::string_view bytes() const noexcept { return bytes_; }
    const unsigned char* data() const noexcept {
        return reinterpret_cast<const unsigned char*>(bytes_.data());
    }

    std::uint32_t quickShift(unsigned char c) const noexcept { return quick_[c]; }
    std::uint32_t horspoolShift(unsigned char c) const noexcept { return horspool_[c]; }

    /// Indexed by the number of pattern bytes matched from the right, 0..m.
    std::uint32_t goodSuffixShift(std::size_t matchedSuffixLen) const;

    /// Largest index with bytes()[i] == c, or -1 when c does not occur.
    std::int32_t lastIndexOf(unsigned char c) const noexcept { return last_[c]; }

private:
    std::string bytes_;
    std::array<std::uint32_t, 256> quick_{};
    std::array<std::uint32_t, 256> horspool_{};
    std::array<std::int32_t, 256> last_{};
    std::vector<std::uint32_t> goodSuffix_;  // m + 1 entries
};

/// Each search reports every occurrence start s with lo <= s and s + m <= hi,
/// in strictly increasing order, overlaps included. The four entry points are
/// interchangeable result-wise; they differ only in cost. All throw RangeError
/// unless 0 <= lo <= hi <= t.size(). A pattern longer than the range yields
/// an empty result, not an error.
std::vector<Offset> searchNaive(const Pattern& p, const Text& t, Offset lo, Offset hi,
                                ScanStats* stats = nullptr);
std::vector<Offset> searchQuick(const Pattern& p, const Text& t, Offset lo, Offset hi,
                                ScanStats* stats = nullptr);
std::vector<Offset> searchHorspool(const Pattern& p, const Text& t, Offset lo, Offset hi,
                                   ScanStats* stats = nullptr);
std::vector<Offset> searchBoyerMoore(const Pattern& p, const Text& t, Offset lo, Offset hi,
                                     ScanStats* stats = nullptr);

std::vector<Offset> search(Algo algo, const Pattern& p, const Text& t, Offset lo, Offset hi,
                           ScanStats* stats = nullptr);

/// Occurrence count over [lo, hi) without materializing offsets.
std::uint64_t countMatches(Algo algo, const Pattern& p, const Text& t, Offset lo, Offset hi,
                           ScanStats* stats = nullptr);

/// Count over scan range [lo, hi) restricted to occurrences starting before
/// ownEnd. This is the per-chunk operation: scan the extended range, own only
/// starts inside the unextended one.
std::uint64_t countOwned(Algo algo, const Pattern& p, const Text& t, Offset lo, Offset hi,
                         Offset ownEnd, ScanStats* stats = nullptr);

}  // namespace parmatch
