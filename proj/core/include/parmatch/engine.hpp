#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "parmatch/matcher.hpp"
#include "parmatch/partition.hpp"
#include "parmatch/text.hpp"

namespace parmatch {

/// Result of one chunk's scan.
struct MatchReport {
    std::size_t chunkIndex = 0;
    std::uint64_t count = 0;
    std::optional<std::vector<Offset>> offsets;  // present only when requested
    std::chrono::nanoseconds elapsed{0};
};

struct RunResult {
    std::uint64_t totalCount = 0;
    std::vector<MatchReport> perChunk;  // ordered by chunkIndex
    std::chrono::nanoseconds wallTime{0};
    Algo algorithm = Algo::Quick;
    std::size_t workers = 1;

    double wallSeconds() const noexcept {
        return std::chrono::duration<double>(wallTime).count();
    }

    /// Concatenation of per-chunk owned offsets, globally sorted because
    /// ownership ranges are disjoint and ordered. Requires offsets present.
    std::vector<Offset> collectOffsets() const;
};

struct RunOptions {
    std::size_t workers = 1;
    Algo algo = Algo::Quick;
    bool wantOffsets = false;
    BorderExtension borderExtension = BorderExtension::Enabled;
};

/// Parallel scan: plan n into `workers` chunks, run one matcher per chunk on
/// its own thread (the calling thread takes a chunk too), aggregate counts.
/// Counts are deterministic for a given input regardless of scheduling.
RunResult run(const Text& text, const Pattern& pattern, const RunOptions& options);
RunResult run(const Text& text, const Pattern& pattern, std::size_t workers, Algo algo,
              bool wantOffsets = false);

/// Single-threaded scan of the whole text with zero pool overhead; the T(1)
/// baseline used as the speedup denominator.
RunResult runSequential(const Text& text, const Pattern& pattern, Algo algo,
                        bool wantOffsets = false);

}  // namespace parmatch
