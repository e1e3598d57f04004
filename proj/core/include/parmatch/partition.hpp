#pragma once

#include <cstddef>
#include <vector>

#include "parmatch/matcher.hpp"

namespace parmatch {

/// Disabled exists as a demonstration hook: it reproduces the boundary-miss
/// failure mode that the extension rule prevents. Production paths always
/// plan with Enabled.
enum class BorderExtension { Enabled, Disabled };

/// One of p ordered ranges. A chunk scans [start, extEnd) but owns only the
/// occurrences whose start offset lies in [start, end); the extension of up
/// to m-1 bytes makes boundary-spanning occurrences visible to exactly one
/// chunk.
struct Chunk {
    std::size_t index = 0;
    Offset start = 0;
    Offset end = 0;     // ownership range is [start, end)
    Offset extEnd = 0;  // scan range is [start, extEnd)

    Offset size() const noexcept { return end - start; }
    Offset extension() const noexcept { return extEnd - end; }
    bool owns(Offset occurrenceStart) const noexcept {
        return occurrenceStart >= start && occurrenceStart < end;
    }

    bool operator==(const Chunk&) const = default;
};

struct ChunkPlan {
    std::size_t textLength = 0;
    std::size_t patternLength = 0;
    std::size_t workerCount = 0;
    std::vector<Chunk> chunks;
};

/// Split [0, n) into exactly p contiguous chunks whose sizes differ by at
/// most one (the first n mod p chunks take the extra byte). Every chunk but
/// the last is extended by min(m-1, n - end). p may exceed n; trailing chunks
/// are then empty. Throws InvalidArgsError when m == 0 or p == 0.
ChunkPlan plan(std::size_t n, std::size_t m, std::size_t p,
               BorderExtension extension = BorderExtension::Enabled);

/// Filter a chunk's scan results down to the occurrences it owns.
/// `found` must be sorted ascending with global offsets; the result is too.
std::vector<Offset> ownedOccurrences(const Chunk& chunk, const std::vector<Offset>& found);

}  // namespace parmatch
