#include "parmatch/partition.hpp"

#include <algorithm>

#include "parmatch/errors.hpp"

namespace parmatch {

ChunkPlan plan(std::size_t n, std::size_t m, std::size_t p, BorderExtension extension) {
    if (m == 0) throw InvalidArgsError("pattern length must be >= 1");
    if (p == 0) throw InvalidArgsError("worker count must be >= 1");

    ChunkPlan out;
    out.textLength = n;
    out.patternLength = m;
    out.workerCount = p;
    out.chunks.reserve(p);

    const std::size_t base = n / p;
    const std::size_t remainder = n % p;
    Offset pos = 0;
    for (std::size_t i = 0; i < p; ++i) {
        Chunk c;
        c.index = i;
        c.start = pos;
        c.end = pos + base + (i < remainder ? 1 : 0);
        c.extEnd = c.end;
        if (i + 1 < p && extension == BorderExtension::Enabled) {
            c.extEnd += std::min<Offset>(m - 1, n - c.end);
        }
        pos = c.end;
        out.chunks.push_back(c);
    }
    return out;
}

std::vector<Offset> ownedOccurrences(const Chunk& chunk, const std::vector<Offset>& found) {
    std::vector<Offset> owned;
    owned.reserve(found.size());
    std::copy_if(found.begin(), found.end(), std::back_inserter(owned),
                 [&chunk](Offset o) { return chunk.owns(o); });
    return owned;
}

}  // namespace parmatch
