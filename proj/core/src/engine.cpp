#include "parmatch/engine.hpp"

#include <exception>
#include <numeric>
#include <thread>
#include <utility>

#include "parmatch/errors.hpp"

namespace parmatch {

using Clock = std::chrono::steady_clock;

std::vector<Offset> RunResult::collectOffsets() const {
    std::vector<Offset> all;
    for (const auto& report : perChunk) {
        if (!report.offsets.has_value()) {
            throw InvalidArgsError("run was not asked to record offsets");
        }
        all.insert(all.end(), report.offsets->begin(), report.offsets->end());
    }
    return all;
}

namespace {

MatchReport scanChunk(const Text& text, const Pattern& pattern, Algo algo, const Chunk& chunk,
                      bool wantOffsets) {
    MatchReport report;
    report.chunkIndex = chunk.index;
    const auto begin = Clock::now();
    if (wantOffsets) {
        auto owned = ownedOccurrences(chunk, search(algo, pattern, text, chunk.start, chunk.extEnd));
        report.count = owned.size();
        report.offsets = std::move(owned);
    } else {
        report.count = countOwned(algo, pattern, text, chunk.start, chunk.extEnd, chunk.end);
    }
    report.elapsed = Clock::now() - begin;
    return report;
}

}  // namespace

RunResult run(const Text& text, const Pattern& pattern, const RunOptions& options) {
    if (options.workers == 0) throw InvalidArgsError("workers must be >= 1");

    const auto begin = Clock::now();
    const ChunkPlan chunkPlan =
        plan(text.size(), pattern.length(), options.workers, options.borderExtension);
    const std::size_t chunkCount = chunkPlan.chunks.size();

    std::vector<MatchReport> reports(chunkCount);
    std::vector<std::exception_ptr> failures(chunkCount);
    {
        auto task = [&](std::size_t i) {
            try {
                reports[i] =
                    scanChunk(text, pattern, options.algo, chunkPlan.chunks[i], options.wantOffsets);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        };
        std::vector<std::jthread> pool;
        pool.reserve(chunkCount - 1);
        for (std::size_t i = 1; i < chunkCount; ++i) pool.emplace_back(task, i);
        task(0);  // the coordinator works a chunk instead of idling
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    RunResult result;
    result.perChunk = std::move(reports);
    result.totalCount = std::accumulate(
        result.perChunk.begin(), result.perChunk.end(), std::uint64_t{0},
        [](std::uint64_t acc, const MatchReport& r) { return acc + r.count; });
    result.algorithm = options.algo;
    result.workers = options.workers;
    result.wallTime = Clock::now() - begin;
    return result;
}

RunResult run(const Text& text, const Pattern& pattern, std::size_t workers, Algo algo,
              bool wantOffsets) {
    RunOptions options;
    options.workers = workers;
    options.algo = algo;
    options.wantOffsets = wantOffsets;
    return run(text, pattern, options);
}

RunResult runSequential(const Text& text, const Pattern& pattern, Algo algo, bool wantOffsets) {
    const auto begin = Clock::now();
    MatchReport report;
    report.chunkIndex = 0;
    if (wantOffsets) {
        auto found = search(algo, pattern, text, 0, text.size());
        report.count = found.size();
        report.offsets = std::move(found);
    } else {
        report.count = countMatches(algo, pattern, text, 0, text.size());
    }
    report.elapsed = Clock::now() - begin;

    RunResult result;
    result.totalCount = report.count;
    result.perChunk.push_back(std::move(report));
    result.algorithm = algo;
    result.workers = 1;
    result.wallTime = Clock::now() - begin;
    return result;
}

}  // namespace parmatch
