#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parmatch/corpus.hpp"
#include "parmatch/engine.hpp"

namespace parmatch {

/// One row of the executing-time/speedup/efficiency study.
struct BenchRecord {
    std::size_t workers = 1;    // p
    double timeSeconds = 0;     // median of reps of T(p)
    double speedup = 1;         // T(1) / T(p)
    double efficiency = 1;      // speedup / p
    std::uint64_t count = 0;
};

struct SweepOptions {
    Algo algo = Algo::Quick;
    std::vector<std::size_t> workerCounts;  // non-empty, entries >= 1
    std::size_t reps = 5;                   // >= 3; one extra warm-up run is discarded
};

/// Measurement hook: returns (seconds, count) for one configuration. Exists
/// so the sweep's bookkeeping is testable with synthetic timings.
using SweepRunner =
    std::function<std::pair<double, std::uint64_t>(const Text&, const Pattern&, std::size_t, Algo)>;

/// One record per distinct p, ascending. T(1) — measured via runSequential,
/// here or as an unrecorded extra when 1 is absent from workerCounts — is the
/// speedup denominator, so speedup(1) == 1 exactly. A count that differs
/// between any two runs of the sweep aborts with CountMismatchError: that is
/// a correctness bug, never noise.
std::vector<BenchRecord> sweep(const Text& corpus, const Pattern& pattern,
                               const SweepOptions& options);
std::vector<BenchRecord> sweep(const CorpusSpec& corpus, std::string_view patternBytes,
                               const SweepOptions& options);
std::vector<BenchRecord> sweepWithRunner(const Text& corpus, const Pattern& pattern,
                                         const SweepOptions& options, const SweepRunner& runner);

enum class EmitFormat { Csv, Tsv };

std::optional<EmitFormat> parseEmitFormat(std::string_view name) noexcept;

/// Header `p,time_s,speedup,efficiency,count`, rows sorted by p, floats with
/// six fixed decimal places. Throws InvalidArgsError on an empty list.
std::string emitRecords(const std::vector<BenchRecord>& records, EmitFormat format);

/// Doubling sweep 1, 2, 4, ... capped at hardwareThreads, which is appended
/// when it is not itself a power of two. hardwareThreads == 0 yields {1}.
std::vector<std::size_t> defaultWorkerCounts(std::size_t hardwareThreads);

}  // namespace parmatch
