#include "parmatch/bench.hpp"

#include <algorithm>
#include <cstdio>

#include "parmatch/errors.hpp"

namespace parmatch {

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return (values[mid - 1] + values[mid]) / 2.0;
}

std::pair<double, std::uint64_t> engineRunner(const Text& corpus, const Pattern& pattern,
                                              std::size_t workers, Algo algo) {
    const RunResult result = workers == 1 ? runSequential(corpus, pattern, algo)
                                          : run(corpus, pattern, workers, algo);
    return {result.wallSeconds(), result.totalCount};
}

}  // namespace

std::vector<BenchRecord> sweepWithRunner(const Text& corpus, const Pattern& pattern,
                                         const SweepOptions& options, const SweepRunner& runner) {
    if (options.workerCounts.empty()) {
        throw InvalidArgsError("worker count list must not be empty");
    }
    if (options.reps < 3) throw InvalidArgsError("reps must be >= 3");

    std::vector<std::size_t> counts = options.workerCounts;
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
    if (counts.front() == 0) throw InvalidArgsError("worker counts must be >= 1");

    struct Measured {
        double seconds = 0;
        std::uint64_t count = 0;
    };
    auto measure = [&](std::size_t p) {
        runner(corpus, pattern, p, options.algo);  // warm-up, discarded
        std::vector<double> times;
        times.reserve(options.reps);
        Measured m;
        for (std::size_t rep = 0; rep < options.reps; ++rep) {
            const auto [seconds, count] = runner(corpus, pattern, p, options.algo);
            if (rep == 0) {
                m.count = count;
            } else if (count != m.count) {
                throw CountMismatchError(p, "repetitions returned " + std::to_string(m.count) +
                                                " and " + std::to_string(count));
            }
            times.push_back(seconds);
        }
        m.seconds = median(std::move(times));
        return m;
    };

    // T(1) is always measured so it can serve as the speedup denominator.
    std::optional<Measured> baseline;
    if (counts.front() != 1) baseline = measure(1);

    std::vector<BenchRecord> records;
    records.reserve(counts.size());
    std::optional<std::uint64_t> expectedCount;
    if (baseline.has_value()) expectedCount = baseline->count;

    for (const std::size_t p : counts) {
        const Measured m = measure(p);
        if (!expectedCount.has_value()) {
            expectedCount = m.count;
        } else if (m.count != *expectedCount) {
            throw CountMismatchError(p, "count " + std::to_string(m.count) + " disagrees with " +
                                            std::to_string(*expectedCount) +
                                            " from earlier in the sweep");
        }
        if (p == 1) baseline = m;

        BenchRecord record;
        record.workers = p;
        record.timeSeconds = m.seconds;
        record.speedup = baseline->seconds / m.seconds;
        record.efficiency = record.speedup / static_cast<double>(p);
        record.count = m.count;
        records.push_back(record);
    }
    return records;
}

std::vector<BenchRecord> sweep(const Text& corpus, const Pattern& pattern,
                               const SweepOptions& options) {
    return sweepWithRunner(corpus, pattern, options, engineRunner);
}

std::vector<BenchRecord> sweep(const CorpusSpec& corpus, std::string_view patternBytes,
                               const SweepOptions& options) {
    return sweep(materializeCorpus(corpus), Pattern(patternBytes), options);
}

std::optional<EmitFormat> parseEmitFormat(std::string_view name) noexcept {
    if (name == "csv") return EmitFormat::Csv;
    if (name == "tsv") return EmitFormat::Tsv;
    return std::nullopt;
}

std::string emitRecords(const std::vector<BenchRecord>& records, EmitFormat format) {
    if (records.empty()) throw InvalidArgsError("no records to emit");

    std::vector<BenchRecord> sorted = records;
    std::sort(sorted.begin(), sorted.end(),
              [](const BenchRecord& a, const BenchRecord& b) { return a.workers < b.workers; });

    const char sep = format == EmitFormat::Csv ? ',' : '\t';
    std::string out;
    for (const char* column : {"p", "time_s", "speedup", "efficiency", "count"}) {
        if (!out.empty()) out.push_back(sep);
        out.append(column);
    }
    out.push_back('\n');

    char row[192];
    for (const BenchRecord& r : sorted) {
        std::snprintf(row, sizeof(row), "%zu%c%.6f%c%.6f%c%.6f%c%llu\n", r.workers, sep,
                      r.timeSeconds, sep, r.speedup, sep, r.efficiency, sep,
                      static_cast<unsigned long long>(r.count));
        out.append(row);
    }
    return out;
}

std::vector<std::size_t> defaultWorkerCounts(std::size_t hardwareThreads) {
    if (hardwareThreads == 0) hardwareThreads = 1;
    std::vector<std::size_t> counts;
    for (std::size_t p = 1; p <= hardwareThreads; p *= 2) counts.push_back(p);
    if (counts.back() != hardwareThreads) counts.push_back(hardwareThreads);
    return counts;
}

}  // namespace parmatch
