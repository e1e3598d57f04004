// parmatch: parallel exact string matching over chunked texts.
//
// Subcommands: count, bench, serve, dispatch, gen. Exit codes: 0 success,
// 2 usage error, 1 runtime error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "parmatch/bench.hpp"
#include "parmatch/cluster.hpp"
#include "parmatch/corpus.hpp"
#include "parmatch/engine.hpp"
#include "parmatch/errors.hpp"
#include "parmatch/parse.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CountArgs {
    std::string inlineText;
    std::string filePath;
    std::string pattern;
    std::string algo = "quick";
    std::size_t workers = 1;
    bool offsets = false;
    bool quiet = false;
    std::string mmapThreshold = "16M";
};

struct BenchArgs {
    std::string size = "37M";
    std::uint64_t seed = 1;
    std::string filePath;
    std::string block;
    std::string pattern = "a";
    std::string algo = "quick";
    std::string workerList;
    std::size_t reps = 5;
    std::string format = "csv";
    std::string outPath;
};

struct ServeArgs {
    std::string listen;
    bool sharedFs = false;
    std::string mmapThreshold = "16M";
};

struct DispatchArgs {
    std::string inlineText;
    std::string filePath;
    std::string pattern;
    std::string algo = "quick";
    std::vector<std::string> workers;
    bool fileRef = false;
    bool quiet = false;
    std::string mmapThreshold = "16M";
};

struct GenArgs {
    std::string size;
    std::string outPath;
    std::uint64_t seed = 1;
    std::string block;
};

parmatch::Text loadInput(const std::string& inlineText, const std::string& filePath,
                         const std::string& mmapThreshold) {
    if (!filePath.empty()) {
        return parmatch::Text::load(filePath, parmatch::parseByteSize(mmapThreshold));
    }
    return parmatch::Text::fromString(inlineText);
}

void printRunResult(const parmatch::RunResult& result, bool quiet, bool offsets) {
    if (quiet) {
        std::cout << result.totalCount << "\n";
        return;
    }
    if (offsets) {
        for (const parmatch::Offset o : result.collectOffsets()) std::cout << o << "\n";
        return;
    }
    std::cout << "count=" << result.totalCount << "\n"
              << "algo=" << parmatch::algoName(result.algorithm) << "\n"
              << "workers=" << result.workers << "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "time_s=%.6f\n", result.wallSeconds());
    std::cout << buf;
}

int runCount(const CountArgs& args) {
    parmatch::Algo algo{};
    std::string pattern;
    try {
        pattern = parmatch::unescapePattern(args.pattern);
        if (pattern.empty()) throw parmatch::InvalidArgsError("pattern must not be empty");
        algo = parmatch::algoFromName(args.algo);
        parmatch::parseByteSize(args.mmapThreshold);
    } catch (const parmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const parmatch::Text text = loadInput(args.inlineText, args.filePath, args.mmapThreshold);
    const parmatch::Pattern compiled(pattern);
    const auto result = args.workers == 1 && !args.offsets
                            ? parmatch::runSequential(text, compiled, algo)
                            : parmatch::run(text, compiled, args.workers, algo, args.offsets);
    printRunResult(result, args.quiet, args.offsets);
    return kExitOk;
}

int runBench(const BenchArgs& args) {
    parmatch::CorpusSpec spec;
    parmatch::SweepOptions options;
    parmatch::EmitFormat format{};
    std::string pattern;
    try {
        pattern = parmatch::unescapePattern(args.pattern);
        if (pattern.empty()) throw parmatch::InvalidArgsError("pattern must not be empty");
        options.algo = parmatch::algoFromName(args.algo);
        options.reps = args.reps;
        options.workerCounts =
            args.workerList.empty()
                ? parmatch::defaultWorkerCounts(std::thread::hardware_concurrency())
                : parmatch::parseWorkerList(args.workerList);
        const auto parsedFormat = parmatch::parseEmitFormat(args.format);
        if (!parsedFormat.has_value()) {
            throw parmatch::InvalidArgsError("format must be csv or tsv");
        }
        format = *parsedFormat;

        if (!args.filePath.empty()) {
            spec.source = parmatch::CorpusSpec::FromFile{args.filePath};
            spec.sizeBytes = 0;
        } else if (!args.block.empty()) {
            spec.source = parmatch::CorpusSpec::RepeatedBlock{args.block};
            spec.sizeBytes = parmatch::parseByteSize(args.size);
        } else {
            spec.source = parmatch::CorpusSpec::UniformRandom{args.seed};
            spec.sizeBytes = parmatch::parseByteSize(args.size);
        }
    } catch (const parmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto records = parmatch::sweep(spec, pattern, options);
    const std::string table = parmatch::emitRecords(records, format);
    if (args.outPath.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(args.outPath, std::ios::binary | std::ios::trunc);
        if (!out) throw parmatch::IoError("cannot open " + args.outPath + " for writing");
        out << table;
    }
    return kExitOk;
}

int runServe(const ServeArgs& args) {
    std::string listen = args.listen;
    if (listen.empty()) {
        const char* env = std::getenv("PARMATCH_LISTEN");
        listen = env != nullptr ? env : "127.0.0.1:0";
    }
    parmatch::WorkerOptions options;
    options.sharedFilesystem = args.sharedFs;
    try {
        options.mmapThreshold = parmatch::parseByteSize(args.mmapThreshold);
    } catch (const parmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    parmatch::WorkerServer server(listen, options);
    std::cout << "listening on " << server.address() << std::endl;
    server.serve();
    return kExitOk;
}

int runDispatch(const DispatchArgs& args) {
    parmatch::DispatchOptions options;
    std::string pattern;
    std::vector<std::string> workers = args.workers;
    try {
        pattern = parmatch::unescapePattern(args.pattern);
        if (pattern.empty()) throw parmatch::InvalidArgsError("pattern must not be empty");
        options.algo = parmatch::algoFromName(args.algo);
        if (workers.empty()) {
            const char* env = std::getenv("PARMATCH_WORKERS");
            if (env != nullptr) workers = parmatch::splitCommaList(env);
        }
        if (workers.empty()) {
            throw parmatch::InvalidArgsError(
                "no workers given: pass --worker or set PARMATCH_WORKERS");
        }
        if (args.fileRef) {
            if (args.filePath.empty()) {
                throw parmatch::InvalidArgsError("--fileref requires --file");
            }
            options.useFileRef = true;
            options.filePath = std::filesystem::absolute(args.filePath).string();
        }
        parmatch::parseByteSize(args.mmapThreshold);
    } catch (const parmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const parmatch::Text text = loadInput(args.inlineText, args.filePath, args.mmapThreshold);
    const parmatch::Pattern compiled(pattern);
    const auto result = parmatch::dispatch(workers, text, compiled, options);
    printRunResult(result, args.quiet, false);
    return kExitOk;
}

int runGen(const GenArgs& args) {
    parmatch::CorpusSpec spec;
    try {
        spec.sizeBytes = parmatch::parseByteSize(args.size);
        if (!args.block.empty()) {
            spec.source = parmatch::CorpusSpec::RepeatedBlock{args.block};
        } else {
            spec.source = parmatch::CorpusSpec::UniformRandom{args.seed};
        }
    } catch (const parmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    parmatch::writeCorpusFile(spec, args.outPath);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parallel exact string matching"};
    app.require_subcommand(1);

    CountArgs countArgs;
    auto* count = app.add_subcommand("count", "count pattern occurrences in a text");
    auto* countText = count->add_option("--text", countArgs.inlineText, "inline text to search");
    auto* countFile = count->add_option("--file", countArgs.filePath, "file to search");
    countText->excludes(countFile);
    countFile->excludes(countText);
    count->add_option("--pattern", countArgs.pattern, "pattern bytes (\\xNN and \\\\ escapes)")
        ->required();
    count->add_option("--algo", countArgs.algo, "naive, quick, horspool or boyermoore");
    count->add_option("--workers", countArgs.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
    auto* countOffsets =
        count->add_flag("--offsets", countArgs.offsets, "print one occurrence offset per line");
    auto* countQuiet = count->add_flag("--quiet", countArgs.quiet, "print only the count");
    countOffsets->excludes(countQuiet);
    countQuiet->excludes(countOffsets);
    count->add_option("--mmap-threshold", countArgs.mmapThreshold,
                      "map files at or above this size instead of reading them");

    BenchArgs benchArgs;
    auto* bench = app.add_subcommand("bench", "sweep worker counts and report time/speedup/efficiency");
    bench->add_option("--size", benchArgs.size, "generated corpus size (default 37M)");
    bench->add_option("--seed", benchArgs.seed, "random corpus seed");
    auto* benchFile = bench->add_option("--file", benchArgs.filePath, "benchmark an existing file");
    auto* benchBlock =
        bench->add_option("--block", benchArgs.block, "fill the corpus by repeating this block");
    benchFile->excludes(benchBlock);
    benchBlock->excludes(benchFile);
    bench->add_option("--pattern", benchArgs.pattern, "pattern bytes (default \"a\")");
    bench->add_option("--algo", benchArgs.algo, "naive, quick, horspool or boyermoore");
    bench->add_option("--p", benchArgs.workerList,
                      "comma separated worker counts (default: 1,2,4,... up to this machine)");
    bench->add_option("--reps", benchArgs.reps, "repetitions per configuration (median is kept)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--format", benchArgs.format, "csv or tsv");
    bench->add_option("--out", benchArgs.outPath, "write the table here instead of stdout");

    ServeArgs serveArgs;
    auto* serve = app.add_subcommand("serve", "run a search worker until it receives a shutdown frame");
    serve->add_option("--listen", serveArgs.listen,
                      "host:port to listen on (default $PARMATCH_LISTEN, then 127.0.0.1:0)");
    serve->add_flag("--shared-fs", serveArgs.sharedFs,
                    "declare that coordinator paths are readable here (enables file references)");
    serve->add_option("--mmap-threshold", serveArgs.mmapThreshold,
                      "map referenced files at or above this size");

    DispatchArgs dispatchArgs;
    auto* dispatch = app.add_subcommand("dispatch", "coordinate a search across serve workers");
    auto* dispatchText =
        dispatch->add_option("--text", dispatchArgs.inlineText, "inline text to search");
    auto* dispatchFile = dispatch->add_option("--file", dispatchArgs.filePath, "file to search");
    dispatchText->excludes(dispatchFile);
    dispatchFile->excludes(dispatchText);
    dispatch->add_option("--pattern", dispatchArgs.pattern, "pattern bytes (\\xNN and \\\\ escapes)")
        ->required();
    dispatch->add_option("--algo", dispatchArgs.algo, "naive, quick, horspool or boyermoore");
    dispatch->add_option("--worker", dispatchArgs.workers,
                         "worker host:port (repeat; default $PARMATCH_WORKERS, comma separated)");
    dispatch->add_flag("--fileref", dispatchArgs.fileRef,
                       "send file references instead of inline bytes (needs --file and --shared-fs workers)");
    dispatch->add_flag("--quiet", dispatchArgs.quiet, "print only the count");
    dispatch->add_option("--mmap-threshold", dispatchArgs.mmapThreshold,
                         "map files at or above this size instead of reading them");

    GenArgs genArgs;
    auto* gen = app.add_subcommand("gen", "generate a reproducible corpus file");
    gen->add_option("--size", genArgs.size, "corpus size, e.g. 37M")->required();
    gen->add_option("--out", genArgs.outPath, "output path")->required();
    gen->add_option("--seed", genArgs.seed, "random corpus seed");
    gen->add_option("--block", genArgs.block, "fill by repeating this block instead of random bytes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) return runCount(countArgs);
        if (bench->parsed()) return runBench(benchArgs);
        if (serve->parsed()) return runServe(serveArgs);
        if (dispatch->parsed()) return runDispatch(dispatchArgs);
        if (gen->parsed()) return runGen(genArgs);
    } catch (const parmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
