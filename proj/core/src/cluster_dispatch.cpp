#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <thread>
#include <variant>

#include "parmatch/cluster.hpp"
#include "parmatch/errors.hpp"
#include "parmatch/partition.hpp"

namespace parmatch {

namespace {

using Clock = std::chrono::steady_clock;

MatchReport runAssignment(const std::string& address, const Chunk& chunk, const Text& text,
                          const Pattern& pattern, const DispatchOptions& options,
                          std::uint64_t jobId) {
    net::Socket socket = net::connectTo(address);

    const std::uint64_t myFlags = options.useFileRef ? wire::kFlagSharedFilesystem : 0;
    net::writeFrame(socket, wire::Hello{wire::kProtocolVersion, myFlags});
    const auto ack = net::readFrame(socket);
    if (!ack.has_value()) throw ProtocolError("worker closed the connection during handshake");
    const auto* helloAck = std::get_if<wire::HelloAck>(&*ack);
    if (helloAck == nullptr) throw ProtocolError("expected HELLO-ACK");
    if (helloAck->version != wire::kProtocolVersion) {
        throw ProtocolError("worker speaks protocol version " + std::to_string(helloAck->version));
    }

    wire::Assign assign;
    assign.jobId = jobId;
    assign.algo = std::string(algoName(options.algo));
    assign.pattern = std::string(pattern.bytes());
    assign.start = chunk.start;
    assign.end = chunk.end;
    assign.extEnd = chunk.extEnd;
    if (options.useFileRef) {
        if ((helloAck->flags & wire::kFlagSharedFilesystem) == 0) {
            throw ProtocolError("worker did not declare a shared filesystem");
        }
        assign.transport = wire::FileRef{options.filePath, text.size()};
    } else {
        assign.transport = wire::InlineText{std::string(text.view(chunk.start, chunk.extEnd))};
    }
    net::writeFrame(socket, assign);

    const auto reply = net::readFrame(socket);
    if (!reply.has_value()) throw ProtocolError("worker closed the connection before replying");
    if (const auto* error = std::get_if<wire::Error>(&*reply)) {
        throw Error("worker error " + std::to_string(error->code) + ": " + error->message);
    }
    const auto* result = std::get_if<wire::Result>(&*reply);
    if (result == nullptr) throw ProtocolError("expected RESULT or ERROR");
    if (result->jobId != jobId) throw ProtocolError("result carries a foreign job id");

    MatchReport report;
    report.chunkIndex = chunk.index;
    report.count = result->count;
    report.elapsed = std::chrono::nanoseconds(result->elapsedNanos);
    return report;
}

}  // namespace

RunResult dispatch(const std::vector<std::string>& workerAddresses, const Text& text,
                   const Pattern& pattern, const DispatchOptions& options) {
    if (workerAddresses.empty()) {
        throw InvalidArgsError("at least one worker address is required");
    }
    if (options.useFileRef && (options.filePath.empty() || options.filePath.front() != '/')) {
        throw InvalidArgsError("file reference transport requires an absolute corpus path");
    }

    const auto begin = Clock::now();
    const ChunkPlan chunkPlan = plan(text.size(), pattern.length(), workerAddresses.size());
    const std::size_t p = chunkPlan.chunks.size();

    const std::uint64_t jobBase = std::random_device{}();

    std::vector<MatchReport> reports(p);
    std::vector<std::exception_ptr> failures(p);
    {
        std::vector<std::jthread> connections;
        connections.reserve(p);
        for (std::size_t i = 0; i < p; ++i) {
            connections.emplace_back([&, i] {
                try {
                    reports[i] = runAssignment(workerAddresses[i], chunkPlan.chunks[i], text,
                                               pattern, options, jobBase + i);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            });
        }
    }

    for (std::size_t i = 0; i < p; ++i) {
        if (!failures[i]) continue;
        try {
            std::rethrow_exception(failures[i]);
        } catch (const WorkerUnreachableError&) {
            throw;
        } catch (const Error& e) {
            throw WorkerFailureError(i, e.what());
        }
    }

    RunResult result;
    result.perChunk = std::move(reports);
    result.totalCount = std::accumulate(
        result.perChunk.begin(), result.perChunk.end(), std::uint64_t{0},
        [](std::uint64_t acc, const MatchReport& r) { return acc + r.count; });
    result.algorithm = options.algo;
    result.workers = p;
    result.wallTime = Clock::now() - begin;
    return result;
}

}  // namespace parmatch
