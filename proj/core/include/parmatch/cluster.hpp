#pragma once

#include <string>
#include <vector>

#include "parmatch/engine.hpp"
#include "parmatch/net.hpp"
#include "parmatch/text.hpp"

namespace parmatch {

struct WorkerOptions {
    /// Declared at handshake; gates FILEREF assignments.
    bool sharedFilesystem = false;
    std::size_t mmapThreshold = Text::kDefaultMmapThreshold;
};

/// A worker process: accepts connections, answers ASSIGN frames with RESULT
/// (or ERROR, leaving the connection up), and exits on a SHUTDOWN frame.
/// Protocol violations drop the offending connection only.
class WorkerServer {
public:
    explicit WorkerServer(const std::string& listenAddress, WorkerOptions options = {});

    const std::string& address() const noexcept { return listener_.address(); }
    std::uint16_t port() const noexcept { return listener_.port(); }

    /// Blocks until a SHUTDOWN frame arrives.
    void serve();

private:
    void handleConnection(net::Socket& socket);

    net::Listener listener_;
    WorkerOptions options_;
    bool running_ = false;
};

/// Bind, then serve until shutdown.
void serveWorker(const std::string& listenAddress, WorkerOptions options = {});

/// Connect, handshake, and tell the worker to shut down.
void sendShutdown(const std::string& address);

struct DispatchOptions {
    Algo algo = Algo::Quick;
    /// Send FILEREF assignments instead of inline bytes. Requires filePath to
    /// be the corpus' absolute path and every worker to have declared a
    /// shared filesystem.
    bool useFileRef = false;
    std::string filePath;
};

/// Coordinator: plan the text into one chunk per worker address, issue all
/// assignments concurrently, join on all results, and sum the counts. The
/// coordinator never scans. Any worker failure aborts the run with an error
/// naming the failed chunk; no partial total is ever produced.
RunResult dispatch(const std::vector<std::string>& workerAddresses, const Text& text,
                   const Pattern& pattern, const DispatchOptions& options = {});

}  // namespace parmatch
