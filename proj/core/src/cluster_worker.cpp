#include <chrono>
#include <utility>
#include <variant>

#include "parmatch/cluster.hpp"
#include "parmatch/errors.hpp"
#include "parmatch/matcher.hpp"

namespace parmatch {

namespace {

using Clock = std::chrono::steady_clock;

wire::Frame processAssign(wire::Assign& assign, bool fileRefNegotiated,
                          const WorkerOptions& options) {
    try {
        const Algo algo = algoFromName(assign.algo);
        const Pattern pattern(assign.pattern);
        if (!(assign.start <= assign.end && assign.end <= assign.extEnd)) {
            throw InvalidArgsError("assignment ranges must satisfy start <= end <= extEnd");
        }

        Text text;
        Offset scanLo = 0;
        Offset scanHi = 0;
        Offset ownEnd = 0;
        if (auto* inlineText = std::get_if<wire::InlineText>(&assign.transport)) {
            if (inlineText->bytes.size() != assign.extEnd - assign.start) {
                throw InvalidArgsError("inline text length disagrees with [start, extEnd)");
            }
            text = Text::fromString(std::move(inlineText->bytes));
            scanLo = 0;
            scanHi = text.size();
            ownEnd = assign.end - assign.start;
        } else {
            const auto& ref = std::get<wire::FileRef>(assign.transport);
            if (!fileRefNegotiated) {
                throw ProtocolError("file reference transport was not negotiated at handshake");
            }
            text = Text::load(ref.path, options.mmapThreshold);
            if (text.size() != ref.length) {
                throw IoError("file " + ref.path + " has length " + std::to_string(text.size()) +
                              ", assignment expected " + std::to_string(ref.length));
            }
            if (assign.extEnd > text.size()) {
                throw InvalidArgsError("assignment extEnd lies past the end of the file");
            }
            scanLo = assign.start;
            scanHi = assign.extEnd;
            ownEnd = assign.end;
        }

        const auto begin = Clock::now();
        const std::uint64_t count = countOwned(algo, pattern, text, scanLo, scanHi, ownEnd);
        const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - begin);
        return wire::Result{assign.jobId, count,
                            static_cast<std::uint64_t>(elapsed.count())};
    } catch (const UnknownAlgorithmError& e) {
        return wire::Error{assign.jobId, wire::kErrUnknownAlgorithm, e.what()};
    } catch (const ProtocolError& e) {
        return wire::Error{assign.jobId, wire::kErrTransportNotNegotiated, e.what()};
    } catch (const IoError& e) {
        return wire::Error{assign.jobId, wire::kErrIo, e.what()};
    } catch (const Error& e) {
        return wire::Error{assign.jobId, wire::kErrBadAssignment, e.what()};
    } catch (const std::exception& e) {
        return wire::Error{assign.jobId, wire::kErrInternal, e.what()};
    }
}

}  // namespace

WorkerServer::WorkerServer(const std::string& listenAddress, WorkerOptions options)
    : listener_(net::Listener::bindTo(listenAddress)), options_(options) {}

void WorkerServer::serve() {
    running_ = true;
    while (running_) {
        net::Socket connection = listener_.accept();
        try {
            handleConnection(connection);
        } catch (const Error&) {
            // protocol violation or socket error: drop this connection, keep serving
        }
    }
}

void WorkerServer::handleConnection(net::Socket& socket) {
    const auto first = net::readFrame(socket);
    if (!first.has_value()) return;
    const auto* hello = std::get_if<wire::Hello>(&*first);
    if (hello == nullptr) throw ProtocolError("expected HELLO as the first frame");
    if (hello->version != wire::kProtocolVersion) {
        throw ProtocolError("unsupported protocol version " + std::to_string(hello->version));
    }

    const std::uint64_t myFlags = options_.sharedFilesystem ? wire::kFlagSharedFilesystem : 0;
    net::writeFrame(socket, wire::HelloAck{wire::kProtocolVersion, myFlags});

    const bool fileRefNegotiated =
        options_.sharedFilesystem && (hello->flags & wire::kFlagSharedFilesystem) != 0;

    while (true) {
        auto frame = net::readFrame(socket);
        if (!frame.has_value()) return;  // coordinator hung up
        if (std::holds_alternative<wire::Shutdown>(*frame)) {
            running_ = false;
            return;
        }
        auto* assign = std::get_if<wire::Assign>(&*frame);
        if (assign == nullptr) throw ProtocolError("expected ASSIGN or SHUTDOWN");
        net::writeFrame(socket, processAssign(*assign, fileRefNegotiated, options_));
    }
}

void serveWorker(const std::string& listenAddress, WorkerOptions options) {
    WorkerServer server(listenAddress, options);
    server.serve();
}

void sendShutdown(const std::string& address) {
    net::Socket socket = net::connectTo(address);
    net::writeFrame(socket, wire::Hello{wire::kProtocolVersion, 0});
    const auto ack = net::readFrame(socket);
    if (!ack.has_value() || !std::holds_alternative<wire::HelloAck>(*ack)) {
        throw ProtocolError("worker did not complete the handshake");
    }
    net::writeFrame(socket, wire::Shutdown{});
}

}  // namespace parmatch
