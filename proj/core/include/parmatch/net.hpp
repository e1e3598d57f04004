#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "parmatch/wire.hpp"

namespace parmatch::net {

/// Move-only owner of a connected stream socket.
class Socket {
public:
    Socket() noexcept = default;
    explicit Socket(int fd) noexcept : fd_(fd) {}
    ~Socket();
    Socket(Socket&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
    Socket& operator=(Socket&& other) noexcept;
    Socket(const Socket&) = delete;
    Socket& operator=(const Socket&) = delete;

    bool valid() const noexcept { return fd_ >= 0; }
    int fd() const noexcept { return fd_; }

    void sendAll(const void* data, std::size_t len);  // IoError on failure

    /// Reads exactly len bytes. Returns the byte count actually read; a short
    /// result means the peer closed the connection. IoError on socket errors.
    std::size_t recvExact(void* data, std::size_t len);

    void close() noexcept;

private:
    int fd_ = -1;
};

/// "host:port" -> {host, port}. Throws InvalidArgsError when malformed.
std::pair<std::string, std::string> splitHostPort(const std::string& address);

/// Connect to "host:port"; throws WorkerUnreachableError.
Socket connectTo(const std::string& address);

class Listener {
public:
    /// Bind and listen on "host:port"; port 0 picks an ephemeral port.
    static Listener bindTo(const std::string& address);

    Socket accept();  // IoError on failure (including a closed listener)

    std::uint16_t port() const noexcept { return port_; }
    const std::string& address() const noexcept { return address_; }  // dialable "host:port"

    void close() noexcept;
    ~Listener();
    Listener(Listener&& other) noexcept;
    Listener& operator=(Listener&& other) noexcept;
    Listener(const Listener&) = delete;
    Listener& operator=(const Listener&) = delete;

private:
    Listener() = default;
    int fd_ = -1;
    std::uint16_t port_ = 0;
    std::string address_;
};

/// Write one encoded frame. FrameTooLargeError / IoError propagate.
void writeFrame(Socket& socket, const wire::Frame& frame);

/// Read one frame. nullopt on clean EOF before a frame starts; ProtocolError
/// on malformed framing or mid-frame EOF; IoError on socket errors.
std::optional<wire::Frame> readFrame(Socket& socket);

}  // namespace parmatch::net
