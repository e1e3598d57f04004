#include "parmatch/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "parmatch/errors.hpp"

namespace parmatch::net {

Socket::~Socket() { close(); }

Socket& Socket::operator=(Socket&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = std::exchange(other.fd_, -1);
    }
    return *this;
}

void Socket::close() noexcept {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

void Socket::sendAll(const void* data, std::size_t len) {
    const char* p = static_cast<const char*>(data);
    while (len > 0) {
        const ssize_t n = ::send(fd_, p, len, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw IoError(std::string("send failed: ") + std::strerror(errno));
        }
        p += n;
        len -= static_cast<std::size_t>(n);
    }
}

std::size_t Socket::recvExact(void* data, std::size_t len) {
    char* p = static_cast<char*>(data);
    std::size_t got = 0;
    while (got < len) {
        const ssize_t n = ::recv(fd_, p + got, len - got, 0);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw IoError(std::string("recv failed: ") + std::strerror(errno));
        }
        if (n == 0) break;  // peer closed
        got += static_cast<std::size_t>(n);
    }
    return got;
}

std::pair<std::string, std::string> splitHostPort(const std::string& address) {
    const auto colon = address.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == address.size()) {
        throw InvalidArgsError("address must be host:port, got \"" + address + "\"");
    }
    return {address.substr(0, colon), address.substr(colon + 1)};
}

namespace {

struct AddrInfoHolder {
    addrinfo* list = nullptr;
    ~AddrInfoHolder() {
        if (list != nullptr) ::freeaddrinfo(list);
    }
};

}  // namespace

Socket connectTo(const std::string& address) {
    const auto [host, port] = splitHostPort(address);

    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    AddrInfoHolder res;
    const int rc = ::getaddrinfo(host.c_str(), port.c_str(), &hints, &res.list);
    if (rc != 0) {
        throw WorkerUnreachableError(address, ::gai_strerror(rc));
    }

    std::string lastError = "no addresses";
    for (addrinfo* ai = res.list; ai != nullptr; ai = ai->ai_next) {
        const int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) {
            lastError = std::strerror(errno);
            continue;
        }
        if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) {
            return Socket(fd);
        }
        lastError = std::strerror(errno);
        ::close(fd);
    }
    throw WorkerUnreachableError(address, lastError);
}

Listener::~Listener() { close(); }

Listener::Listener(Listener&& other) noexcept
    : fd_(std::exchange(other.fd_, -1)),
      port_(other.port_),
      address_(std::move(other.address_)) {}

Listener& Listener::operator=(Listener&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = std::exchange(other.fd_, -1);
        port_ = other.port_;
        address_ = std::move(other.address_);
    }
    return *this;
}

void Listener::close() noexcept {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

Listener Listener::bindTo(const std::string& address) {
    const auto [host, port] = splitHostPort(address);

    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    hints.ai_flags = AI_PASSIVE;
    AddrInfoHolder res;
    const int rc = ::getaddrinfo(host.c_str(), port.c_str(), &hints, &res.list);
    if (rc != 0) {
        throw IoError("cannot resolve " + address + ": " + ::gai_strerror(rc));
    }

    std::string lastError = "no addresses";
    for (addrinfo* ai = res.list; ai != nullptr; ai = ai->ai_next) {
        const int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) {
            lastError = std::strerror(errno);
            continue;
        }
        const int one = 1;
        ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
        if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 16) == 0) {
            sockaddr_storage bound{};
            socklen_t boundLen = sizeof(bound);
            if (::getsockname(fd, reinterpret_cast<sockaddr*>(&bound), &boundLen) != 0) {
                lastError = std::strerror(errno);
                ::close(fd);
                continue;
            }
            Listener l;
            l.fd_ = fd;
            char hostBuf[NI_MAXHOST];
            if (bound.ss_family == AF_INET) {
                const auto* in4 = reinterpret_cast<const sockaddr_in*>(&bound);
                l.port_ = ntohs(in4->sin_port);
                ::inet_ntop(AF_INET, &in4->sin_addr, hostBuf, sizeof(hostBuf));
                l.address_ = std::string(hostBuf) + ":" + std::to_string(l.port_);
            } else {
                const auto* in6 = reinterpret_cast<const sockaddr_in6*>(&bound);
                l.port_ = ntohs(in6->sin6_port);
                ::inet_ntop(AF_INET6, &in6->sin6_addr, hostBuf, sizeof(hostBuf));
                l.address_ = std::string(hostBuf) + ":" + std::to_string(l.port_);
            }
            return l;
        }
        lastError = std::strerror(errno);
        ::close(fd);
    }
    throw IoError("cannot bind " + address + ": " + lastError);
}

Socket Listener::accept() {
    while (true) {
        const int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) return Socket(fd);
        if (errno == EINTR) continue;
        throw IoError(std::string("accept failed: ") + std::strerror(errno));
    }
}

void writeFrame(Socket& socket, const wire::Frame& frame) {
    const std::string bytes = wire::encodeFrame(frame);
    socket.sendAll(bytes.data(), bytes.size());
}

std::optional<wire::Frame> readFrame(Socket& socket) {
    unsigned char header[4];
    const std::size_t headerGot = socket.recvExact(header, sizeof(header));
    if (headerGot == 0) return std::nullopt;
    if (headerGot < sizeof(header)) throw ProtocolError("connection closed inside frame header");

    std::uint32_t len = 0;
    for (unsigned char b : header) len = (len << 8) | b;
    if (len == 0) throw ProtocolError("zero-length frame");
    if (len > wire::kMaxFrameBytes) throw ProtocolError("frame length exceeds the 64 MiB limit");

    std::string body(len, '\0');
    if (socket.recvExact(body.data(), body.size()) < body.size()) {
        throw ProtocolError("connection closed inside frame body");
    }
    return wire::decodeFrameBody(body);
}

}  // namespace parmatch::net
