#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parmatch {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyPatternError : public Error {
public:
    EmptyPatternError() : Error("pattern must not be empty") {}
};

class PatternTooLongError : public Error {
public:
    PatternTooLongError(std::size_t length, std::size_t cap)
        : Error("pattern length " + std::to_string(length) + " exceeds cap " + std::to_string(cap)) {}
};

/// A search range [lo, hi) that does not satisfy 0 <= lo <= hi <= n.
class RangeError : public Error {
public:
    using Error::Error;
};

class InvalidArgsError : public Error {
public:
    using Error::Error;
};

class UnknownAlgorithmError : public Error {
public:
    explicit UnknownAlgorithmError(const std::string& name)
        : Error("unknown algorithm \"" + name + "\" (expected naive, quick, horspool or boyermoore)") {}
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed or unexpected bytes on a cluster connection.
class ProtocolError : public Error {
public:
    using Error::Error;
};

class FrameTooLargeError : public Error {
public:
    explicit FrameTooLargeError(std::size_t size)
        : Error("frame of " + std::to_string(size) + " bytes exceeds the 64 MiB limit") {}
};

class WorkerUnreachableError : public Error {
public:
    explicit WorkerUnreachableError(const std::string& address, const std::string& detail)
        : Error("worker unreachable at " + address + ": " + detail), address_(address) {}
    const std::string& address() const noexcept { return address_; }

private:
    std::string address_;
};

/// A worker failed or died while holding a chunk; the run produces no total.
class WorkerFailureError : public Error {
public:
    WorkerFailureError(std::size_t chunkIndex, const std::string& detail)
        : Error("worker for chunk " + std::to_string(chunkIndex) + " failed: " + detail),
          chunkIndex_(chunkIndex) {}
    std::size_t chunkIndex() const noexcept { return chunkIndex_; }

private:
    std::size_t chunkIndex_;
};

/// Occurrence counts disagreed across a benchmark sweep: a correctness bug, not noise.
class CountMismatchError : public Error {
public:
    CountMismatchError(std::size_t workers, const std::string& detail)
        : Error("count mismatch at p=" + std::to_string(workers) + ": " + detail), workers_(workers) {}
    std::size_t workers() const noexcept { return workers_; }

private:
    std::size_t workers_;
};

class PatternEscapeError : public Error {
public:
    using Error::Error;
};

}  // namespace parmatch
