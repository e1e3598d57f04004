#include "parmatch/text.hpp"

#include <fcntl.h>
#include <sys/mman.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <utility>

#include "parmatch/errors.hpp"

namespace parmatch {

namespace detail {
struct TextStorage {
    virtual ~TextStorage() = default;
    virtual const unsigned char* data() const noexcept = 0;
    virtual std::size_t size() const noexcept = 0;
};
}  // namespace detail

namespace {

struct BufferStorage final : detail::TextStorage {
    explicit BufferStorage(std::string b) : bytes(std::move(b)) {}
    const unsigned char* data() const noexcept override {
        return reinterpret_cast<const unsigned char*>(bytes.data());
    }
    std::size_t size() const noexcept override { return bytes.size(); }
    std::string bytes;
};

struct MmapStorage final : detail::TextStorage {
    MmapStorage(void* a, std::size_t l) : addr(a), len(l) {}
    ~MmapStorage() override {
        if (addr != nullptr) ::munmap(addr, len);
    }
    MmapStorage(const MmapStorage&) = delete;
    MmapStorage& operator=(const MmapStorage&) = delete;
    const unsigned char* data() const noexcept override {
        return static_cast<const unsigned char*>(addr);
    }
    std::size_t size() const noexcept override { return len; }
    void* addr;
    std::size_t len;
};

std::size_t fileSize(const std::string& path) {
    struct stat st{};
    if (::stat(path.c_str(), &st) != 0) {
        throw IoError("cannot stat " + path + ": " + std::strerror(errno));
    }
    return static_cast<std::size_t>(st.st_size);
}

}  // namespace

Text::Text() : storage_(std::make_shared<BufferStorage>(std::string{})) {}

Text::Text(std::shared_ptr<const detail::TextStorage> storage) : storage_(std::move(storage)) {}

Text Text::fromString(std::string bytes) {
    return Text(std::make_shared<BufferStorage>(std::move(bytes)));
}

Text Text::fromFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path + ": " + std::strerror(errno));
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failed for " + path);
    }
    return fromString(std::move(bytes));
}

Text Text::mapFile(const std::string& path) {
    const std::size_t len = fileSize(path);
    if (len == 0) {
        return fromString(std::string{});  // zero-length mappings are not valid
    }
    const int fd = ::open(path.c_str(), O_RDONLY);
    if (fd < 0) {
        throw IoError("cannot open " + path + ": " + std::strerror(errno));
    }
    void* addr = ::mmap(nullptr, len, PROT_READ, MAP_PRIVATE, fd, 0);
    const int savedErrno = errno;
    ::close(fd);
    if (addr == MAP_FAILED) {
        throw IoError("cannot map " + path + ": " + std::strerror(savedErrno));
    }
    return Text(std::make_shared<MmapStorage>(addr, len));
}

Text Text::load(const std::string& path, std::size_t mmapThreshold) {
    return fileSize(path) >= mmapThreshold ? mapFile(path) : fromFile(path);
}

std::size_t Text::size() const noexcept { return storage_->size(); }

const unsigned char* Text::data() const noexcept { return storage_->data(); }

unsigned char Text::at(std::size_t i) const {
    if (i >= size()) {
        throw RangeError("byte index " + std::to_string(i) + " out of range [0, " +
                         std::to_string(size()) + ")");
    }
    return data()[i];
}

std::string_view Text::view(std::size_t lo, std::size_t hi) const {
    if (lo > hi || hi > size()) {
        throw RangeError("slice [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         ") out of range for text of length " + std::to_string(size()));
    }
    return std::string_view(reinterpret_cast<const char*>(data()) + lo, hi - lo);
}

}  // namespace parmatch
