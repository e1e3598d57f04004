#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace parmatch {

namespace detail {
struct TextStorage;
}

/// Immutable random-access byte source. Copies share the underlying storage,
/// so a Text value can be handed to any number of worker threads.
///
/// Backed either by an in-memory buffer or by a read-only file mapping;
/// `load` picks the mapping once the file crosses `mmapThreshold`.
class Text {
public:
    static constexpr std::size_t kDefaultMmapThreshold = std::size_t{16} << 20;

    Text();  // empty text (n = 0)

    static Text fromString(std::string bytes);
    static Text fromFile(const std::string& path);  // whole-file read into memory
    static Text mapFile(const std::string& path);   // file-backed mapping
    static Text load(const std::string& path, std::size_t mmapThreshold = kDefaultMmapThreshold);

    std::size_t size() const noexcept;
    const unsigned char* data() const noexcept;

    /// Byte access; throws RangeError unless i < size().
    unsigned char at(std::size_t i) const;

    /// Contiguous read-only view of [lo, hi); throws RangeError unless 0 <= lo <= hi <= size().
    std::string_view view(std::size_t lo, std::size_t hi) const;

private:
    explicit Text(std::shared_ptr<const detail::TextStorage> storage);

    std::shared_ptr<const detail::TextStorage> storage_;
};

}  // namespace parmatch
