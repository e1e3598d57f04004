#include "parmatch/matcher.hpp"

#include <algorithm>
#include <cstddef>

#include "parmatch/errors.hpp"

namespace parmatch {

std::optional<Algo> parseAlgo(std::string_view name) noexcept {
    if (name == "naive") return Algo::Naive;
    if (name == "quick") return Algo::Quick;
    if (name == "horspool") return Algo::Horspool;
    if (name == "boyermoore") return Algo::BoyerMoore;
    return std::nullopt;
}

Algo algoFromName(std::string_view name) {
    if (auto a = parseAlgo(name)) return *a;
    throw UnknownAlgorithmError(std::string(name));
}

std::string_view algoName(Algo algo) noexcept {
    switch (algo) {
        case Algo::Naive: return "naive";
        case Algo::Quick: return "quick";
        case Algo::Horspool: return "horspool";
        case Algo::BoyerMoore: return "boyermoore";
    }
    return "unknown";
}

namespace {

// suffixes[i] = length of the longest substring ending at i that is also a
// suffix of the whole pattern; suffixes[m-1] = m.
std::vector<std::int64_t> computeSuffixes(const unsigned char* x, std::int64_t m) {
    std::vector<std::int64_t> suff(static_cast<std::size_t>(m));
    suff[m - 1] = m;
    std::int64_t g = m - 1;
    std::int64_t f = m - 1;
    for (std::int64_t i = m - 2; i >= 0; --i) {
        if (i > g && suff[i + m - 1 - f] < i - g) {
            suff[i] = suff[i + m - 1 - f];
        } else {
            if (i < g) g = i;
            f = i;
            while (g >= 0 && x[g] == x[g + m - 1 - f]) --g;
            suff[i] = f - g;
        }
    }
    return suff;
}

// Position-indexed good-suffix table: shift after a mismatch at pattern
// position i with pattern[i+1..m-1] already matched.
std::vector<std::uint32_t> computeGoodSuffixByPos(const unsigned char* x, std::int64_t m) {
    const auto suff = computeSuffixes(x, m);
    std::vector<std::uint32_t> gs(static_cast<std::size_t>(m), static_cast<std::uint32_t>(m));
    std::int64_t j = 0;
    for (std::int64_t i = m - 1; i >= 0; --i) {
        if (suff[i] == i + 1) {
            for (; j < m - 1 - i; ++j) {
                if (gs[j] == static_cast<std::uint32_t>(m)) {
                    gs[j] = static_cast<std::uint32_t>(m - 1 - i);
                }
            }
        }
    }
    for (std::int64_t i = 0; i <= m - 2; ++i) {
        gs[m - 1 - suff[i]] = static_cast<std::uint32_t>(m - 1 - i);
    }
    return gs;
}

}  // namespace

Pattern::Pattern(std::string_view bytes, std::size_t maxLength) : bytes_(bytes) {
    if (bytes_.empty()) throw EmptyPatternError();
    if (bytes_.size() > maxLength) throw PatternTooLongError(bytes_.size(), maxLength);

    const auto m = static_cast<std::uint32_t>(bytes_.size());
    const auto* x = data();

    quick_.fill(m + 1);
    horspool_.fill(m);
    last_.fill(-1);
    for (std::uint32_t i = 0; i < m; ++i) {
        quick_[x[i]] = m - i;
        last_[x[i]] = static_cast<std::int32_t>(i);
        if (i + 1 < m) horspool_[x[i]] = m - 1 - i;
    }

    // Indexed by matched suffix length; entry m covers a full match, where the
    // safe advance is the pattern period (== position-indexed entry 0).
    const auto byPos = computeGoodSuffixByPos(x, static_cast<std::int64_t>(m));
    goodSuffix_.resize(m + 1);
    for (std::uint32_t k = 0; k < m; ++k) goodSuffix_[k] = byPos[m - 1 - k];
    goodSuffix_[m] = byPos[0];
}

std::uint32_t Pattern::goodSuffixShift(std::size_t matchedSuffixLen) const {
    if (matchedSuffixLen >= goodSuffix_.size()) {
        throw RangeError("matched suffix length " + std::to_string(matchedSuffixLen) +
                         " out of range for pattern of length " + std::to_string(length()));
    }
    return goodSuffix_[matchedSuffixLen];
}

namespace {

void checkRange(const Text& t, Offset lo, Offset hi) {
    if (lo > hi || hi > t.size()) {
        throw RangeError("search range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         ") invalid for text of length " + std::to_string(t.size()));
    }
}

template <class Sink>
void scanNaive(const Pattern& p, const unsigned char* t, Offset lo, Offset hi, ScanStats& st,
               Sink&& sink) {
    const auto* x = p.data();
    const Offset m = p.length();
    for (Offset j = lo; j + m <= hi; ++j) {
        Offset i = 0;
        while (i < m && t[j + i] == x[i]) ++i;
        ++st.attempts;
        st.comparisons += (i < m) ? i + 1 : m;
        if (i == m) sink(j);
    }
}

// Left-to-right compare; the advance is keyed by the byte just past the
// window, so the final window (j + m == hi) is attempted and then the scan
// stops without touching t[hi].
template <class Sink>
void scanQuick(const Pattern& p, const unsigned char* t, Offset lo, Offset hi, ScanStats& st,
               Sink&& sink) {
    const auto* x = p.data();
    const Offset m = p.length();
    Offset j = lo;
    while (j + m <= hi) {
        Offset i = 0;
        while (i < m && t[j + i] == x[i]) ++i;
        ++st.attempts;
        st.comparisons += (i < m) ? i + 1 : m;
        if (i == m) sink(j);
        if (j + m == hi) break;
        j += p.quickShift(t[j + m]);
    }
}

template <class Sink>
void scanHorspool(const Pattern& p, const unsigned char* t, Offset lo, Offset hi, ScanStats& st,
                  Sink&& sink) {
    const auto* x = p.data();
    const std::int64_t m = static_cast<std::int64_t>(p.length());
    Offset j = lo;
    while (j + p.length() <= hi) {
        const unsigned char windowLast = t[j + m - 1];
        std::int64_t i = m - 1;
        while (i >= 0 && t[j + i] == x[i]) --i;
        ++st.attempts;
        st.comparisons += static_cast<std::uint64_t>(i >= 0 ? m - i : m);
        if (i < 0) sink(j);
        j += p.horspoolShift(windowLast);
    }
}

template <class Sink>
void scanBoyerMoore(const Pattern& p, const unsigned char* t, Offset lo, Offset hi, ScanStats& st,
                    Sink&& sink) {
    const auto* x = p.data();
    const std::int64_t m = static_cast<std::int64_t>(p.length());
    Offset j = lo;
    while (j + p.length() <= hi) {
        std::int64_t i = m - 1;
        while (i >= 0 && t[j + i] == x[i]) --i;
        ++st.attempts;
        st.comparisons += static_cast<std::uint64_t>(i >= 0 ? m - i : m);
        if (i < 0) {
            sink(j);
            j += p.goodSuffixShift(static_cast<std::size_t>(m));
        } else {
            const std::int64_t matched = m - 1 - i;
            const std::int64_t badChar = m - 1 - p.lastIndexOf(t[j + i]) - matched;
            const std::int64_t good = p.goodSuffixShift(static_cast<std::size_t>(matched));
            j += static_cast<Offset>(std::max(good, badChar));
        }
    }
}

template <class Sink>
void scan(Algo algo, const Pattern& p, const unsigned char* t, Offset lo, Offset hi, ScanStats& st,
          Sink&& sink) {
    switch (algo) {
        case Algo::Naive: scanNaive(p, t, lo, hi, st, sink); return;
        case Algo::Quick: scanQuick(p, t, lo, hi, st, sink); return;
        case Algo::Horspool: scanHorspool(p, t, lo, hi, st, sink); return;
        case Algo::BoyerMoore: scanBoyerMoore(p, t, lo, hi, st, sink); return;
    }
}

std::vector<Offset> collect(Algo algo, const Pattern& p, const Text& t, Offset lo, Offset hi,
                            ScanStats* stats) {
    checkRange(t, lo, hi);
    std::vector<Offset> out;
    ScanStats st;
    scan(algo, p, t.data(), lo, hi, st, [&out](Offset o) { out.push_back(o); });
    if (stats != nullptr) *stats = st;
    return out;
}

}  // namespace

std::vector<Offset> searchNaive(const Pattern& p, const Text& t, Offset lo, Offset hi,
                                ScanStats* stats) {
    return collect(Algo::Naive, p, t, lo, hi, stats);
}

std::vector<Offset> searchQuick(const Pattern& p, const Text& t, Offset lo, Offset hi,
                                ScanStats* stats) {
    return collect(Algo::Quick, p, t, lo, hi, stats);
}

std::vector<Offset> searchHorspool(const Pattern& p, const Text& t, Offset lo, Offset hi,
                                   ScanStats* stats) {
    return collect(Algo::Horspool, p, t, lo, hi, stats);
}

std::vector<Offset> searchBoyerMoore(const Pattern& p, const Text& t, Offset lo, Offset hi,
                                     ScanStats* stats) {
    return collect(Algo::BoyerMoore, p, t, lo, hi, stats);
}

std::vector<Offset> search(Algo algo, const Pattern& p, const Text& t, Offset lo, Offset hi,
                           ScanStats* stats) {
    return collect(algo, p, t, lo, hi, stats);
}

std::uint64_t countMatches(Algo algo, const Pattern& p, const Text& t, Offset lo, Offset hi,
                           ScanStats* stats) {
    checkRange(t, lo, hi);
    std::uint64_t n = 0;
    ScanStats st;
    scan(algo, p, t.data(), lo, hi, st, [&n](Offset) { ++n; });
    if (stats != nullptr) *stats = st;
    return n;
}

std::uint64_t countOwned(Algo algo, const Pattern& p, const Text& t, Offset lo, Offset hi,
                         Offset ownEnd, ScanStats* stats) {
    checkRange(t, lo, hi);
    std::uint64_t n = 0;
    ScanStats st;
    scan(algo, p, t.data(), lo, hi, st, [&n, ownEnd](Offset o) {
        if (o < ownEnd) ++n;
    });
    if (stats != nullptr) *stats = st;
    return n;
}

}  // namespace parmatch
