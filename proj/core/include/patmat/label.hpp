#pragma once

#include <cstdint>
#include <functional>

namespace patmat {

// Exact label attached to a matrix cell by a pattern map. Most maps use only
// the first component; the two-component form exists for maps whose label is
// an exact integer pair compared lexicographically (see PatternMap).
struct Label {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;
};

inline std::uint64_t mix64(std::uint64_t z) {
    // SplitMix64 finalizer; also used to fold keys together elsewhere.
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct LabelHash {
    std::size_t operator()(const Label& l) const {
        std::uint64_t h = mix64(static_cast<std::uint64_t>(l.a));
        h = mix64(h ^ static_cast<std::uint64_t>(l.b));
        return static_cast<std::size_t>(h);
    }
};

}  // namespace patmat
