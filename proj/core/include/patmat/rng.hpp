#pragma once

#include <cmath>
#include <cstdint>

#include "patmat/label.hpp"

namespace patmat {

// Counter-based keyed stream: each (seed, label) pair owns an independent
// deterministic sequence, so a label's value never depends on fill order or on
// the matrix size, and coupled matrices built from the same seed share draws.
// The key deliberately ignores the entry distribution.
class KeyedStream {
  public:
    KeyedStream(std::uint64_t seed, const Label& lab) {
        state_ = mix64(mix64(mix64(seed) ^ static_cast<std::uint64_t>(lab.a)) ^
                       static_cast<std::uint64_t>(lab.b));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // uniform on (0,1]; safe under log()
    double next_unit_open() { return 1.0 - next_unit_halfopen(); }

    // uniform on [0,1)
    double next_unit_halfopen() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal via Box-Muller
    double next_gaussian() {
        double u1 = next_unit_open();
        double u2 = next_unit_halfopen();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

  private:
    std::uint64_t state_ = 0;
};

// Stable per-repetition seed derivation from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(mix64(master) ^ mix64(index + 0x5bf0361c0cbbb468ULL));
}

}  // namespace patmat
