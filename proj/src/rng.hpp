#pragma once

#include <cstdint>

namespace hk {

/* splitmix64: tiny, fully specified, identical on every platform.
 * std::mt19937 would be reproducible too, but the distributions are not,
 * and byte-identical reports across toolchains are a hard requirement. */
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /* uniform in [0, n); n > 0 */
    uint64_t below(uint64_t n) { return next() % n; }

    /* uniform in [lo, hi] inclusive */
    int64_t range(int64_t lo, int64_t hi) { return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1))); }

    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

  private:
    uint64_t state_;
};

}  // namespace hk
