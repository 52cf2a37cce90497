#pragma once

#include <cstdint>

namespace gradim {

/// splitmix64. Self-contained so that seeded runs are reproducible down to
/// the byte across platforms and standard library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish in [0, n); modulo bias is irrelevant for the tiny n used.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Independent stream for subtask i of a seeded run.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t i) {
        Rng r(seed ^ (0xa076bc9d2f8c53a3ULL + i * 0x9e3779b97f4a7c15ULL));
        r.next();
        return r.next();
    }

  private:
    std::uint64_t state_;
};

}  // namespace gradim
