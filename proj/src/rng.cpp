#include "simguard/rng.hpp"

#include <cmath>

namespace simguard {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::uniform_int(std::uint64_t bound) {
    if (bound == 0) throw ArgumentError("uniform_int: bound must be positive");
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::vector<NodeId> Rng::sample_without_replacement(NodeId n, NodeId k) {
    if (k > n) throw ArgumentError("sample_without_replacement: k exceeds population");
    std::vector<NodeId> pool(static_cast<std::size_t>(n));
    for (NodeId i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (NodeId i = 0; i < k; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(uniform_int(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

Rng Rng::child(std::uint64_t tag) const {
    std::uint64_t s = seed_ ^ (0xA24BAED4963EE407ULL * (tag + 1));
    // one mixing round so nearby tags decorrelate
    std::uint64_t st = s;
    return Rng(splitmix64(st));
}

}  // namespace simguard
