#pragma once

#include <cstdint>
#include <vector>

#include "simguard/common.hpp"

namespace simguard {

/// Counter-based generator (splitmix64). The stream depends only on the
/// 64-bit seed and the call sequence, so results are identical across
/// platforms and standard-library versions. Child streams derived with
/// child() depend only on the seed and the tag, not on draws made so far.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 bits of precision.
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, bound). Rejection-sampled, bias-free.
    std::uint64_t uniform_int(std::uint64_t bound);

    /// Standard normal via Box-Muller.
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct values from [0, n), in random order.
    std::vector<NodeId> sample_without_replacement(NodeId n, NodeId k);

    /// Independent stream keyed off this generator's seed and a tag.
    Rng child(std::uint64_t tag) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace simguard
