#pragma once

#include <cstdint>

namespace ropebound {

// Deterministic counter-derived random stream: (root_seed, stream_index)
// selects an independent sequence, so draws never depend on how work is
// split across threads. splitmix64 core, Box-Muller for normals.
class RandomStream {
public:
    RandomStream(std::uint64_t root_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    double next_unit();      // uniform in [0, 1)
    double next_gaussian();  // standard normal

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ropebound
