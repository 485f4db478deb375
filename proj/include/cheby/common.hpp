#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cheby {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

// Invalid input data: dimension mismatches, malformed constraint sets,
// violated operation preconditions.
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request exceeds the supported desk scale (vertex enumeration above
// dimension 8, oracle grids above the point budget).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violation of an invariant that valid inputs cannot trigger.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + a * 0xff51afd7ed558ccdULL);
    splitmix64(s);
    s ^= b * 0xc4ceb9fe1a85ec53ULL;
    splitmix64(s);
    return s;
}

// Deterministic stream of doubles; does not depend on library-provided
// distributions so runs replay identically across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // decorrelate trivially close seeds
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double gaussian();

private:
    std::uint64_t state_;
};

// Runs fn(0..n-1); with jobs > 1 the indices are split across threads.
// Results must be written to disjoint slots so the outcome is independent
// of scheduling.
void parallel_for(int jobs, int n, const std::function<void(int)>& fn);

}  // namespace cheby
