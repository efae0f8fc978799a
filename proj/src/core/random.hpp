#pragma once

#include <array>
#include <cstdint>

namespace optbench {

// Draw interface used by every randomized kernel and algorithm. All
// randomness in the library flows through one of these, so a run is fully
// determined by the seed of the source it was given. Tests substitute
// scripted implementations to force exact draw sequences.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    virtual std::uint64_t next_u64() = 0;

    // Unif[0,1), 53-bit resolution.
    virtual double uniform() = 0;

    // Standard normal N(0,1).
    virtual double gaussian() = 0;

    // Unbiased integer in [0, bound); bound must be nonzero.
    virtual std::size_t uniform_index(std::size_t bound);
};

// Default deterministic source: xoshiro256++ seeded through a splitmix64
// chain. Identical seeds give identical streams; the exact recipe, including
// the Box-Muller normal transform, is written out in docs/randomness.md.
class Xoshiro256Source final : public RandomSource {
public:
    explicit Xoshiro256Source(std::uint64_t seed);

    std::uint64_t next_u64() override;
    double uniform() override;
    double gaussian() override;

    // Deterministic child stream; advances this stream by one draw.
    Xoshiro256Source split();

private:
    std::array<std::uint64_t, 4> state_;
    double spare_gaussian_ = 0.0;
    bool has_spare_gaussian_ = false;
};

// One step of the splitmix64 sequence; also the mixing primitive behind
// seed derivation in the experiment harness.
std::uint64_t splitmix64_next(std::uint64_t& state);

}  // namespace optbench
