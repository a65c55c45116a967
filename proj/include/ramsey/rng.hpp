#ifndef RAMSEY_RNG_HPP
#define RAMSEY_RNG_HPP

#include <cstdint>
#include <random>

namespace ramsey {

/// One step of the splitmix64 generator.
auto splitmix64(std::uint64_t & state) -> std::uint64_t;

/// Independent seed for sub-task `index` of a run seeded with `seed`.
auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t;

/// The default seed used when none is given.
inline constexpr std::uint64_t default_seed = 0x5eed'2024'0001ULL;

/**
 * mt19937_64 with hand-rolled draws. The standard distributions are
 * implementation-defined, so outputs would differ between libraries.
 */
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    auto next() -> std::uint64_t { return _engine(); }

    /// Uniform in [0, n); n > 0. Modulo bias is negligible for small n.
    auto below(std::uint64_t n) -> std::uint64_t { return _engine() % n; }

    /// Uniform in [0, 1).
    auto unit() -> double { return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }

    auto chance(double p) -> bool { return unit() < p; }

private:
    std::mt19937_64 _engine;
};

} // namespace ramsey

#endif
