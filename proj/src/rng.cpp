#include <ramsey/rng.hpp>

namespace ramsey {

auto splitmix64(std::uint64_t & state) -> std::uint64_t
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
{
    std::uint64_t state = seed ^ (index * 0xd1342543de82ef95ULL);
    splitmix64(state);
    return splitmix64(state);
}

} // namespace ramsey
