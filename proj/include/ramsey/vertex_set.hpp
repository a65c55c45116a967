#ifndef RAMSEY_VERTEX_SET_HPP
#define RAMSEY_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace ramsey {

inline constexpr int max_vertices = 512;

/**
 * Fixed-capacity bitset over vertex indices 0..max_vertices-1. Every graph in
 * the library stores one of these per vertex as its neighbourhood row.
 */
class VertexSet
{
public:
    static constexpr int n_words = max_vertices / 64;

    VertexSet() = default;

    static auto range(int n) -> VertexSet
    {
        VertexSet s;
        for (int w = 0; w < n_words && n > 0; ++w, n -= 64)
            s._words[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return s;
    }

    static auto of(std::initializer_list<int> members) -> VertexSet
    {
        VertexSet s;
        for (int v : members)
            s.set(v);
        return s;
    }

    auto set(int v) -> void { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
    auto reset(int v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    auto test(int v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1; }

    auto count() const -> int
    {
        int c = 0;
        for (auto w : _words)
            c += std::popcount(w);
        return c;
    }

    auto empty() const -> bool
    {
        for (auto w : _words)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or -1.
    auto first() const -> int { return next(-1); }

    /// Smallest member strictly greater than `after`, or -1.
    auto next(int after) const -> int
    {
        int from = after + 1;
        if (from >= max_vertices)
            return -1;
        int w = from >> 6;
        std::uint64_t bits = _words[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (bits)
                return (w << 6) + std::countr_zero(bits);
            if (++w == n_words)
                return -1;
            bits = _words[w];
        }
    }

    auto intersects(const VertexSet & o) const -> bool
    {
        for (int w = 0; w < n_words; ++w)
            if (_words[w] & o._words[w])
                return true;
        return false;
    }

    auto is_subset_of(const VertexSet & o) const -> bool
    {
        for (int w = 0; w < n_words; ++w)
            if (_words[w] & ~o._words[w])
                return false;
        return true;
    }

    auto operator&=(const VertexSet & o) -> VertexSet &
    {
        for (int w = 0; w < n_words; ++w)
            _words[w] &= o._words[w];
        return *this;
    }

    auto operator|=(const VertexSet & o) -> VertexSet &
    {
        for (int w = 0; w < n_words; ++w)
            _words[w] |= o._words[w];
        return *this;
    }

    /// Set difference.
    auto operator-=(const VertexSet & o) -> VertexSet &
    {
        for (int w = 0; w < n_words; ++w)
            _words[w] &= ~o._words[w];
        return *this;
    }

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    auto members() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v != -1; v = next(v))
            out.push_back(v);
        return out;
    }

    class iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int *;
        using reference = int;

        iterator() = default;
        iterator(const VertexSet * s, int v) : _s(s), _v(v) {}
        auto operator*() const -> int { return _v; }
        auto operator++() -> iterator &
        {
            _v = _s->next(_v);
            return *this;
        }
        auto operator++(int) -> iterator
        {
            auto r = *this;
            ++*this;
            return r;
        }
        friend auto operator==(const iterator & a, const iterator & b) -> bool { return a._v == b._v; }

    private:
        const VertexSet * _s = nullptr;
        int _v = -1;
    };

    auto begin() const -> iterator { return {this, first()}; }
    auto end() const -> iterator { return {this, -1}; }

private:
    std::array<std::uint64_t, n_words> _words{};
};

} // namespace ramsey

#endif
