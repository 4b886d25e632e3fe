#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tr2dom {

using Vertex = int;

/// Fixed-width bitset over vertices 0..63. Every graph in this library fits
/// in one machine word, so neighbourhood intersections are single AND ops.
class VertexSet {
public:
    static constexpr int capacity = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (auto v : vs)
            insert(v);
    }

    static constexpr auto first_n(int n) -> VertexSet
    {
        return VertexSet(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static auto from(const std::vector<Vertex> & vs) -> VertexSet
    {
        VertexSet s;
        for (auto v : vs)
            s.insert(v);
        return s;
    }

    constexpr auto bits() const -> std::uint64_t { return _bits; }
    constexpr auto contains(Vertex v) const -> bool { return (_bits >> v) & 1U; }
    constexpr auto size() const -> int { return std::popcount(_bits); }
    constexpr auto empty() const -> bool { return _bits == 0; }
    constexpr auto first() const -> Vertex { return std::countr_zero(_bits); }

    constexpr auto insert(Vertex v) -> void { _bits |= std::uint64_t{1} << v; }
    constexpr auto erase(Vertex v) -> void { _bits &= ~(std::uint64_t{1} << v); }

    constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet(_bits & o._bits); }
    constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet(_bits | o._bits); }
    constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet(_bits & ~o._bits); }
    constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
    constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
    constexpr auto operator==(const VertexSet &) const -> bool = default;

    constexpr auto intersects(VertexSet o) const -> bool { return (_bits & o._bits) != 0; }
    constexpr auto subset_of(VertexSet o) const -> bool { return (_bits & ~o._bits) == 0; }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t bits) : _rest(bits) {}
        constexpr auto operator*() const -> Vertex { return std::countr_zero(_rest); }
        constexpr auto operator++() -> iterator & { _rest &= _rest - 1; return *this; }
        constexpr auto operator++(int) -> iterator { auto t = *this; ++*this; return t; }
        constexpr auto operator==(const iterator &) const -> bool = default;

    private:
        std::uint64_t _rest = 0;
    };

    constexpr auto begin() const -> iterator { return iterator(_bits); }
    constexpr auto end() const -> iterator { return iterator(0); }

    auto to_vector() const -> std::vector<Vertex> { return {begin(), end()}; }

private:
    std::uint64_t _bits = 0;
};

}
