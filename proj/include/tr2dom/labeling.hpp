#pragma once

#include "tr2dom/graph.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tr2dom {

/// A function V -> {0,1,2}. The level sets V_0, V_1, V_2 are computed once
/// at construction; the object is immutable afterwards.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<std::uint8_t> values);
    Labeling(std::initializer_list<int> values);

    static auto zeros(int n) -> Labeling;
    static auto ones(int n) -> Labeling;
    /// 1 on s, 0 elsewhere.
    static auto indicator(int n, VertexSet s) -> Labeling;
    /// Parses a string of digits such as "21010".
    static auto parse(const std::string & digits) -> Labeling;

    auto size() const -> int { return static_cast<int>(_values.size()); }
    auto operator[](Vertex v) const -> int { return _values[v]; }
    auto values() const -> const std::vector<std::uint8_t> & { return _values; }

    auto level(int i) const -> VertexSet { return _level[i]; }
    auto zeros_set() const -> VertexSet { return _level[0]; }
    auto ones_set() const -> VertexSet { return _level[1]; }
    auto twos_set() const -> VertexSet { return _level[2]; }
    auto positive() const -> VertexSet { return _level[1] | _level[2]; }

    auto weight() const -> int { return _level[1].size() + 2 * _level[2].size(); }
    auto weight_on(VertexSet s) const -> int { return (s & _level[1]).size() + 2 * (s & _level[2]).size(); }

    /// V_{0,2}: zero vertices with a neighbour labelled 2.
    auto zeros_next_to_two(const Graph & g) const -> VertexSet;
    /// V_{0,1} = V_0 minus V_{0,2}.
    auto zeros_without_two(const Graph & g) const -> VertexSet;

    auto with(Vertex v, int value) const -> Labeling;

    auto to_string() const -> std::string;

    auto operator==(const Labeling & o) const -> bool { return _values == o._values; }
    auto operator<=>(const Labeling & o) const -> std::strong_ordering { return _values <=> o._values; }

private:
    std::vector<std::uint8_t> _values;
    VertexSet _level[3];
};

/// f(N(v)).
auto neighbour_sum(const Graph & g, const Labeling & f, Vertex v) -> int;

auto is_DF(const Graph & g, const Labeling & f) -> bool;
auto is_TDF(const Graph & g, const Labeling & f) -> bool;
auto is_R2DF(const Graph & g, const Labeling & f) -> bool;
auto is_TRDF(const Graph & g, const Labeling & f) -> bool;
auto is_TR2DF(const Graph & g, const Labeling & f) -> bool;

/// Near total Roman {2}-domination relative to v: the zero vertex v needs
/// only f(N(v)) >= 1, every other zero vertex u needs f(N(u)) >= 2, and the
/// positive vertices induce no isolated vertex.
auto is_near_TR2DF(const Graph & g, const Labeling & f, Vertex v) -> bool;

auto is_dominating_set(const Graph & g, VertexSet s) -> bool;
auto is_total_dominating_set(const Graph & g, VertexSet s) -> bool;
auto is_double_dominating_set(const Graph & g, VertexSet s) -> bool;

struct PrivateNeighbours {
    VertexSet pn;
    VertexSet epn;
};

/// Throws Error(precondition) unless v is in s.
auto private_neighbors(const Graph & g, Vertex v, VertexSet s) -> PrivateNeighbours;

}
