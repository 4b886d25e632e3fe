#include "tr2dom/labeling.hpp"

namespace tr2dom {

Labeling::Labeling(std::vector<std::uint8_t> values) : _values(std::move(values))
{
    if (static_cast<int>(_values.size()) > Graph::max_order)
        throw Error(ErrorKind::size_limit, "labeling longer than " + std::to_string(Graph::max_order));
    for (std::size_t v = 0; v < _values.size(); ++v) {
        if (_values[v] > 2)
            throw Error(ErrorKind::invalid_argument, "label " + std::to_string(_values[v]) + " outside {0,1,2}");
        _level[_values[v]].insert(static_cast<Vertex>(v));
    }
}

Labeling::Labeling(std::initializer_list<int> values) :
    Labeling(std::vector<std::uint8_t>(values.begin(), values.end()))
{
}

auto Labeling::zeros(int n) -> Labeling
{
    return Labeling(std::vector<std::uint8_t>(n, 0));
}

auto Labeling::ones(int n) -> Labeling
{
    return Labeling(std::vector<std::uint8_t>(n, 1));
}

auto Labeling::indicator(int n, VertexSet s) -> Labeling
{
    std::vector<std::uint8_t> values(n, 0);
    for (auto v : s)
        values[v] = 1;
    return Labeling(std::move(values));
}

auto Labeling::parse(const std::string & digits) -> Labeling
{
    std::vector<std::uint8_t> values;
    for (char c : digits) {
        if (c < '0' || c > '2')
            throw Error(ErrorKind::parse, std::string("bad label character '") + c + "'");
        values.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Labeling(std::move(values));
}

auto Labeling::zeros_next_to_two(const Graph & g) const -> VertexSet
{
    VertexSet out;
    for (auto v : _level[0])
        if (g.neighbors(v).intersects(_level[2]))
            out.insert(v);
    return out;
}

auto Labeling::zeros_without_two(const Graph & g) const -> VertexSet
{
    return _level[0] - zeros_next_to_two(g);
}

auto Labeling::with(Vertex v, int value) const -> Labeling
{
    auto values = _values;
    values[v] = static_cast<std::uint8_t>(value);
    return Labeling(std::move(values));
}

auto Labeling::to_string() const -> std::string
{
    std::string out;
    for (auto x : _values)
        out.push_back(static_cast<char>('0' + x));
    return out;
}

namespace {
    auto check_size(const Graph & g, const Labeling & f) -> void
    {
        if (f.size() != g.order())
            throw Error(ErrorKind::invalid_argument, "labeling has " + std::to_string(f.size()) + " entries for a graph of order " + std::to_string(g.order()));
    }

    auto every_vertex_has_positive_neighbour(const Graph & g, const Labeling & f, VertexSet which) -> bool
    {
        auto pos = f.positive();
        for (auto v : which)
            if (! g.neighbors(v).intersects(pos))
                return false;
        return true;
    }
}

auto neighbour_sum(const Graph & g, const Labeling & f, Vertex v) -> int
{
    return f.weight_on(g.neighbors(v));
}

auto is_DF(const Graph & g, const Labeling & f) -> bool
{
    check_size(g, f);
    return every_vertex_has_positive_neighbour(g, f, f.zeros_set());
}

auto is_TDF(const Graph & g, const Labeling & f) -> bool
{
    check_size(g, f);
    return every_vertex_has_positive_neighbour(g, f, g.vertices());
}

auto is_R2DF(const Graph & g, const Labeling & f) -> bool
{
    check_size(g, f);
    for (auto v : f.zeros_set())
        if (neighbour_sum(g, f, v) < 2)
            return false;
    return true;
}

auto is_TRDF(const Graph & g, const Labeling & f) -> bool
{
    if (! is_TDF(g, f))
        return false;
    for (auto v : f.zeros_set())
        if (! g.neighbors(v).intersects(f.twos_set()))
            return false;
    return true;
}

auto is_TR2DF(const Graph & g, const Labeling & f) -> bool
{
    return is_R2DF(g, f) && is_TDF(g, f);
}

auto is_near_TR2DF(const Graph & g, const Labeling & f, Vertex v) -> bool
{
    check_size(g, f);
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::invalid_argument, "near vertex out of range");
    for (auto u : f.zeros_set())
        if (neighbour_sum(g, f, u) < (u == v ? 1 : 2))
            return false;
    return every_vertex_has_positive_neighbour(g, f, f.positive());
}

auto is_dominating_set(const Graph & g, VertexSet s) -> bool
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (! g.closed_neighbors(v).intersects(s))
            return false;
    return true;
}

auto is_total_dominating_set(const Graph & g, VertexSet s) -> bool
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (! g.neighbors(v).intersects(s))
            return false;
    return true;
}

auto is_double_dominating_set(const Graph & g, VertexSet s) -> bool
{
    for (Vertex v = 0; v < g.order(); ++v)
        if ((g.closed_neighbors(v) & s).size() < 2)
            return false;
    return true;
}

auto private_neighbors(const Graph & g, Vertex v, VertexSet s) -> PrivateNeighbours
{
    if (! s.contains(v))
        throw Error(ErrorKind::precondition, "private_neighbors: vertex " + std::to_string(v) + " not in the set");
    PrivateNeighbours out;
    for (Vertex u = 0; u < g.order(); ++u)
        if ((g.neighbors(u) & s) == VertexSet{v})
            out.pn.insert(u);
    out.epn = out.pn - s;
    return out;
}

}
