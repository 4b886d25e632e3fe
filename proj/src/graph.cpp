#include "tr2dom/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tr2dom {

auto to_string(ErrorKind kind) -> const char *
{
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::size_limit: return "size_limit";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::not_a_tree: return "not_a_tree";
    case ErrorKind::parse: return "parse";
    case ErrorKind::precondition: return "precondition";
    }
    return "unknown";
}

Graph::Graph(int n) : _n(n)
{
    if (n < 0 || n > max_order)
        throw Error(ErrorKind::size_limit, "graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_order));
    _adj.assign(n, VertexSet{});
}

auto Graph::from_edges(int n, const std::vector<Edge> & edges) -> Graph
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (auto & row : _adj)
        twice += row.size();
    return twice / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < _n; ++u)
        for (auto v : _adj[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

auto Graph::has_isolated_vertex() const -> bool
{
    return std::any_of(_adj.begin(), _adj.end(), [](VertexSet s) { return s.empty(); });
}

auto Graph::is_connected() const -> bool
{
    if (_n == 0)
        return true;
    VertexSet seen{0};
    VertexSet frontier{0};
    while (! frontier.empty()) {
        VertexSet next;
        for (auto v : frontier)
            next |= _adj[v];
        frontier = next - seen;
        seen |= next;
    }
    return seen == vertices();
}

auto Graph::is_tree() const -> bool
{
    return _n >= 1 && edge_count() == _n - 1 && is_connected();
}

GraphBuilder::GraphBuilder(int n) : _g(n)
{
}

auto GraphBuilder::add_vertex() -> Vertex
{
    return add_vertices(1);
}

auto GraphBuilder::add_vertices(int count) -> Vertex
{
    auto first = _g._n;
    if (first + count > Graph::max_order)
        throw Error(ErrorKind::size_limit, "graph would exceed " + std::to_string(Graph::max_order) + " vertices");
    _g._n += count;
    _g._adj.resize(_g._n);
    return first;
}

auto GraphBuilder::add_edge(Vertex u, Vertex v) -> GraphBuilder &
{
    if (u < 0 || v < 0 || u >= _g._n || v >= _g._n)
        throw Error(ErrorKind::invalid_argument, "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v)
        throw Error(ErrorKind::invalid_argument, "self loop at " + std::to_string(u));
    _g._adj[u].insert(v);
    _g._adj[v].insert(u);
    return *this;
}

auto GraphBuilder::add_graph(const Graph & g) -> Vertex
{
    auto offset = add_vertices(g.order());
    for (auto [u, v] : g.edges())
        add_edge(u + offset, v + offset);
    return offset;
}

auto degree_stats(const Graph & g) -> DegreeStats
{
    if (g.order() < 1)
        throw Error(ErrorKind::precondition, "degree_stats needs at least one vertex");
    DegreeStats s{g.degree(0), g.degree(0)};
    for (Vertex v = 1; v < g.order(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    return s;
}

auto vertex_classes(const Graph & g) -> VertexClasses
{
    VertexClasses c;
    auto all = g.vertices();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1)
            c.leaves.insert(v);
        if (g.closed_neighbors(v) == all)
            c.universal.insert(v);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        auto leaf_nbrs = (g.neighbors(v) & c.leaves).size();
        if (leaf_nbrs >= 1)
            c.supports.insert(v);
        if (leaf_nbrs >= 2)
            c.strong_supports.insert(v);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (c.leaves.contains(v) && g.neighbors(v).intersects(c.strong_supports))
            c.strong_leaves.insert(v);
        if (! c.leaves.contains(v) && g.neighbors(v).intersects(c.supports))
            c.semi_supports.insert(v);
        if (c.supports.contains(v) && g.neighbors(v).intersects(c.supports))
            c.adjacent_supports.insert(v);
    }
    return c;
}

namespace {
    auto bfs_layers(const Graph & g, Vertex source) -> std::vector<int>
    {
        std::vector<int> dist(g.order(), -1);
        dist[source] = 0;
        VertexSet seen{source};
        VertexSet frontier{source};
        for (int d = 1; ! frontier.empty(); ++d) {
            VertexSet next;
            for (auto v : frontier)
                next |= g.neighbors(v);
            frontier = next - seen;
            seen |= frontier;
            for (auto v : frontier)
                dist[v] = d;
        }
        return dist;
    }
}

auto distance(const Graph & g, Vertex u, Vertex v) -> std::optional<int>
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw Error(ErrorKind::invalid_argument, "distance: vertex out of range");
    auto d = bfs_layers(g, u)[v];
    if (d < 0)
        return std::nullopt;
    return d;
}

auto diameter(const Graph & g) -> int
{
    if (! g.is_connected())
        throw Error(ErrorKind::precondition, "diameter of a disconnected graph");
    int best = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto dist = bfs_layers(g, u);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

auto induced_subgraph(const Graph & g, VertexSet keep) -> InducedSubgraph
{
    keep &= g.vertices();
    InducedSubgraph out{Graph(keep.size()), keep.to_vector()};
    std::vector<Vertex> new_of(g.order(), -1);
    for (std::size_t i = 0; i < out.original_of.size(); ++i)
        new_of[out.original_of[i]] = static_cast<Vertex>(i);
    GraphBuilder b(keep.size());
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v))
            b.add_edge(new_of[u], new_of[v]);
    out.graph = b.build();
    return out;
}

auto delete_vertices(const Graph & g, VertexSet s) -> InducedSubgraph
{
    return induced_subgraph(g, g.vertices() - s);
}

auto corona(const Graph & g, const Graph & h) -> Graph
{
    if (g.order() == 0)
        throw Error(ErrorKind::precondition, "corona needs a nonempty base graph");
    GraphBuilder b;
    b.add_graph(g);
    for (Vertex i = 0; i < g.order(); ++i) {
        auto offset = b.add_graph(h);
        for (Vertex x = 0; x < h.order(); ++x)
            b.add_edge(i, offset + x);
    }
    return b.build();
}

auto cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorKind::precondition, "cartesian product needs nonempty factors");
    auto id = [&](Vertex a, Vertex x) { return a * h.order() + x; };
    GraphBuilder b(g.order() * h.order());
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges())
            b.add_edge(id(a, x), id(a, y));
    for (auto [a, c] : g.edges())
        for (Vertex x = 0; x < h.order(); ++x)
            b.add_edge(id(a, x), id(c, x));
    return b.build();
}

auto disjoint_union(const Graph & g, const Graph & h) -> Graph
{
    GraphBuilder b;
    b.add_graph(g);
    b.add_graph(h);
    return b.build();
}

auto relabel(const Graph & g, const std::vector<Vertex> & perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g.order())
        throw Error(ErrorKind::invalid_argument, "relabel: permutation size mismatch");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return b.build();
}

auto remove_edge(const Graph & g, Vertex u, Vertex v) -> Graph
{
    GraphBuilder b(g.order());
    for (auto e : g.edges())
        if (e != Edge{std::min(u, v), std::max(u, v)})
            b.add_edge(e.first, e.second);
    return b.build();
}

auto is_spanning_subgraph(const Graph & h, const Graph & g, const std::vector<Vertex> & mapping) -> bool
{
    if (h.order() != g.order() || static_cast<int>(mapping.size()) != h.order())
        return false;
    VertexSet image;
    for (auto m : mapping) {
        if (m < 0 || m >= g.order())
            return false;
        image.insert(m);
    }
    if (image != g.vertices())
        return false;
    for (auto [u, v] : h.edges())
        if (! g.adjacent(mapping[u], mapping[v]))
            return false;
    return true;
}

auto to_string(Hamiltonicity h) -> const char *
{
    switch (h) {
    case Hamiltonicity::cycle: return "cycle";
    case Hamiltonicity::path_only: return "path_only";
    case Hamiltonicity::none: return "none";
    }
    return "unknown";
}

auto hamiltonian(const Graph & g, int limit) -> Hamiltonicity
{
    const int n = g.order();
    if (n > limit)
        throw Error(ErrorKind::size_limit, "hamiltonian: order " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
    if (n == 0)
        return Hamiltonicity::none;

    // ends[mask] = vertices at which some Hamiltonian path of `mask` can end.
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<VertexSet> ends(full + 1);
    for (Vertex v = 0; v < n; ++v)
        ends[std::size_t{1} << v].insert(v);
    for (std::size_t mask = 1; mask <= full; ++mask)
        for (auto v : ends[mask])
            for (auto w : g.neighbors(v) - VertexSet(mask))
                ends[mask | (std::size_t{1} << w)].insert(w);

    if (n >= 3) {
        // Paths that start at vertex 0 and finish next to it close a cycle.
        std::vector<VertexSet> from0(full + 1);
        from0[1].insert(0);
        for (std::size_t mask = 1; mask <= full; mask += 2)
            for (auto v : from0[mask])
                for (auto w : g.neighbors(v) - VertexSet(mask))
                    from0[mask | (std::size_t{1} << w)].insert(w);
        if (from0[full].intersects(g.neighbors(0)))
            return Hamiltonicity::cycle;
    }
    return ends[full].empty() ? Hamiltonicity::none : Hamiltonicity::path_only;
}

auto is_bipartite(const Graph & g) -> bool
{
    std::vector<int> colour(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::deque<Vertex> queue{s};
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : g.neighbors(v)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                }
                else if (colour[w] == colour[v])
                    return false;
            }
        }
    }
    return true;
}

auto is_chordal(const Graph & g) -> bool
{
    const int n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<int> position(n, -1);
    std::vector<Vertex> order;
    VertexSet visited;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (auto v : g.vertices() - visited)
            if (best < 0 || weight[v] > weight[best])
                best = v;
        position[best] = step;
        order.push_back(best);
        visited.insert(best);
        for (auto w : g.neighbors(best) - visited)
            ++weight[w];
    }
    // The reverse of an MCS order is a perfect elimination ordering iff g is chordal.
    VertexSet before;
    for (auto v : order) {
        auto earlier = g.neighbors(v) & before;
        before.insert(v);
        if (earlier.empty())
            continue;
        Vertex latest = -1;
        for (auto w : earlier)
            if (latest < 0 || position[w] > position[latest])
                latest = w;
        earlier.erase(latest);
        if (! earlier.subset_of(g.neighbors(latest)))
            return false;
    }
    return true;
}

RootedTree::RootedTree(Graph tree, Vertex root) :
    _tree(std::move(tree)), _root(root), _parent(_tree.order(), -1), _depth(_tree.order(), 0)
{
    if (! _tree.is_tree())
        throw Error(ErrorKind::not_a_tree, "root_at: input is not a tree");
    if (root < 0 || root >= _tree.order())
        throw Error(ErrorKind::invalid_argument, "root_at: root out of range");
    std::deque<Vertex> queue{root};
    VertexSet seen{root};
    while (! queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : _tree.neighbors(v) - seen) {
            seen.insert(w);
            _parent[w] = v;
            _depth[w] = _depth[v] + 1;
            queue.push_back(w);
        }
    }
}

auto RootedTree::parent(Vertex v) const -> std::optional<Vertex>
{
    if (v == _root)
        return std::nullopt;
    return _parent[v];
}

auto RootedTree::children(Vertex v) const -> VertexSet
{
    auto out = _tree.neighbors(v);
    if (v != _root)
        out.erase(_parent[v]);
    return out;
}

auto RootedTree::descendants(Vertex v) const -> VertexSet
{
    VertexSet out;
    auto frontier = children(v);
    while (! frontier.empty()) {
        out |= frontier;
        VertexSet next;
        for (auto c : frontier)
            next |= children(c);
        frontier = next;
    }
    return out;
}

auto RootedTree::maximal_subtree(Vertex v) const -> InducedSubgraph
{
    auto keep = descendants(v);
    keep.insert(v);
    return induced_subgraph(_tree, keep);
}

auto root_at(const Graph & t, Vertex r) -> RootedTree
{
    return RootedTree(t, r);
}

}
