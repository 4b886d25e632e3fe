#pragma once

#include "tr2dom/error.hpp"
#include "tr2dom/vertex_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tr2dom {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable once built; use GraphBuilder to assemble one.
class Graph {
public:
    static constexpr int max_order = VertexSet::capacity;

    Graph() = default;
    explicit Graph(int n);

    static auto from_edges(int n, const std::vector<Edge> & edges) -> Graph;

    auto order() const -> int { return _n; }
    auto vertices() const -> VertexSet { return VertexSet::first_n(_n); }
    auto neighbors(Vertex v) const -> VertexSet { return _adj[v]; }
    auto closed_neighbors(Vertex v) const -> VertexSet
    {
        auto s = _adj[v];
        s.insert(v);
        return s;
    }
    auto degree(Vertex v) const -> int { return _adj[v].size(); }
    auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].contains(v); }
    auto edge_count() const -> int;
    /// Edges as (u, v) with u < v, sorted.
    auto edges() const -> std::vector<Edge>;

    auto has_isolated_vertex() const -> bool;
    auto is_connected() const -> bool;
    auto is_tree() const -> bool;

    auto operator==(const Graph &) const -> bool = default;

private:
    friend class GraphBuilder;

    int _n = 0;
    std::vector<VertexSet> _adj;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0);

    auto add_vertex() -> Vertex;
    /// Appends `count` fresh vertices and returns the first index.
    auto add_vertices(int count) -> Vertex;
    auto add_edge(Vertex u, Vertex v) -> GraphBuilder &;
    /// Copies `g` in as a disjoint block; returns the offset of its vertex 0.
    auto add_graph(const Graph & g) -> Vertex;
    auto order() const -> int { return _g._n; }

    auto build() const -> Graph { return _g; }

private:
    Graph _g;
};

struct DegreeStats {
    int min_degree;
    int max_degree;

    auto operator==(const DegreeStats &) const -> bool = default;
};

auto degree_stats(const Graph & g) -> DegreeStats;

struct VertexClasses {
    VertexSet leaves;
    VertexSet supports;
    VertexSet strong_supports;
    VertexSet strong_leaves;
    VertexSet semi_supports;
    /// Support vertices adjacent to another support vertex.
    VertexSet adjacent_supports;
    VertexSet universal;
};

auto vertex_classes(const Graph & g) -> VertexClasses;

/// BFS distance, or nullopt when v is unreachable from u.
auto distance(const Graph & g, Vertex u, Vertex v) -> std::optional<int>;
/// Throws Error(precondition) on a disconnected graph.
auto diameter(const Graph & g) -> int;

struct InducedSubgraph {
    Graph graph;
    /// original_of[i] is the vertex of the source graph that became vertex i.
    std::vector<Vertex> original_of;
};

auto delete_vertices(const Graph & g, VertexSet s) -> InducedSubgraph;
auto induced_subgraph(const Graph & g, VertexSet keep) -> InducedSubgraph;

auto corona(const Graph & g, const Graph & h) -> Graph;
auto cartesian_product(const Graph & g, const Graph & h) -> Graph;
auto disjoint_union(const Graph & g, const Graph & h) -> Graph;
/// Vertex v of g becomes perm[v].
auto relabel(const Graph & g, const std::vector<Vertex> & perm) -> Graph;
auto remove_edge(const Graph & g, Vertex u, Vertex v) -> Graph;

/// True iff every edge uv of h has mapping[u] mapping[v] in g.
auto is_spanning_subgraph(const Graph & h, const Graph & g, const std::vector<Vertex> & mapping) -> bool;

enum class Hamiltonicity { cycle, path_only, none };

auto to_string(Hamiltonicity h) -> const char *;

inline constexpr int default_hamiltonian_limit = 14;

auto hamiltonian(const Graph & g, int limit = default_hamiltonian_limit) -> Hamiltonicity;

auto is_bipartite(const Graph & g) -> bool;
/// Maximum cardinality search followed by a perfect elimination ordering check.
auto is_chordal(const Graph & g) -> bool;

inline constexpr int default_canonical_limit = 10;

/// Byte string that is equal for two graphs iff they are isomorphic. Trees of
/// any order use an AHU encoding rooted at the centre(s); other graphs use
/// individualisation-refinement and are limited to `limit` vertices.
auto canonical_form(const Graph & g, int limit = default_canonical_limit) -> std::string;

class RootedTree {
public:
    RootedTree(Graph tree, Vertex root);

    auto tree() const -> const Graph & { return _tree; }
    auto root() const -> Vertex { return _root; }
    /// nullopt at the root.
    auto parent(Vertex v) const -> std::optional<Vertex>;
    auto children(Vertex v) const -> VertexSet;
    auto depth(Vertex v) const -> int { return _depth[v]; }
    auto descendants(Vertex v) const -> VertexSet;
    /// Subtree induced by v and its descendants.
    auto maximal_subtree(Vertex v) const -> InducedSubgraph;

private:
    Graph _tree;
    Vertex _root;
    std::vector<Vertex> _parent;
    std::vector<int> _depth;
};

/// Throws Error(not_a_tree) when t is not a tree.
auto root_at(const Graph & t, Vertex r) -> RootedTree;

}
