#include <doctest.h>

#include "oracle.hpp"
#include "tr2dom/families.hpp"
#include "tr2dom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace tr2dom;

namespace {
    auto shuffled(const Graph & g, std::mt19937_64 & rng) -> Graph
    {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return relabel(g, perm);
    }

    // Hamiltonian path/cycle by trying every vertex order.
    auto brute_hamiltonian(const Graph & g) -> Hamiltonicity
    {
        std::vector<Vertex> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        bool path = false;
        do {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < order.size(); ++i)
                ok = ok && g.adjacent(order[i], order[i + 1]);
            if (! ok)
                continue;
            if (g.order() >= 3 && g.adjacent(order.front(), order.back()))
                return Hamiltonicity::cycle;
            path = true;
        } while (std::next_permutation(order.begin(), order.end()));
        return path ? Hamiltonicity::path_only : Hamiltonicity::none;
    }

    // Chordal iff no induced cycle of length >= 4; checked over vertex subsets.
    auto brute_chordal(const Graph & g) -> bool
    {
        const int n = g.order();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSet s(mask);
            if (s.size() < 4)
                continue;
            auto sub = induced_subgraph(g, s).graph;
            bool cycle = sub.is_connected();
            for (Vertex v = 0; v < sub.order(); ++v)
                cycle = cycle && sub.degree(v) == 2;
            if (cycle)
                return false;
        }
        return true;
    }

    auto brute_bipartite(const Graph & g) -> bool
    {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
            bool ok = true;
            for (auto [u, v] : g.edges())
                ok = ok && (((mask >> u) & 1) != ((mask >> v) & 1));
            if (ok)
                return true;
        }
        return false;
    }
}

TEST_CASE("builder rejects loops and out of range edges")
{
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(0, 0), Error);
    CHECK_THROWS_AS(b.add_edge(0, 3), Error);
    CHECK_THROWS_AS(b.add_edge(-1, 1), Error);
    b.add_edge(0, 1).add_edge(1, 0);
    CHECK(b.build().edge_count() == 1);
}

TEST_CASE("adjacency is symmetric and irreflexive")
{
    for (int seed = 0; seed < 20; ++seed) {
        auto g = random_graph(12, 0.4, seed);
        int degree_sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            CHECK_FALSE(g.adjacent(v, v));
            degree_sum += g.degree(v);
            for (auto u : g.neighbors(v))
                CHECK(g.adjacent(u, v));
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("degree stats")
{
    CHECK(degree_stats(cycle_graph(4)) == DegreeStats{2, 2});
    CHECK(degree_stats(star_graph(4)) == DegreeStats{1, 3});
    CHECK(degree_stats(spider_graph()) == DegreeStats{1, 3});
    CHECK_THROWS_AS(degree_stats(Graph(0)), Error);
}

TEST_CASE("vertex classes")
{
    SUBCASE("H_3")
    {
        auto c = vertex_classes(h_graph(3));
        CHECK(c.supports == VertexSet{1, 4, 7});
        CHECK(c.strong_supports == VertexSet{1, 4, 7});
        CHECK(c.semi_supports == VertexSet{0});
        CHECK(c.leaves == VertexSet{2, 3, 5, 6, 8, 9});
        CHECK(c.strong_leaves == c.leaves);
        CHECK(c.adjacent_supports.empty());
    }
    SUBCASE("K_2")
    {
        auto c = vertex_classes(complete_graph(2));
        CHECK(c.leaves == VertexSet{0, 1});
        CHECK(c.supports == VertexSet{0, 1});
        CHECK(c.strong_supports.empty());
        CHECK(c.universal == VertexSet{0, 1});
    }
    SUBCASE("R_1")
    {
        // hub 0, b 1, a 2, c 3, d 4; the hub is a leaf when r = 1
        auto c = vertex_classes(r_graph(1));
        CHECK(c.leaves == VertexSet{0, 2, 4});
        CHECK(c.supports == VertexSet{1, 3});
        CHECK(c.strong_supports == VertexSet{1});
        CHECK(c.adjacent_supports == VertexSet{1, 3});
        CHECK(c.semi_supports == VertexSet{1, 3});
    }
    SUBCASE("R_2 hub is a semi-support")
    {
        auto c = vertex_classes(r_graph(2));
        CHECK(c.semi_supports.contains(0));
        CHECK_FALSE(c.leaves.contains(0));
    }
    SUBCASE("invariants on random graphs")
    {
        for (int seed = 0; seed < 30; ++seed) {
            auto g = random_graph(10, 0.25, seed);
            auto c = vertex_classes(g);
            CHECK(c.strong_leaves.subset_of(c.leaves));
            CHECK_FALSE(c.semi_supports.intersects(c.leaves));
            CHECK(c.adjacent_supports.subset_of(c.supports));
            CHECK(c.strong_supports.subset_of(c.supports));
        }
    }
}

TEST_CASE("distance and diameter")
{
    CHECK(distance(path_graph(5), 0, 4) == 4);
    CHECK(distance(path_graph(5), 2, 2) == 0);
    CHECK(distance(spider_graph(), 5, 7) == 6);
    CHECK(diameter(spider_graph()) == 6);
    auto split = disjoint_union(path_graph(2), path_graph(2));
    CHECK_FALSE(distance(split, 0, 2).has_value());
    CHECK_THROWS_AS(diameter(split), Error);

    for (int seed = 0; seed < 10; ++seed) {
        auto g = random_connected_graph(9, 0.3, seed);
        for (Vertex a = 0; a < 9; ++a)
            for (Vertex b = 0; b < 9; ++b)
                for (Vertex c = 0; c < 9; ++c)
                    CHECK(*distance(g, a, c) <= *distance(g, a, b) + *distance(g, b, c));
    }
}

TEST_CASE("delete vertices")
{
    auto p3 = delete_vertices(path_graph(4), {0});
    CHECK(canonical_form(p3.graph) == canonical_form(path_graph(3)));
    CHECK(p3.original_of == std::vector<Vertex>{1, 2, 3});

    auto same = delete_vertices(spider_graph(), {});
    CHECK(same.graph == spider_graph());

    auto trimmed = delete_vertices(spider_graph(), {5, 6}).graph;
    CHECK(trimmed.order() == 7);
    auto expected = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
    CHECK(canonical_form(trimmed) == canonical_form(expected));

    for (int seed = 0; seed < 20; ++seed) {
        auto g = random_graph(10, 0.4, seed);
        VertexSet s(static_cast<std::uint64_t>(seed * 37) & 0x3ff);
        auto h = delete_vertices(g, s);
        CHECK(h.graph.order() == 10 - s.size());
        int kept = 0;
        for (auto [u, v] : g.edges())
            kept += ! s.contains(u) && ! s.contains(v);
        CHECK(h.graph.edge_count() == kept);
        for (auto [u, v] : h.graph.edges())
            CHECK(g.adjacent(h.original_of[u], h.original_of[v]));
    }
}

TEST_CASE("corona and cartesian product")
{
    CHECK(canonical_form(corona(path_graph(2), empty_graph(1))) == canonical_form(path_graph(4)));
    CHECK(canonical_form(corona(Graph(1), empty_graph(1))) == canonical_form(complete_graph(2)));
    CHECK(corona(path_graph(3), empty_graph(1)).order() == 6);
    CHECK(corona(cycle_graph(4), path_graph(2)).order() == 4 * 3);

    CHECK(canonical_form(cartesian_product(path_graph(2), path_graph(2))) == canonical_form(cycle_graph(4)));
    CHECK(canonical_form(cartesian_product(Graph(1), spider_graph())) == canonical_form(spider_graph()));
    auto ladder = cartesian_product(path_graph(2), path_graph(3));
    CHECK(ladder.order() == 6);
    CHECK(ladder.edge_count() == 7);
}

TEST_CASE("spanning subgraphs")
{
    std::vector<Vertex> id{0, 1, 2, 3, 4};
    CHECK(is_spanning_subgraph(path_graph(5), cycle_graph(5), id));
    CHECK_FALSE(is_spanning_subgraph(cycle_graph(4), path_graph(4), {0, 1, 2, 3}));
    CHECK(is_spanning_subgraph(star_graph(4), complete_graph(4), {3, 1, 0, 2}));
}

TEST_CASE("hamiltonicity")
{
    CHECK(hamiltonian(cycle_graph(6)) == Hamiltonicity::cycle);
    CHECK(hamiltonian(path_graph(6)) == Hamiltonicity::path_only);
    CHECK(hamiltonian(star_graph(4)) == Hamiltonicity::none);
    CHECK(hamiltonian(path_graph(2)) == Hamiltonicity::path_only);
    CHECK_THROWS_AS(hamiltonian(path_graph(15)), Error);
    for (int seed = 0; seed < 60; ++seed) {
        auto g = random_graph(3 + seed % 6, 0.45, seed);
        CHECK(hamiltonian(g) == brute_hamiltonian(g));
    }
}

TEST_CASE("bipartite and chordal recognition")
{
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_chordal(complete_graph(5)));
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK(is_chordal(spider_graph()));
    for (int seed = 0; seed < 80; ++seed) {
        auto g = random_graph(4 + seed % 5, 0.5, seed);
        CHECK(is_bipartite(g) == brute_bipartite(g));
        CHECK(is_chordal(g) == brute_chordal(g));
    }
}

TEST_CASE("canonical form")
{
    CHECK(canonical_form(path_graph(4)) == canonical_form(Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}})));
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(4)));
    CHECK(canonical_form(path_graph(4)).starts_with("T4:"));
    CHECK(canonical_form(cycle_graph(4)).starts_with("G4:"));
    CHECK_THROWS_AS(canonical_form(cycle_graph(11)), Error);
    CHECK_NOTHROW(canonical_form(path_graph(40)));

    std::mt19937_64 rng(7);
    for (int seed = 0; seed < 100; ++seed) {
        auto g = seed % 2 ? random_graph(9, 0.4, seed) : enumerate_trees(10)[seed % 106];
        CHECK(canonical_form(shuffled(g, rng)) == canonical_form(g));
    }

    SUBCASE("distinguishes all graphs of order 5")
    {
        // 34 isomorphism classes; labeled graphs grouped by form must give 34.
        std::set<std::string> forms;
        for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
            GraphBuilder b(5);
            int bit = 0;
            for (Vertex u = 0; u < 5; ++u)
                for (Vertex v = u + 1; v < 5; ++v, ++bit)
                    if ((mask >> bit) & 1)
                        b.add_edge(u, v);
            forms.insert(canonical_form(b.build()));
        }
        CHECK(forms.size() == 34);
    }
}

TEST_CASE("rooted trees")
{
    auto rooted = root_at(path_graph(3), 0);
    CHECK_FALSE(rooted.parent(0).has_value());
    CHECK(rooted.parent(1) == 0);
    CHECK(rooted.parent(2) == 1);
    CHECK(rooted.depth(2) == 2);
    CHECK(rooted.maximal_subtree(0).graph == path_graph(3));

    auto r1 = root_at(r_graph(1), 0);
    auto sub = r1.maximal_subtree(1);
    CHECK(sub.graph.order() == 4);
    CHECK(canonical_form(sub.graph) == canonical_form(path_graph(4)));
    CHECK(r1.descendants(1) == VertexSet{2, 3, 4});
    CHECK(r1.children(1) == VertexSet{2, 3});

    CHECK_THROWS_AS(root_at(cycle_graph(4), 0), Error);
}
