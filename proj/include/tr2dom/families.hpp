#pragma once

#include "tr2dom/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tr2dom {

auto complete_graph(int n) -> Graph;
auto empty_graph(int n) -> Graph;
/// K_{1,n-1}: vertex 0 is the centre.
auto star_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
/// S_{x,y}: adjacent centres 0 and 1 carrying x and y leaves, x >= y >= 1.
auto double_star(int x, int y) -> Graph;

/// P_5 spine 0-1-2-3-4 with leaves 5, 6 on vertex 0 and 7, 8 on vertex 4.
auto spider_graph() -> Graph;

/// Hub 0; copy i of P_3 has centre 1+3i (joined to the hub) and leaves 2+3i, 3+3i.
auto h_graph(int s) -> Graph;

/// Hub 0; copy i of P_4 is a-b-c-d with b = 1+4i joined to the hub,
/// a = 2+4i, c = 3+4i, d = 4+4i.
auto r_graph(int r) -> Graph;

/// Order n, gamma_tr2 = r, for 3 < r < n. Even r: P_{r/2} corona N_1 with
/// n-r extra leaves on base vertex 0. Odd r: P_{(r-3)/2} corona N_1 with base
/// vertex 0 joined to one leaf of K_{1,n-r+2}.
auto f_graph(int r, int n) -> Graph;

/// Reduction gadget: base vertices keep their indices; vertex i gets a
/// K_{1,4} with centre n+5i and leaves n+5i+1..n+5i+4, and i is joined to
/// leaf n+5i+1. Base must have no isolated vertex.
auto reduction_graph(const Graph & base) -> Graph;

struct ReductionLayout {
    int base_order;
    auto centre(Vertex v) const -> Vertex { return base_order + 5 * v; }
    auto attachment(Vertex v) const -> Vertex { return base_order + 5 * v + 1; }
};

/// Erdos-Renyi G(n, p) driven by a 64-bit Mersenne twister. Each pair (u, v),
/// u < v in lexicographic order, consumes one draw.
auto random_graph(int n, double p, std::uint64_t seed) -> Graph;
/// Resamples (continuing the same stream) until connected.
auto random_connected_graph(int n, double p, std::uint64_t seed) -> Graph;

/// One representative per isomorphism class of trees of order n, built by
/// leaf extension of the order n-1 classes.
inline constexpr int default_tree_enumeration_limit = 12;
auto enumerate_trees(int n, int limit = default_tree_enumeration_limit) -> std::vector<Graph>;

/// One representative per isomorphism class of graphs of order n (n <= 8),
/// optionally only the connected ones.
auto enumerate_graphs(int n, bool connected_only) -> std::vector<Graph>;

struct HWitness {
    enum class Kind { star, triple } kind;
    /// Star: {centre}. Triple: the three vertices that carry weight one.
    std::vector<Vertex> vertices;
};

/// Looks for a spanning subgraph of g in the family built from a P_3 or C_3
/// on three vertices plus an independent set each of whose members has two
/// neighbours in the triple, or a spanning star.
auto family_H_witness(const Graph & g) -> std::optional<HWitness>;

/// Parsed form of `name:p1,p2,...` family strings used by the CLI.
struct FamilySpec {
    std::string name;
    std::vector<double> params;
};

auto parse_family_spec(const std::string & text) -> FamilySpec;
/// `base` is required for the reduction family, `seed` for random.
auto build_family(const FamilySpec & spec, const std::optional<Graph> & base = std::nullopt, std::uint64_t seed = 0) -> Graph;

}
