#include "tr2dom/families.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace tr2dom {

namespace {
    auto require(bool condition, const std::string & message) -> void
    {
        if (! condition)
            throw Error(ErrorKind::invalid_argument, message);
    }
}

auto complete_graph(int n) -> Graph
{
    require(n >= 0, "K_n needs n >= 0");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

auto empty_graph(int n) -> Graph
{
    require(n >= 0, "N_n needs n >= 0");
    return Graph(n);
}

auto star_graph(int n) -> Graph
{
    require(n >= 1, "K_{1,n-1} needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.add_edge(0, v);
    return b.build();
}

auto path_graph(int n) -> Graph
{
    require(n >= 1, "P_n needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

auto cycle_graph(int n) -> Graph
{
    require(n >= 3, "C_n needs n >= 3");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

auto double_star(int x, int y) -> Graph
{
    require(x >= y && y >= 1, "S_{x,y} needs x >= y >= 1");
    GraphBuilder b(2);
    b.add_edge(0, 1);
    for (int i = 0; i < x; ++i)
        b.add_edge(0, b.add_vertex());
    for (int i = 0; i < y; ++i)
        b.add_edge(1, b.add_vertex());
    return b.build();
}

auto spider_graph() -> Graph
{
    return Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 6}, {4, 7}, {4, 8}});
}

auto h_graph(int s) -> Graph
{
    require(s >= 1, "H_s needs s >= 1");
    GraphBuilder b(1);
    for (int i = 0; i < s; ++i) {
        auto centre = b.add_vertices(3);
        b.add_edge(0, centre).add_edge(centre, centre + 1).add_edge(centre, centre + 2);
    }
    return b.build();
}

auto r_graph(int r) -> Graph
{
    require(r >= 1, "R_r needs r >= 1");
    GraphBuilder b(1);
    for (int i = 0; i < r; ++i) {
        auto sb = b.add_vertices(4);
        auto a = sb + 1, c = sb + 2, d = sb + 3;
        b.add_edge(0, sb).add_edge(sb, a).add_edge(sb, c).add_edge(c, d);
    }
    return b.build();
}

auto f_graph(int r, int n) -> Graph
{
    require(3 < r && r < n, "F_{r,n} needs 3 < r < n");
    if (r % 2 == 0) {
        GraphBuilder b;
        b.add_graph(corona(path_graph(r / 2), empty_graph(1)));
        for (int i = 0; i < n - r; ++i)
            b.add_edge(0, b.add_vertex());
        return b.build();
    }
    GraphBuilder b;
    b.add_graph(corona(path_graph((r - 3) / 2), empty_graph(1)));
    auto centre = b.add_graph(star_graph(n - r + 3));
    b.add_edge(0, centre + 1);
    return b.build();
}

auto reduction_graph(const Graph & base) -> Graph
{
    require(! base.has_isolated_vertex(), "reduction base graph must have no isolated vertex");
    GraphBuilder b;
    b.add_graph(base);
    for (Vertex v = 0; v < base.order(); ++v) {
        auto centre = b.add_graph(star_graph(5));
        b.add_edge(v, centre + 1);
    }
    return b.build();
}

auto random_graph(int n, double p, std::uint64_t seed) -> Graph
{
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    std::mt19937_64 engine(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            auto draw = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            if (draw < p)
                b.add_edge(u, v);
        }
    return b.build();
}

auto random_connected_graph(int n, double p, std::uint64_t seed) -> Graph
{
    require(n >= 1 && (p > 0.0 || n == 1), "random connected graph needs n >= 1 and p > 0");
    std::mt19937_64 engine(seed);
    while (true) {
        auto g = random_graph(n, p, engine());
        if (g.is_connected())
            return g;
    }
}

auto enumerate_trees(int n, int limit) -> std::vector<Graph>
{
    if (n < 1 || n > limit)
        throw Error(ErrorKind::size_limit, "enumerate_trees: order " + std::to_string(n) + " outside 1.." + std::to_string(limit));
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (auto & t : level)
            for (Vertex v = 0; v < t.order(); ++v) {
                GraphBuilder b;
                b.add_graph(t);
                b.add_edge(v, b.add_vertex());
                auto grown = b.build();
                if (seen.insert(canonical_form(grown)).second)
                    next.push_back(std::move(grown));
            }
        level = std::move(next);
    }
    return level;
}

auto enumerate_graphs(int n, bool connected_only) -> std::vector<Graph>
{
    constexpr int limit = 8;
    if (n < 0 || n > limit)
        throw Error(ErrorKind::size_limit, "enumerate_graphs: order " + std::to_string(n) + " outside 0.." + std::to_string(limit));
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (auto & g : level)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
                GraphBuilder b;
                b.add_graph(g);
                auto v = b.add_vertex();
                for (auto w : VertexSet(mask))
                    b.add_edge(v, w);
                auto grown = b.build();
                if (seen.insert(canonical_form(grown)).second)
                    next.push_back(std::move(grown));
            }
        level = std::move(next);
    }
    if (connected_only)
        std::erase_if(level, [](const Graph & g) { return ! g.is_connected(); });
    return level;
}

auto family_H_witness(const Graph & g) -> std::optional<HWitness>
{
    const int n = g.order();
    if (n < 3)
        return std::nullopt;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            return HWitness{HWitness::Kind::star, {v}};
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                int inner = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
                if (inner < 2)
                    continue;
                VertexSet triple{a, b, c};
                bool ok = true;
                for (auto x : g.vertices() - triple)
                    if ((g.neighbors(x) & triple).size() < 2) {
                        ok = false;
                        break;
                    }
                if (ok)
                    return HWitness{HWitness::Kind::triple, {a, b, c}};
            }
    return std::nullopt;
}

auto parse_family_spec(const std::string & text) -> FamilySpec
{
    FamilySpec spec;
    auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (spec.name.empty())
        throw Error(ErrorKind::parse, "empty family name");
    if (colon == std::string::npos)
        return spec;
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        try {
            std::size_t used = 0;
            spec.params.push_back(std::stod(item, &used));
            if (used != item.size())
                throw Error(ErrorKind::parse, "");
        }
        catch (const std::exception &) {
            throw Error(ErrorKind::parse, "bad family parameter '" + item + "' in '" + text + "'");
        }
    }
    return spec;
}

auto build_family(const FamilySpec & spec, const std::optional<Graph> & base, std::uint64_t seed) -> Graph
{
    auto count = [&](std::size_t k) {
        if (spec.params.size() != k)
            throw Error(ErrorKind::invalid_argument, "family '" + spec.name + "' takes " + std::to_string(k) + " parameter(s)");
    };
    auto integer = [&](std::size_t i) {
        auto x = spec.params[i];
        if (x != std::floor(x) || x < -1e6 || x > 1e6)
            throw Error(ErrorKind::invalid_argument, "family '" + spec.name + "' needs integer parameters");
        return static_cast<int>(x);
    };

    const auto & name = spec.name;
    if (name == "complete") { count(1); return complete_graph(integer(0)); }
    if (name == "empty") { count(1); return empty_graph(integer(0)); }
    if (name == "star") { count(1); return star_graph(integer(0)); }
    if (name == "path") { count(1); return path_graph(integer(0)); }
    if (name == "cycle") { count(1); return cycle_graph(integer(0)); }
    if (name == "double-star") { count(2); return double_star(integer(0), integer(1)); }
    if (name == "spider") { count(0); return spider_graph(); }
    if (name == "hs") { count(1); return h_graph(integer(0)); }
    if (name == "rr") { count(1); return r_graph(integer(0)); }
    if (name == "frn") { count(2); return f_graph(integer(0), integer(1)); }
    if (name == "grid") {
        count(2);
        return cartesian_product(path_graph(integer(0)), path_graph(integer(1)));
    }
    if (name == "corona") {
        count(1);
        return corona(path_graph(integer(0)), empty_graph(1));
    }
    if (name == "random") {
        count(2);
        return random_graph(integer(0), spec.params[1], seed);
    }
    if (name == "reduction") {
        count(0);
        if (! base)
            throw Error(ErrorKind::invalid_argument, "reduction family needs a base graph");
        return reduction_graph(*base);
    }
    throw Error(ErrorKind::invalid_argument, "unknown family '" + name + "'");
}

}
