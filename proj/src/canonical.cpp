#include "tr2dom/graph.hpp"

#include <algorithm>
#include <map>

namespace tr2dom {

namespace {
    auto tree_centres(const Graph & t) -> std::vector<Vertex>
    {
        auto remaining = t.vertices();
        std::vector<int> deg(t.order());
        for (Vertex v = 0; v < t.order(); ++v)
            deg[v] = t.degree(v);
        while (remaining.size() > 2) {
            VertexSet layer;
            for (auto v : remaining)
                if (deg[v] <= 1)
                    layer.insert(v);
            for (auto v : layer)
                for (auto w : t.neighbors(v) & remaining)
                    --deg[w];
            remaining = remaining - layer;
        }
        return remaining.to_vector();
    }

    auto ahu(const Graph & t, Vertex v, Vertex parent) -> std::string
    {
        std::vector<std::string> parts;
        for (auto c : t.neighbors(v))
            if (c != parent)
                parts.push_back(ahu(t, c, v));
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        for (auto & p : parts)
            out += p;
        out += ")";
        return out;
    }

    auto tree_form(const Graph & t) -> std::string
    {
        std::string best;
        for (auto c : tree_centres(t)) {
            auto enc = ahu(t, c, -1);
            if (best.empty() || enc < best)
                best = std::move(enc);
        }
        return "T" + std::to_string(t.order()) + ":" + best;
    }

    using Colouring = std::vector<int>;

    // Replaces each colour by the rank of (colour, neighbour counts per
    // colour) until stable. Depends only on structure, so it commutes with
    // relabelling.
    auto refine(const Graph & g, Colouring colour) -> Colouring
    {
        const int n = g.order();
        int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
        while (true) {
            std::vector<std::vector<int>> key(n);
            for (Vertex v = 0; v < n; ++v) {
                key[v].assign(classes + 1, 0);
                key[v][0] = colour[v];
                for (auto w : g.neighbors(v))
                    ++key[v][colour[w] + 1];
            }
            std::map<std::vector<int>, int> rank;
            for (auto & k : key)
                rank.emplace(k, 0);
            int r = 0;
            for (auto & [k, value] : rank)
                value = r++;
            Colouring next(n);
            for (Vertex v = 0; v < n; ++v)
                next[v] = rank[key[v]];
            if (r == classes)
                return next;
            classes = r;
            colour = std::move(next);
        }
    }

    auto adjacency_string(const Graph & g, const Colouring & position) -> std::string
    {
        const int n = g.order();
        std::vector<Vertex> at(n);
        for (Vertex v = 0; v < n; ++v)
            at[position[v]] = v;
        std::string bits;
        bits.reserve(n * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
        return bits;
    }

    auto search(const Graph & g, const Colouring & colour) -> std::string
    {
        const int n = g.order();
        std::vector<int> cell_size(n, 0);
        for (auto c : colour)
            ++cell_size[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (cell_size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0)
            return adjacency_string(g, colour);

        std::string best;
        bool have = false;
        for (Vertex v = 0; v < n; ++v) {
            if (colour[v] != target)
                continue;
            // Individualise v: it sorts before the rest of its cell.
            Colouring split(n);
            for (Vertex w = 0; w < n; ++w)
                split[w] = 2 * colour[w] + ((colour[w] == target && w != v) ? 1 : 0);
            auto candidate = search(g, refine(g, split));
            if (! have || candidate < best) {
                best = std::move(candidate);
                have = true;
            }
        }
        return best;
    }

    auto general_form(const Graph & g) -> std::string
    {
        auto start = refine(g, Colouring(g.order(), 0));
        return "G" + std::to_string(g.order()) + ":" + search(g, start);
    }
}

auto canonical_form(const Graph & g, int limit) -> std::string
{
    if (g.is_tree())
        return tree_form(g);
    if (g.order() > limit)
        throw Error(ErrorKind::size_limit, "canonical_form: non-tree of order " + std::to_string(g.order()) + " exceeds limit " + std::to_string(limit));
    return general_form(g);
}

}
