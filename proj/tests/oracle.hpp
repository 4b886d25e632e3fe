#pragma once

// Brute-force reference implementations for tests. Deliberately written
// against adjacency lists and plain loops, sharing no code with the library
// predicates or solvers.

#include "tr2dom/graph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Adj = std::vector<std::vector<int>>;
using Values = std::vector<int>;

inline auto adjacency(const tr2dom::Graph & g) -> Adj
{
    Adj adj(g.order());
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline auto nsum(const Adj & adj, const Values & f, int v) -> int
{
    int s = 0;
    for (int u : adj[v])
        s += f[u];
    return s;
}

inline auto has_positive_nbr(const Adj & adj, const Values & f, int v) -> bool
{
    for (int u : adj[v])
        if (f[u] > 0)
            return true;
    return false;
}

inline auto has_two_nbr(const Adj & adj, const Values & f, int v) -> bool
{
    for (int u : adj[v])
        if (f[u] == 2)
            return true;
    return false;
}

enum class Kind { gamma, gamma_t, gamma_r2, gamma_tr, gamma_tr2, gamma_x2, near };

inline auto max_value(Kind k) -> int
{
    return k == Kind::gamma || k == Kind::gamma_t || k == Kind::gamma_x2 ? 1 : 2;
}

/// `near` is the relaxed vertex for Kind::near.
inline auto ok(const Adj & adj, const Values & f, Kind k, int near = -1) -> bool
{
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        switch (k) {
        case Kind::gamma:
            if (f[v] == 0 && ! has_positive_nbr(adj, f, v))
                return false;
            break;
        case Kind::gamma_t:
            if (! has_positive_nbr(adj, f, v))
                return false;
            break;
        case Kind::gamma_r2:
            if (f[v] == 0 && nsum(adj, f, v) < 2)
                return false;
            break;
        case Kind::gamma_tr:
            if (! has_positive_nbr(adj, f, v))
                return false;
            if (f[v] == 0 && ! has_two_nbr(adj, f, v))
                return false;
            break;
        case Kind::gamma_tr2:
            if (f[v] == 0 && nsum(adj, f, v) < 2)
                return false;
            if (f[v] > 0 && ! has_positive_nbr(adj, f, v))
                return false;
            break;
        case Kind::gamma_x2: {
            int closed = f[v];
            for (int u : adj[v])
                closed += f[u];
            if (closed < 2)
                return false;
            break;
        }
        case Kind::near:
            if (f[v] == 0 && nsum(adj, f, v) < (v == near ? 1 : 2))
                return false;
            if (f[v] > 0 && ! has_positive_nbr(adj, f, v))
                return false;
            break;
        }
    }
    return true;
}

/// Calls visit(f) for every labeling with values in [0, max]^n.
inline auto for_each_labeling(int n, int max, const std::function<void(const Values &)> & visit) -> void
{
    Values f(n, 0);
    while (true) {
        visit(f);
        int i = 0;
        while (i < n && f[i] == max)
            f[i++] = 0;
        if (i == n)
            return;
        ++f[i];
    }
}

inline auto weight(const Values & f) -> int
{
    int w = 0;
    for (int x : f)
        w += x;
    return w;
}

struct Optimum {
    int value;
    /// Every optimal labeling in lexicographic order.
    std::vector<Values> optima;
};

inline auto solve(const tr2dom::Graph & g, Kind k, int near = -1) -> std::optional<Optimum>
{
    auto adj = adjacency(g);
    std::optional<Optimum> best;
    for_each_labeling(g.order(), max_value(k), [&](const Values & f) {
        if (! ok(adj, f, k, near))
            return;
        auto w = weight(f);
        if (! best || w < best->value)
            best = Optimum{w, {f}};
        else if (w == best->value)
            best->optima.push_back(f);
    });
    if (best) {
        std::sort(best->optima.begin(), best->optima.end());
    }
    return best;
}

inline auto value(const tr2dom::Graph & g, Kind k, int near = -1) -> std::optional<int>
{
    auto r = solve(g, k, near);
    return r ? std::optional<int>(r->value) : std::nullopt;
}

/// Labeled trees on n vertices from Pruefer sequences, n >= 2.
inline auto pruefer_trees(int n, const std::function<void(const tr2dom::Graph &)> & visit) -> void
{
    if (n == 2) {
        visit(tr2dom::Graph::from_edges(2, {{0, 1}}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        std::vector<int> degree(n, 1);
        for (int x : seq)
            ++degree[x];
        std::vector<tr2dom::Edge> edges;
        for (int x : seq)
            for (int leaf = 0; leaf < n; ++leaf)
                if (degree[leaf] == 1) {
                    edges.push_back({leaf, x});
                    --degree[leaf];
                    --degree[x];
                    break;
                }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1)
                (a < 0 ? a : b) = v;
        edges.push_back({a, b});
        visit(tr2dom::Graph::from_edges(n, edges));

        int i = 0;
        while (i < n - 2 && seq[i] == n - 1)
            seq[i++] = 0;
        if (i == n - 2)
            return;
        ++seq[i];
    }
}

}
