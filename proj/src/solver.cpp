#include "tr2dom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace tr2dom {

auto to_string(ParameterKind kind) -> std::string
{
    switch (kind.parameter) {
    case Parameter::gamma: return "gamma";
    case Parameter::gamma_t: return "gamma-t";
    case Parameter::gamma_r2: return "gamma-r2";
    case Parameter::gamma_tr: return "gamma-tr";
    case Parameter::gamma_tr2: return "gamma-tr2";
    case Parameter::gamma_x2: return "gamma-x2";
    case Parameter::gamma_tr2_near: return "near:" + std::to_string(kind.near_vertex);
    }
    return "unknown";
}

auto parse_parameter(const std::string & name) -> ParameterKind
{
    for (auto p : plain_parameters)
        if (to_string(ParameterKind{p}) == name)
            return {p};
    if (name.rfind("near:", 0) == 0) {
        try {
            std::size_t used = 0;
            auto v = std::stoi(name.substr(5), &used);
            if (used == name.size() - 5 && v >= 0)
                return ParameterKind::near(v);
        }
        catch (const std::exception &) {
        }
    }
    throw Error(ErrorKind::invalid_argument, "unknown parameter '" + name + "'");
}

auto is_set_parameter(ParameterKind kind) -> bool
{
    switch (kind.parameter) {
    case Parameter::gamma:
    case Parameter::gamma_t:
    case Parameter::gamma_x2:
        return true;
    default:
        return false;
    }
}

auto requires_totality(ParameterKind kind) -> bool
{
    return kind.parameter != Parameter::gamma && kind.parameter != Parameter::gamma_r2;
}

auto satisfies(const Graph & g, ParameterKind kind, const Labeling & f) -> bool
{
    if (is_set_parameter(kind) && ! f.twos_set().empty())
        return false;
    switch (kind.parameter) {
    case Parameter::gamma: return is_DF(g, f);
    case Parameter::gamma_t: return is_TDF(g, f);
    case Parameter::gamma_r2: return is_R2DF(g, f);
    case Parameter::gamma_tr: return is_TRDF(g, f);
    case Parameter::gamma_tr2: return is_TR2DF(g, f);
    case Parameter::gamma_x2: return is_double_dominating_set(g, f.positive());
    case Parameter::gamma_tr2_near: return is_near_TR2DF(g, f, kind.near_vertex);
    }
    return false;
}

auto SolveResult::require_value() const -> int
{
    if (! value)
        throw Error(ErrorKind::infeasible, "no feasible labeling");
    return *value;
}

namespace {
    auto validate(const Graph & g, ParameterKind kind) -> void
    {
        if (kind.parameter == Parameter::gamma_tr2_near && (kind.near_vertex < 0 || kind.near_vertex >= g.order()))
            throw Error(ErrorKind::invalid_argument, "near vertex " + std::to_string(kind.near_vertex) + " not in the graph");
    }

    auto infeasible_by_isolation(const Graph & g, ParameterKind kind) -> bool
    {
        return requires_totality(kind) && g.has_isolated_vertex();
    }

    auto max_label(ParameterKind kind) -> int
    {
        return is_set_parameter(kind) ? 1 : 2;
    }

    constexpr int unassigned = -1;

    /// Depth-first search over partial labelings with a residual-demand
    /// lower bound. Every vertex x carries a demand on the weight of N[x]
    /// (or N(x) once x is labelled) and possibly a demand for one positive
    /// neighbour; unmet demands give the bound and the infeasibility cuts.
    class Engine {
    public:
        Engine(const Graph & g, ParameterKind kind) :
            _g(g), _kind(kind), _n(g.order()), _max(max_label(kind)),
            _val(_n, unassigned), _sum(_n, 0), _pos(_n, 0), _two(_n, 0), _free(g.vertices())
        {
            _total = requires_totality(kind);
        }

        auto assign(Vertex v, int a) -> void
        {
            _val[v] = a;
            _free.erase(v);
            _weight += a;
            if (a > 0)
                for (auto w : _g.neighbors(v)) {
                    _sum[w] += a;
                    ++_pos[w];
                    if (a == 2)
                        ++_two[w];
                }
        }

        auto unassign(Vertex v) -> void
        {
            auto a = _val[v];
            _val[v] = unassigned;
            _free.insert(v);
            _weight -= a;
            if (a > 0)
                for (auto w : _g.neighbors(v)) {
                    _sum[w] -= a;
                    --_pos[w];
                    if (a == 2)
                        --_two[w];
                }
        }

        auto weight() const -> int { return _weight; }
        auto free() const -> VertexSet { return _free; }

        auto labeling() const -> Labeling
        {
            std::vector<std::uint8_t> values(_n);
            for (Vertex v = 0; v < _n; ++v)
                values[v] = static_cast<std::uint8_t>(_val[v] < 0 ? 0 : _val[v]);
            return Labeling(std::move(values));
        }

        /// False when no completion is feasible; otherwise `lb` receives a
        /// lower bound on the weight still to be placed on free vertices.
        auto bound(int & lb) const -> bool
        {
            int residual_total = 0;
            VertexSet need1, need2, need_positive;
            for (Vertex x = 0; x < _n; ++x) {
                const bool is_free = _val[x] == unassigned;
                const int a = _val[x];
                const int s = _sum[x];
                const bool has_pos = _pos[x] > 0;
                const bool near_here = _kind.parameter == Parameter::gamma_tr2_near && x == _kind.near_vertex;
                int r = 0;
                bool needs_two = false;

                switch (_kind.parameter) {
                case Parameter::gamma:
                    r = is_free ? (s >= 1 ? 0 : 1) : (a == 0 && ! has_pos ? 1 : 0);
                    break;
                case Parameter::gamma_t:
                    r = has_pos ? 0 : 1;
                    break;
                case Parameter::gamma_r2:
                    r = is_free ? (s >= 1 ? 0 : 1) : (a == 0 ? std::max(0, 2 - s) : 0);
                    break;
                case Parameter::gamma_tr:
                    if (is_free)
                        r = std::max(0, 2 - s);
                    else if (a == 0) {
                        needs_two = _two[x] == 0;
                        r = needs_two ? 2 : 0;
                    }
                    else
                        r = has_pos ? 0 : 1;
                    break;
                case Parameter::gamma_tr2:
                case Parameter::gamma_x2:
                case Parameter::gamma_tr2_near: {
                    const int demand = near_here ? 1 : 2;
                    if (is_free)
                        r = std::max(0, demand - s);
                    else if (a == 0)
                        r = std::max(0, demand - s);
                    else
                        r = has_pos ? 0 : 1;
                    break;
                }
                }

                const bool wants_positive = ! has_pos && (_total || (! is_free && a == 0));
                const auto free_open = _g.neighbors(x) & _free;
                if (wants_positive && free_open.empty())
                    return false;
                if (needs_two && (free_open.empty() || _max < 2))
                    return false;
                const int room = _max * (is_free ? free_open.size() + 1 : free_open.size());
                if (r > room)
                    return false;

                residual_total += r;
                if (r >= 1)
                    need1.insert(x);
                if (r >= 2)
                    need2.insert(x);
                if (wants_positive)
                    need_positive.insert(x);
            }

            // Each unit of weight on a free vertex u lowers the total residual
            // by at most the number of demanding vertices in N[u].
            int by_weight = 0;
            if (residual_total > 0) {
                std::vector<int> histogram(_n + 2, 0);
                for (auto u : _free) {
                    auto reach = _g.closed_neighbors(u);
                    ++histogram[(reach & need1).size()];
                    if (_max == 2)
                        ++histogram[(reach & need2).size()];
                }
                int covered = 0;
                for (int c = _n + 1; c > 0 && covered < residual_total; --c)
                    for (int k = 0; k < histogram[c] && covered < residual_total; ++k) {
                        covered += c;
                        ++by_weight;
                    }
                if (covered < residual_total)
                    return false;
            }

            int by_positive = 0;
            if (! need_positive.empty()) {
                std::vector<int> histogram(_n + 2, 0);
                for (auto u : _free)
                    ++histogram[(_g.neighbors(u) & need_positive).size()];
                int covered = 0;
                const int wanted = need_positive.size();
                for (int c = _n; c > 0 && covered < wanted; --c)
                    for (int k = 0; k < histogram[c] && covered < wanted; ++k) {
                        covered += c;
                        ++by_positive;
                    }
                if (covered < wanted)
                    return false;
            }

            lb = std::max(by_weight, by_positive);
            return true;
        }

        auto max_value() const -> int { return _max; }

    private:
        const Graph & _g;
        ParameterKind _kind;
        int _n;
        int _max;
        bool _total = false;
        std::vector<int> _val, _sum, _pos, _two;
        VertexSet _free;
        int _weight = 0;
    };

    auto degree_order(const Graph & g, VertexSet among) -> std::vector<Vertex>
    {
        auto order = among.to_vector();
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    /// Minimisation: finds a labeling of weight < incumbent if one exists.
    class Minimiser {
    public:
        Minimiser(Engine engine, std::vector<Vertex> order, std::atomic<int> & incumbent) :
            _engine(std::move(engine)), _order(std::move(order)), _incumbent(incumbent)
        {
        }

        auto run(std::size_t depth) -> void
        {
            ++_nodes;
            int lb = 0;
            if (! _engine.bound(lb))
                return;
            if (_engine.weight() + lb >= _incumbent.load(std::memory_order_relaxed))
                return;
            if (depth == _order.size()) {
                auto w = _engine.weight();
                auto current = _incumbent.load();
                while (w < current && ! _incumbent.compare_exchange_weak(current, w)) {
                }
                if (w < current) {
                    _best = _engine.labeling();
                    _best_weight = w;
                }
                return;
            }
            auto v = _order[depth];
            for (int a = 0; a <= _engine.max_value(); ++a) {
                _engine.assign(v, a);
                run(depth + 1);
                _engine.unassign(v);
            }
        }

        auto engine() -> Engine & { return _engine; }
        auto nodes() const -> std::uint64_t { return _nodes; }
        auto best() const -> const std::optional<Labeling> & { return _best; }
        auto best_weight() const -> int { return _best_weight; }

    private:
        Engine _engine;
        std::vector<Vertex> _order;
        std::atomic<int> & _incumbent;
        std::optional<Labeling> _best;
        int _best_weight = 0;
        std::uint64_t _nodes = 0;
    };

    /// Decision: some completion of weight <= budget exists.
    class Decider {
    public:
        Decider(Engine & engine, std::vector<Vertex> order, int budget) :
            _engine(engine), _order(std::move(order)), _budget(budget)
        {
        }

        auto run(std::size_t depth) -> bool
        {
            ++_nodes;
            int lb = 0;
            if (! _engine.bound(lb) || _engine.weight() + lb > _budget)
                return false;
            if (depth == _order.size()) {
                _found = _engine.labeling();
                return true;
            }
            auto v = _order[depth];
            for (int a = 0; a <= _engine.max_value(); ++a) {
                _engine.assign(v, a);
                bool ok = run(depth + 1);
                _engine.unassign(v);
                if (ok)
                    return true;
            }
            return false;
        }

        auto found() const -> const std::optional<Labeling> & { return _found; }
        auto nodes() const -> std::uint64_t { return _nodes; }

    private:
        Engine & _engine;
        std::vector<Vertex> _order;
        int _budget;
        std::optional<Labeling> _found;
        std::uint64_t _nodes = 0;
    };

    /// All-ones, then greedily zero vertices (lowest degree first) while the
    /// predicate still holds.
    auto greedy_start(const Graph & g, ParameterKind kind) -> Labeling
    {
        auto f = Labeling::ones(g.order());
        auto order = degree_order(g, g.vertices());
        std::reverse(order.begin(), order.end());
        for (auto v : order) {
            auto trial = f.with(v, 0);
            if (satisfies(g, kind, trial))
                f = std::move(trial);
        }
        return f;
    }

    auto lexicographic_witness(const Graph & g, ParameterKind kind, int value, Labeling witness, std::uint64_t & nodes) -> Labeling
    {
        const int n = g.order();
        std::vector<int> prefix;
        for (Vertex i = 0; i < n; ++i) {
            int chosen = witness[i];
            for (int a = 0; a < witness[i]; ++a) {
                Engine engine(g, kind);
                for (Vertex j = 0; j < i; ++j)
                    engine.assign(j, prefix[j]);
                engine.assign(i, a);
                Decider decider(engine, degree_order(g, engine.free()), value);
                bool ok = decider.run(0);
                nodes += decider.nodes();
                if (ok) {
                    chosen = a;
                    witness = *decider.found();
                    break;
                }
            }
            prefix.push_back(chosen);
        }
        return witness;
    }

    auto branch_and_bound(const Graph & g, ParameterKind kind, const SolverOptions & options) -> SolveResult
    {
        SolveResult result;
        auto start = greedy_start(g, kind);
        std::atomic<int> incumbent{start.weight()};
        auto order = degree_order(g, g.vertices());

        std::optional<Labeling> best;
        int best_weight = start.weight();
        std::uint64_t nodes = 0;

        if (options.threads <= 1 || order.empty()) {
            Minimiser m(Engine(g, kind), order, incumbent);
            m.run(0);
            nodes = m.nodes();
            if (m.best()) {
                best = m.best();
                best_weight = m.best_weight();
            }
        }
        else {
            // Split on the first branching vertex; the shared incumbent only
            // affects pruning, never the optimum that is found.
            const int branches = max_label(kind) + 1;
            std::atomic<int> next{0};
            std::mutex merge;
            auto worker = [&] {
                for (int a = next++; a < branches; a = next++) {
                    Engine engine(g, kind);
                    engine.assign(order[0], a);
                    Minimiser m(std::move(engine), order, incumbent);
                    m.run(1);
                    std::lock_guard lock(merge);
                    nodes += m.nodes();
                    if (m.best() && m.best_weight() < best_weight) {
                        best = m.best();
                        best_weight = m.best_weight();
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < std::min(options.threads, branches); ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }

        result.value = best_weight;
        auto seed = best ? *best : start;
        result.witness = lexicographic_witness(g, kind, best_weight, seed, nodes);
        result.nodes_explored = nodes;
        return result;
    }

    auto enumeration(const Graph & g, ParameterKind kind) -> SolveResult
    {
        SolveResult result;
        const int n = g.order();
        const auto top = static_cast<std::uint8_t>(max_label(kind));
        std::vector<std::uint8_t> values(n, 0);
        while (true) {
            ++result.nodes_explored;
            Labeling f(values);
            if (satisfies(g, kind, f) && (! result.value || f.weight() < *result.value)) {
                result.value = f.weight();
                result.witness = f;
            }
            int i = n - 1;
            while (i >= 0 && values[i] == top)
                values[i--] = 0;
            if (i < 0)
                break;
            ++values[i];
        }
        return result;
    }
}

auto exact(const Graph & g, ParameterKind kind, const SolverOptions & options) -> SolveResult
{
    validate(g, kind);
    const int limit = options.method == Method::enumeration ? options.enumeration_limit : options.limit;
    if (g.order() > limit)
        throw Error(ErrorKind::size_limit, "order " + std::to_string(g.order()) + " exceeds solver limit " + std::to_string(limit));
    if (infeasible_by_isolation(g, kind))
        return {};

    auto result = options.method == Method::enumeration ? enumeration(g, kind) : branch_and_bound(g, kind, options);

    if (result.witness && (! satisfies(g, kind, *result.witness) || result.witness->weight() != *result.value))
        throw Error(ErrorKind::precondition, "internal: solver witness failed self-check for " + to_string(kind));
    return result;
}

auto exact_value(const Graph & g, ParameterKind kind, const SolverOptions & options) -> int
{
    return exact(g, kind, options).require_value();
}

namespace {
    auto local_ok(const Graph & g, ParameterKind kind, const std::vector<int> & val, Vertex x) -> bool
    {
        int s = 0;
        bool pos = false, two = false;
        for (auto w : g.neighbors(x)) {
            s += val[w];
            pos = pos || val[w] > 0;
            two = two || val[w] == 2;
        }
        const int a = val[x];
        switch (kind.parameter) {
        case Parameter::gamma: return a > 0 || pos;
        case Parameter::gamma_t: return pos;
        case Parameter::gamma_r2: return a > 0 || s >= 2;
        case Parameter::gamma_tr: return a == 0 ? two : pos;
        case Parameter::gamma_tr2:
        case Parameter::gamma_x2: return a == 0 ? s >= 2 : pos;
        case Parameter::gamma_tr2_near:
            return a == 0 ? s >= (x == kind.near_vertex ? 1 : 2) : pos;
        }
        return false;
    }

    class OptimaCollector {
    public:
        OptimaCollector(const Graph & g, ParameterKind kind, int target) :
            _g(g), _kind(kind), _target(target), _top(max_label(kind)), _val(g.order(), 0), _closes_at(g.order())
        {
            for (Vertex x = 0; x < g.order(); ++x) {
                auto last = x;
                for (auto w : g.neighbors(x))
                    last = std::max(last, w);
                _closes_at[last].insert(x);
            }
        }

        auto run(Vertex i, int weight) -> void
        {
            if (i == _g.order()) {
                if (weight != _target)
                    return;
                Labeling f(std::vector<std::uint8_t>(_val.begin(), _val.end()));
                if (satisfies(_g, _kind, f))
                    _out.push_back(std::move(f));
                return;
            }
            for (int a = 0; a <= _top && weight + a <= _target; ++a) {
                _val[i] = a;
                bool ok = true;
                for (auto x : _closes_at[i])
                    if (! local_ok(_g, _kind, _val, x)) {
                        ok = false;
                        break;
                    }
                if (ok)
                    run(i + 1, weight + a);
            }
            _val[i] = 0;
        }

        auto take() -> std::vector<Labeling> { return std::move(_out); }

    private:
        const Graph & _g;
        ParameterKind _kind;
        int _target;
        int _top;
        std::vector<int> _val;
        std::vector<VertexSet> _closes_at;
        std::vector<Labeling> _out;
    };
}

auto all_optimal(const Graph & g, ParameterKind kind, const SolverOptions & options) -> std::vector<Labeling>
{
    validate(g, kind);
    if (g.order() > options.enumeration_limit)
        throw Error(ErrorKind::size_limit, "all_optimal: order " + std::to_string(g.order()) + " exceeds limit " + std::to_string(options.enumeration_limit));
    auto target = exact_value(g, kind, options);
    OptimaCollector collector(g, kind, target);
    collector.run(0, 0);
    return collector.take();
}

auto closed_form(ParameterKind kind, ClosedFamily family, int n) -> int
{
    if (kind.parameter != Parameter::gamma_tr2 && kind.parameter != Parameter::gamma_x2)
        throw Error(ErrorKind::invalid_argument, "closed forms exist only for gamma-tr2 and gamma-x2");
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    switch (family) {
    case ClosedFamily::path:
        if (n < 2)
            throw Error(ErrorKind::invalid_argument, "path closed form needs n >= 2");
        return 2 * ceil_div(n, 3) + (n % 3 == 0 ? 1 : 0);
    case ClosedFamily::cycle:
        if (n < 3)
            throw Error(ErrorKind::invalid_argument, "cycle closed form needs n >= 3");
        return ceil_div(2 * n, 3);
    }
    return 0;
}

auto special_vertex_sets(const Graph & g, const SolverOptions & options) -> SpecialVertexSets
{
    auto classes = vertex_classes(g);
    SpecialVertexSets out;
    for (auto & f : all_optimal(g, {Parameter::gamma_tr}, options)) {
        out.supports_two_in_some_tr |= classes.supports & f.twos_set();
        out.leaves_one_in_some_tr |= classes.leaves & f.ones_set();
    }
    out.supports_one_in_all_tr2 = classes.supports;
    out.zero_in_all_tr2 = g.vertices();
    for (auto & f : all_optimal(g, {Parameter::gamma_tr2}, options)) {
        out.supports_one_in_all_tr2 &= f.ones_set();
        out.zero_in_all_tr2 &= f.zeros_set();
    }
    return out;
}

auto near_stable_vertices(const Graph & g, const SolverOptions & options) -> VertexSet
{
    auto target = exact_value(g, {Parameter::gamma_tr2}, options);
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (exact_value(g, ParameterKind::near(v), options) == target)
            out.insert(v);
    return out;
}

}
