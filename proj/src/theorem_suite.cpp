#include "tr2dom/theorem_suite.hpp"

#include "tr2dom/families.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tr2dom {

namespace {
    struct CheckInfo {
        CheckId id;
        const char * name;
    };

    constexpr CheckInfo check_table[] = {
        {CheckId::chain_i, "CHAIN_I"},
        {CheckId::chain_ii, "CHAIN_II"},
        {CheckId::equiv_t, "EQUIV_T"},
        {CheckId::sum_tg, "SUM_TG"},
        {CheckId::three_g, "THREE_G"},
        {CheckId::two_gt_equiv, "TWO_GT_EQUIV"},
        {CheckId::tr2g_lower, "TR2G_LOWER"},
        {CheckId::sum_r2g, "SUM_R2G"},
        {CheckId::half_n, "HALF_N"},
        {CheckId::three_quarter, "THREE_QUARTER"},
        {CheckId::hamilton, "HAMILTON"},
        {CheckId::eq2, "EQ2"},
        {CheckId::eq3, "EQ3"},
        {CheckId::eqn, "EQN"},
        {CheckId::vo1_equiv, "VO1_EQUIV"},
        {CheckId::reduction_id, "REDUCTION_ID"},
        {CheckId::private_nbr, "PRIVATE_NBR"},
        {CheckId::obs_adj_supports, "OBS_ADJ_SUPPORTS"},
        {CheckId::obs_strong_support, "OBS_STRONG_SUPPORT"},
        {CheckId::obs_three_leaves, "OBS_THREE_LEAVES"},
    };

    auto key(Parameter p) -> std::string
    {
        auto s = to_string(ParameterKind{p});
        std::replace(s.begin(), s.end(), '-', '_');
        return s;
    }

    auto str(bool b) -> std::string { return b ? "true" : "false"; }

    auto set_string(VertexSet s) -> std::string
    {
        std::string out = "{";
        for (auto v : s) {
            if (out.size() > 1)
                out += ",";
            out += std::to_string(v);
        }
        return out + "}";
    }

    auto ceil_div(int a, int b) -> int { return (a + b - 1) / b; }

    class Builder {
    public:
        Builder(Profile & p, CheckId id) : _p(p) { _v.check_id = check_name(id); }

        auto vacuous(const std::string & why) -> Verdict
        {
            _v.applicable = false;
            _v.holds = true;
            _v.detail = why;
            return std::move(_v);
        }

        auto val(Parameter p) -> int
        {
            auto x = _p.value(p);
            _v.values[key(p)] = x;
            return x;
        }

        auto note(const std::string & name, int x) -> int
        {
            _v.values[name] = x;
            return x;
        }

        auto done(bool holds, std::string lhs, std::string rhs, std::optional<std::string> witness = std::nullopt) -> Verdict
        {
            _v.applicable = true;
            _v.holds = holds;
            _v.lhs = std::move(lhs);
            _v.rhs = std::move(rhs);
            _v.witness = std::move(witness);
            if (! holds && ! _v.witness)
                _v.witness = _p.result(Parameter::gamma_tr2).witness->to_string();
            return std::move(_v);
        }

        auto detail(std::string text) -> Builder &
        {
            _v.detail = std::move(text);
            return *this;
        }

    private:
        Profile & _p;
        Verdict _v;
    };

    auto tr2_witness(Profile & p) -> std::string
    {
        return p.result(Parameter::gamma_tr2).witness->to_string();
    }

    auto optima_too_large(Profile & p) -> bool
    {
        return p.graph().order() > p.options().enumeration_limit;
    }

    const std::string too_large_for_optima = "order above the enumeration limit for all optimal labelings";

    auto check_inner(Profile & p, CheckId id) -> Verdict
    {
        Builder b(p, id);
        const auto & g = p.graph();
        const int n = g.order();
        if (n == 0 || g.has_isolated_vertex())
            return b.vacuous("graph has an isolated vertex");

        using P = Parameter;
        switch (id) {
        case CheckId::chain_i: {
            auto gt = b.val(P::gamma_t), tr2 = b.val(P::gamma_tr2), tr = b.val(P::gamma_tr);
            return b.done(gt <= tr2 && tr2 <= tr && tr <= 2 * gt,
                std::to_string(gt) + " <= " + std::to_string(tr2) + " <= " + std::to_string(tr),
                std::to_string(2 * gt));
        }
        case CheckId::chain_ii: {
            auto r2 = b.val(P::gamma_r2), tr2 = b.val(P::gamma_tr2), x2 = b.val(P::gamma_x2);
            return b.done(r2 <= tr2 && tr2 <= x2,
                std::to_string(r2) + " <= " + std::to_string(tr2), std::to_string(x2));
        }
        case CheckId::equiv_t: {
            auto gt = b.val(P::gamma_t), tr2 = b.val(P::gamma_tr2), x2 = b.val(P::gamma_x2);
            bool left = tr2 == gt, right = x2 == gt;
            return b.done(left == right, str(left), str(right));
        }
        case CheckId::sum_tg: {
            auto gt = b.val(P::gamma_t), gm = b.val(P::gamma), tr2 = b.val(P::gamma_tr2);
            return b.done(tr2 <= gt + gm, std::to_string(tr2), std::to_string(gt + gm));
        }
        case CheckId::three_g: {
            auto gm = b.val(P::gamma), tr2 = b.val(P::gamma_tr2);
            return b.done(tr2 <= 3 * gm, std::to_string(tr2), std::to_string(3 * gm));
        }
        case CheckId::two_gt_equiv: {
            auto gt = b.val(P::gamma_t), gm = b.val(P::gamma), tr2 = b.val(P::gamma_tr2), tr = b.val(P::gamma_tr);
            bool left = tr2 == 2 * gt, right = tr2 == tr && gt == gm;
            return b.done(left == right, str(left), str(right));
        }
        case CheckId::tr2g_lower: {
            auto gm = b.val(P::gamma), tr = b.val(P::gamma_tr);
            return b.done(2 * gm <= tr, std::to_string(2 * gm), std::to_string(tr),
                p.result(P::gamma_tr).witness->to_string());
        }
        case CheckId::sum_r2g: {
            auto r2 = b.val(P::gamma_r2), gm = b.val(P::gamma), tr2 = b.val(P::gamma_tr2);
            auto bound = std::min(r2 + gm, 2 * r2);
            if (r2 > gm)
                bound = std::min(bound, 2 * r2 - 1);
            b.detail(r2 > gm ? "gamma_r2 > gamma, bound min(gamma_r2 + gamma, 2 gamma_r2 - 1)" : "bound min(gamma_r2 + gamma, 2 gamma_r2)");
            return b.done(tr2 <= bound, std::to_string(tr2), std::to_string(bound));
        }
        case CheckId::half_n: {
            auto delta = b.note("min_degree", degree_stats(g).min_degree);
            if (delta < 2)
                return b.vacuous("minimum degree below 2");
            auto gt = b.val(P::gamma_t), tr2 = b.val(P::gamma_tr2);
            b.note("n", n);
            return b.done(tr2 <= (gt + n) / 2, std::to_string(tr2), std::to_string((gt + n) / 2));
        }
        case CheckId::three_quarter: {
            auto delta = b.note("min_degree", degree_stats(g).min_degree);
            if (delta < 3)
                return b.vacuous("minimum degree below 3");
            auto tr2 = b.val(P::gamma_tr2);
            b.note("n", n);
            return b.done(4 * tr2 <= 3 * n, std::to_string(4 * tr2), std::to_string(3 * n));
        }
        case CheckId::hamilton: {
            if (n > default_hamiltonian_limit)
                return b.vacuous("order above the Hamiltonicity limit");
            auto h = hamiltonian(g);
            if (h == Hamiltonicity::none)
                return b.vacuous("no Hamiltonian path");
            auto tr2 = b.val(P::gamma_tr2);
            auto bound = 2 * ceil_div(n, 3) + (h == Hamiltonicity::cycle ? 0 : 1);
            b.detail(std::string("hamiltonian: ") + to_string(h));
            return b.done(tr2 <= bound, std::to_string(tr2), std::to_string(bound));
        }
        case CheckId::eq2: {
            auto tr2 = b.val(P::gamma_tr2);
            auto universal = b.note("universal", p.classes().universal.size());
            return b.done((tr2 == 2) == (universal >= 2), str(tr2 == 2), str(universal >= 2), tr2_witness(p));
        }
        case CheckId::eq3: {
            if (! g.is_connected())
                return b.vacuous("graph is disconnected");
            auto tr2 = b.val(P::gamma_tr2);
            auto universal = b.note("universal", p.classes().universal.size());
            auto h = family_H_witness(g);
            bool right = h.has_value() && universal <= 1;
            std::optional<std::string> witness;
            if (h)
                witness = (h->kind == HWitness::Kind::star ? "star:" : "triple:") + set_string(VertexSet::from(h->vertices));
            else
                witness = tr2_witness(p);
            return b.done((tr2 == 3) == right, str(tr2 == 3), str(right), witness);
        }
        case CheckId::eqn: {
            if (! g.is_connected())
                return b.vacuous("graph is disconnected");
            auto tr2 = b.val(P::gamma_tr2);
            b.note("n", n);
            bool right = is_p3_or_corona(g);
            return b.done((tr2 == n) == right, str(tr2 == n), str(right), tr2_witness(p));
        }
        case CheckId::vo1_equiv: {
            if (optima_too_large(p))
                return b.vacuous(too_large_for_optima);
            auto tr2 = b.val(P::gamma_tr2), tr = b.val(P::gamma_tr);
            const Labeling * found = nullptr;
            for (auto & f : p.optima(P::gamma_tr2))
                if (f.zeros_without_two(g).empty()) {
                    found = &f;
                    break;
                }
            bool left = tr2 == tr, right = found != nullptr;
            return b.done(left == right, str(left), str(right),
                found ? std::optional<std::string>(found->to_string()) : std::nullopt);
        }
        case CheckId::reduction_id: {
            if (6 * n > p.options().limit)
                return b.vacuous("reduction gadget above the solver limit");
            auto gm = b.val(P::gamma);
            auto gadget = reduction_graph(g);
            auto r = exact(gadget, {P::gamma_tr2}, p.options());
            auto lhs = b.note("gamma_tr2_reduction", r.require_value());
            b.note("n", n);
            return b.done(lhs == gm + 3 * n, std::to_string(lhs), std::to_string(gm + 3 * n), r.witness->to_string());
        }
        case CheckId::private_nbr: {
            if (optima_too_large(p))
                return b.vacuous(too_large_for_optima);
            b.val(P::gamma_tr2);
            for (auto & f : p.optima(P::gamma_tr2)) {
                bool ok = true;
                for (auto v : f.twos_set())
                    if (private_neighbors(g, v, f.positive()).epn.size() < 2) {
                        ok = false;
                        break;
                    }
                if (ok)
                    return b.done(true, "exists", "exists", f.to_string());
            }
            return b.done(false, "none", "exists");
        }
        case CheckId::obs_adj_supports: {
            if (! g.is_connected() || n < 3)
                return b.vacuous("needs a connected graph of order at least 3");
            if (optima_too_large(p))
                return b.vacuous(too_large_for_optima);
            auto supports = p.classes().adjacent_supports;
            if (supports.empty())
                return b.vacuous("no adjacent support vertices");
            b.val(P::gamma_tr2);
            for (auto v : supports)
                for (auto w : g.neighbors(v) & supports) {
                    if (w < v)
                        continue;
                    bool found = std::ranges::any_of(p.optima(P::gamma_tr2), [&](const Labeling & f) {
                        return f[v] == 2 && f[w] == 2;
                    });
                    if (! found)
                        return b.done(false, "missing", "exists", set_string({v, w}));
                }
            return b.done(true, "exists", "exists");
        }
        case CheckId::obs_strong_support: {
            if (! g.is_connected() || is_star(g))
                return b.vacuous("needs a connected graph other than a star");
            if (optima_too_large(p))
                return b.vacuous(too_large_for_optima);
            const auto & classes = p.classes();
            if (classes.strong_supports.empty())
                return b.vacuous("no strong support vertices");
            b.val(P::gamma_tr2);
            b.val(P::gamma_tr);
            for (auto v : classes.strong_supports) {
                auto leaves = g.neighbors(v) & classes.leaves;
                for (auto param : {P::gamma_tr2, P::gamma_tr}) {
                    bool found = std::ranges::any_of(p.optima(param), [&](const Labeling & f) {
                        return f[v] == 2 && f.weight_on(leaves) == 0;
                    });
                    if (! found)
                        return b.detail(key(param)).done(false, "missing", "exists", set_string({v}));
                }
            }
            return b.done(true, "exists", "exists");
        }
        case CheckId::obs_three_leaves: {
            if (is_star(g))
                return b.vacuous("graph is a star");
            if (optima_too_large(p))
                return b.vacuous(too_large_for_optima);
            const auto & classes = p.classes();
            VertexSet heavy;
            for (auto v : classes.strong_supports)
                if ((g.neighbors(v) & classes.leaves).size() >= 3)
                    heavy.insert(v);
            if (heavy.empty())
                return b.vacuous("no support vertex with three leaves");
            b.val(P::gamma_tr2);
            for (auto & f : p.optima(P::gamma_tr2))
                if (! heavy.subset_of(f.twos_set()))
                    return b.done(false, "not all 2", "all 2", f.to_string());
            return b.done(true, "all 2", "all 2", set_string(heavy));
        }
        }
        throw Error(ErrorKind::invalid_argument, "unknown check");
    }
}

auto check_name(CheckId id) -> std::string
{
    for (auto & info : check_table)
        if (info.id == id)
            return info.name;
    throw Error(ErrorKind::invalid_argument, "unknown check id");
}

auto parse_check(const std::string & text) -> CheckId
{
    std::string upper;
    for (char c : text)
        upper.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (auto & info : check_table)
        if (upper == info.name)
            return info.id;
    throw Error(ErrorKind::parse, "unknown check '" + text + "'");
}

Profile::Profile(const Graph & g, SolverOptions options) : _g(g), _options(options)
{
}

auto Profile::result(Parameter p) -> const SolveResult &
{
    auto it = _results.find(p);
    if (it == _results.end())
        it = _results.emplace(p, exact(_g, {p}, _options)).first;
    return it->second;
}

auto Profile::value(Parameter p) -> int
{
    return result(p).require_value();
}

auto Profile::optima(Parameter p) -> const std::vector<Labeling> &
{
    auto it = _optima.find(p);
    if (it == _optima.end())
        it = _optima.emplace(p, all_optimal(_g, {p}, _options)).first;
    return it->second;
}

auto Profile::classes() -> const VertexClasses &
{
    if (! _classes)
        _classes = vertex_classes(_g);
    return *_classes;
}

auto check(Profile & profile, CheckId id) -> Verdict
{
    return check_inner(profile, id);
}

auto check(const Graph & g, CheckId id, const SolverOptions & options) -> Verdict
{
    Profile profile(g, options);
    return check_inner(profile, id);
}

auto run_checks(const Graph & g, const std::vector<CheckId> & ids, const SolverOptions & options) -> SuiteResult
{
    Profile profile(g, options);
    SuiteResult out;
    for (auto id : ids) {
        auto v = check_inner(profile, id);
        if (! v.applicable)
            ++out.summary.vacuous;
        else if (v.holds)
            ++out.summary.held;
        else
            ++out.summary.violated;
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

auto run_all(const Graph & g, const SolverOptions & options) -> SuiteResult
{
    return run_checks(g, {std::begin(all_checks), std::end(all_checks)}, options);
}

auto is_p3_or_corona(const Graph & g) -> bool
{
    if (g.order() == 3 && g.edge_count() == 2)
        return true;
    auto c = vertex_classes(g);
    return (c.leaves | c.supports) == g.vertices() && c.strong_supports.empty();
}

auto is_star(const Graph & g) -> bool
{
    return g.order() >= 2 && g.edge_count() == g.order() - 1 && ! vertex_classes(g).universal.empty();
}

}
