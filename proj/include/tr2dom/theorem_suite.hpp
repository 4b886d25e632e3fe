#pragma once

#include "tr2dom/graph.hpp"
#include "tr2dom/solver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tr2dom {

enum class CheckId {
    chain_i,
    chain_ii,
    equiv_t,
    sum_tg,
    three_g,
    two_gt_equiv,
    tr2g_lower,
    sum_r2g,
    half_n,
    three_quarter,
    hamilton,
    eq2,
    eq3,
    eqn,
    vo1_equiv,
    reduction_id,
    private_nbr,
    obs_adj_supports,
    obs_strong_support,
    obs_three_leaves,
};

inline constexpr CheckId all_checks[] = {
    CheckId::chain_i, CheckId::chain_ii, CheckId::equiv_t, CheckId::sum_tg,
    CheckId::three_g, CheckId::two_gt_equiv, CheckId::tr2g_lower, CheckId::sum_r2g,
    CheckId::half_n, CheckId::three_quarter, CheckId::hamilton, CheckId::eq2,
    CheckId::eq3, CheckId::eqn, CheckId::vo1_equiv, CheckId::reduction_id,
    CheckId::private_nbr, CheckId::obs_adj_supports, CheckId::obs_strong_support,
    CheckId::obs_three_leaves,
};

/// Report name, e.g. "CHAIN_I".
auto check_name(CheckId id) -> std::string;
/// Accepts the report name or the CLI spelling ("chain-i"), case-insensitive.
auto parse_check(const std::string & text) -> CheckId;

struct Verdict {
    std::string check_id;
    /// False when the hypotheses of the statement are not met; holds is then
    /// vacuously true.
    bool applicable = false;
    bool holds = true;
    std::string lhs;
    std::string rhs;
    std::string detail;
    /// Evidence: an optimal labeling, a vertex set or a graph6 string.
    std::optional<std::string> witness;
    /// Named quantities the verdict was computed from.
    std::map<std::string, int> values;
};

/// Memoized solver results for one graph, shared across checks.
class Profile {
public:
    Profile(const Graph & g, SolverOptions options = {});

    auto graph() const -> const Graph & { return _g; }
    auto options() const -> const SolverOptions & { return _options; }
    auto result(Parameter p) -> const SolveResult &;
    auto value(Parameter p) -> int;
    auto optima(Parameter p) -> const std::vector<Labeling> &;
    auto classes() -> const VertexClasses &;

private:
    Graph _g;
    SolverOptions _options;
    std::map<Parameter, SolveResult> _results;
    std::map<Parameter, std::vector<Labeling>> _optima;
    std::optional<VertexClasses> _classes;
};

auto check(Profile & profile, CheckId id) -> Verdict;
auto check(const Graph & g, CheckId id, const SolverOptions & options = {}) -> Verdict;

struct SuiteSummary {
    int held = 0;
    int vacuous = 0;
    int violated = 0;
};

struct SuiteResult {
    std::vector<Verdict> verdicts;
    SuiteSummary summary;
};

auto run_checks(const Graph & g, const std::vector<CheckId> & ids, const SolverOptions & options = {}) -> SuiteResult;
auto run_all(const Graph & g, const SolverOptions & options = {}) -> SuiteResult;

/// V(G) = L(G) u S(G) and no strong supports, or G is P_3.
auto is_p3_or_corona(const Graph & g) -> bool;
auto is_star(const Graph & g) -> bool;

}
