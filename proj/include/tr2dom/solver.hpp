#pragma once

#include "tr2dom/graph.hpp"
#include "tr2dom/labeling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tr2dom {

enum class Parameter {
    gamma,          ///< domination number
    gamma_t,        ///< total domination number
    gamma_r2,       ///< Roman {2}-domination number
    gamma_tr,       ///< total Roman domination number
    gamma_tr2,      ///< total Roman {2}-domination number
    gamma_x2,       ///< double domination number
    gamma_tr2_near, ///< near total Roman {2}-domination number relative to a vertex
};

struct ParameterKind {
    Parameter parameter = Parameter::gamma_tr2;
    /// Only meaningful for gamma_tr2_near.
    Vertex near_vertex = -1;

    static auto near(Vertex v) -> ParameterKind { return {Parameter::gamma_tr2_near, v}; }

    auto operator==(const ParameterKind &) const -> bool = default;
};

inline constexpr Parameter plain_parameters[] = {
    Parameter::gamma, Parameter::gamma_t, Parameter::gamma_r2,
    Parameter::gamma_tr2, Parameter::gamma_tr, Parameter::gamma_x2,
};

/// CLI spelling: gamma, gamma-t, gamma-r2, gamma-tr, gamma-tr2, gamma-x2, near:<v>.
auto to_string(ParameterKind kind) -> std::string;
auto parse_parameter(const std::string & name) -> ParameterKind;

/// Set-valued parameters search over {0,1} labelings (indicator vectors).
auto is_set_parameter(ParameterKind kind) -> bool;
/// Parameters that have no feasible labeling on a graph with an isolated vertex.
auto requires_totality(ParameterKind kind) -> bool;
/// The defining predicate of `kind`, applied to a labeling.
auto satisfies(const Graph & g, ParameterKind kind, const Labeling & f) -> bool;

enum class Method { branch_and_bound, enumeration };

inline constexpr int default_solver_limit = 30;
inline constexpr int default_enumeration_limit = 16;

struct SolverOptions {
    Method method = Method::branch_and_bound;
    int limit = default_solver_limit;
    int enumeration_limit = default_enumeration_limit;
    int threads = 1;
};

struct SolveResult {
    /// Empty when no labeling satisfies the parameter's predicate.
    std::optional<int> value;
    /// Lexicographically smallest optimal labeling.
    std::optional<Labeling> witness;
    std::uint64_t nodes_explored = 0;

    auto feasible() const -> bool { return value.has_value(); }
    /// Throws Error(infeasible) when there is no value.
    auto require_value() const -> int;
};

auto exact(const Graph & g, ParameterKind kind, const SolverOptions & options = {}) -> SolveResult;

/// Convenience: the optimum, throwing Error(infeasible) if there is none.
auto exact_value(const Graph & g, ParameterKind kind, const SolverOptions & options = {}) -> int;

/// Every optimal labeling, sorted lexicographically. Throws Error(infeasible)
/// if none exists and Error(size_limit) above options.enumeration_limit.
auto all_optimal(const Graph & g, ParameterKind kind, const SolverOptions & options = {}) -> std::vector<Labeling>;

enum class ClosedFamily { path, cycle };

/// gamma_tr2 and gamma_x2 of P_n (n >= 2) and C_n (n >= 3).
auto closed_form(ParameterKind kind, ClosedFamily family, int n) -> int;

struct SpecialVertexSets {
    /// Supports labelled 2 by some optimal total Roman dominating function.
    VertexSet supports_two_in_some_tr;
    /// Leaves labelled 1 by some optimal total Roman dominating function.
    VertexSet leaves_one_in_some_tr;
    /// Supports labelled 1 by every optimal total Roman {2}-dominating function.
    VertexSet supports_one_in_all_tr2;
    /// Vertices labelled 0 by every optimal total Roman {2}-dominating function.
    VertexSet zero_in_all_tr2;
};

auto special_vertex_sets(const Graph & g, const SolverOptions & options = {}) -> SpecialVertexSets;

/// Vertices v whose near number relative to v equals gamma_tr2.
auto near_stable_vertices(const Graph & g, const SolverOptions & options = {}) -> VertexSet;

}
