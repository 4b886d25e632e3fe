#pragma once

#include "tr2dom/graph.hpp"
#include "tr2dom/solver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tr2dom {

enum class OpKind { F1 = 1, F2, F3, F4, F5, F6, F7 };

struct TreeOp {
    OpKind kind;
    Vertex target;
    /// Number of P_4 copies in the R_r added by F1; ignored otherwise.
    int r = 0;

    auto operator==(const TreeOp &) const -> bool = default;
};

/// "F1(r=2,v=3)", "F4(v=0)".
auto to_string(const TreeOp & op) -> std::string;
/// Vertices the operation adds.
auto growth(const TreeOp & op) -> int;

/// Everything the operation preconditions look at, for one tree.
struct TreeData {
    VertexClasses classes;
    SpecialVertexSets sets;
    VertexSet near_stable;
};

auto tree_data(const Graph & t, const SolverOptions & options = {}) -> TreeData;

/// Empty if op may be applied to a tree with this data, otherwise the
/// reason, naming the set the target failed to belong to.
auto op_precondition_failure(const Graph & t, const TreeData & data, const TreeOp & op) -> std::optional<std::string>;

/// Builds the result of op without checking its precondition. New vertices
/// are numbered after the existing ones.
auto build_op(const Graph & t, const TreeOp & op) -> Graph;

/// Checks the precondition (throwing Error(precondition)) then builds.
auto apply_op(const Graph & t, const TreeOp & op, const SolverOptions & options = {}) -> Graph;

struct CertificateStep {
    TreeOp op;
    /// Canonical form of the tree after this step.
    std::string form;
};

/// Operations leading from P_2 (vertices 0, 1) to a member of the family.
struct FCertificate {
    std::vector<CertificateStep> steps;
};

/// Replays the certificate from P_2, re-checking every precondition and
/// recorded form. Throws Error(precondition) on any mismatch.
auto replay(const FCertificate & certificate, const SolverOptions & options = {}) -> Graph;

struct FMember {
    Graph tree;
    FCertificate certificate;
};

struct FamilyF {
    int max_n = 0;
    /// Keyed by canonical form.
    std::map<std::string, FMember> members;

    auto contains(const Graph & t) const -> bool;
    auto find(const Graph & t) const -> const FMember *;
    auto count_of_order(int n) const -> int;
};

inline constexpr int max_family_order = 14;

/// Closure of P_2 under F1-F7 restricted to trees of order <= max_n.
auto generate_F(int max_n, const SolverOptions & options = {}) -> FamilyF;

struct CharacterizationResult {
    bool equality = false;
    bool in_F = false;
    std::optional<FCertificate> certificate;

    auto agrees() const -> bool { return equality == in_F; }
};

inline constexpr int max_characterization_order = 12;

/// `family` must have been generated up to at least the order of t.
auto check_characterization(const Graph & t, const FamilyF & family, const SolverOptions & options = {}) -> CharacterizationResult;
auto check_characterization(const Graph & t, const SolverOptions & options = {}) -> CharacterizationResult;

struct TwoGammaTResult {
    bool equality_2t = false;
    bool equality_tr = false;
    bool gamma_eq = false;

    auto holds() const -> bool { return equality_2t == (equality_tr && gamma_eq); }
};

auto check_2gamma_t(const Graph & t, const SolverOptions & options = {}) -> TwoGammaTResult;

}
