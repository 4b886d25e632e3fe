#include "tr2dom/tree_family.hpp"

#include "tr2dom/families.hpp"
#include "tr2dom/parallel.hpp"

namespace tr2dom {

auto to_string(const TreeOp & op) -> std::string
{
    auto out = "F" + std::to_string(static_cast<int>(op.kind)) + "(";
    if (op.kind == OpKind::F1)
        out += "r=" + std::to_string(op.r) + ",";
    return out + "v=" + std::to_string(op.target) + ")";
}

auto growth(const TreeOp & op) -> int
{
    switch (op.kind) {
    case OpKind::F1: return 4 * op.r + 1;
    case OpKind::F2:
    case OpKind::F3: return 1;
    case OpKind::F4:
    case OpKind::F5:
    case OpKind::F6: return 2;
    case OpKind::F7: return 3;
    }
    return 0;
}

auto tree_data(const Graph & t, const SolverOptions & options) -> TreeData
{
    return {vertex_classes(t), special_vertex_sets(t, options), near_stable_vertices(t, options)};
}

auto op_precondition_failure(const Graph & t, const TreeData & data, const TreeOp & op) -> std::optional<std::string>
{
    auto v = op.target;
    if (v < 0 || v >= t.order())
        return "target vertex " + std::to_string(v) + " out of range";
    auto need = [&](bool ok, const std::string & set) -> std::optional<std::string> {
        if (ok)
            return std::nullopt;
        return to_string(op) + ": vertex " + std::to_string(v) + " not in " + set;
    };
    switch (op.kind) {
    case OpKind::F1:
        if (op.r < 1)
            return "F1 needs r >= 1";
        return std::nullopt;
    case OpKind::F2: return need(data.sets.supports_two_in_some_tr.contains(v), "S_tR2");
    case OpKind::F3: return need(data.sets.supports_one_in_all_tr2.contains(v), "S_1");
    case OpKind::F4: return need(data.classes.adjacent_supports.contains(v), "S_adj");
    case OpKind::F5: return need(data.sets.leaves_one_in_some_tr.contains(v), "L_tR1");
    case OpKind::F6:
        if (! (data.classes.leaves | data.classes.semi_supports).contains(v))
            return need(false, "L u SS");
        return need(data.near_stable.contains(v), "the near stable vertices");
    case OpKind::F7: return need(data.sets.zero_in_all_tr2.contains(v), "W_0");
    }
    return "unknown operation";
}

auto build_op(const Graph & t, const TreeOp & op) -> Graph
{
    if (op.target < 0 || op.target >= t.order())
        throw Error(ErrorKind::invalid_argument, "operation target out of range");
    GraphBuilder b;
    b.add_graph(t);
    auto v = op.target;
    switch (op.kind) {
    case OpKind::F1: {
        auto hub = b.add_graph(r_graph(op.r));
        b.add_edge(v, hub);
        break;
    }
    case OpKind::F2:
    case OpKind::F3:
        b.add_edge(v, b.add_vertex());
        break;
    case OpKind::F4:
    case OpKind::F6: {
        auto u = b.add_vertices(2);
        b.add_edge(u, u + 1).add_edge(v, u);
        break;
    }
    case OpKind::F5:
        b.add_edge(v, b.add_vertex());
        b.add_edge(v, b.add_vertex());
        break;
    case OpKind::F7: {
        auto u = b.add_vertices(3);
        b.add_edge(u, u + 1).add_edge(u + 1, u + 2).add_edge(v, u);
        break;
    }
    }
    return b.build();
}

auto apply_op(const Graph & t, const TreeOp & op, const SolverOptions & options) -> Graph
{
    if (! t.is_tree())
        throw Error(ErrorKind::not_a_tree, "apply_op needs a tree");
    if (op.target < 0 || op.target >= t.order())
        throw Error(ErrorKind::invalid_argument, "operation target out of range");
    if (op.kind != OpKind::F1) {
        auto data = tree_data(t, options);
        if (auto failure = op_precondition_failure(t, data, op))
            throw Error(ErrorKind::precondition, *failure);
    }
    else if (op.r < 1)
        throw Error(ErrorKind::precondition, "F1 needs r >= 1");
    return build_op(t, op);
}

auto replay(const FCertificate & certificate, const SolverOptions & options) -> Graph
{
    auto t = path_graph(2);
    for (std::size_t i = 0; i < certificate.steps.size(); ++i) {
        auto & step = certificate.steps[i];
        t = apply_op(t, step.op, options);
        if (canonical_form(t) != step.form)
            throw Error(ErrorKind::precondition, "certificate step " + std::to_string(i) + " (" + to_string(step.op) + ") does not reproduce " + step.form);
    }
    return t;
}

auto FamilyF::find(const Graph & t) const -> const FMember *
{
    if (! t.is_tree())
        return nullptr;
    auto it = members.find(canonical_form(t));
    return it == members.end() ? nullptr : &it->second;
}

auto FamilyF::contains(const Graph & t) const -> bool
{
    return find(t) != nullptr;
}

auto FamilyF::count_of_order(int n) const -> int
{
    int count = 0;
    for (auto & [form, member] : members)
        count += member.tree.order() == n;
    return count;
}

auto generate_F(int max_n, const SolverOptions & options) -> FamilyF
{
    if (max_n < 2 || max_n > max_family_order)
        throw Error(ErrorKind::size_limit, "generate_F: max order " + std::to_string(max_n) + " outside 2.." + std::to_string(max_family_order));
    if (max_n > options.enumeration_limit)
        throw Error(ErrorKind::size_limit, "generate_F: max order exceeds the enumeration limit");

    FamilyF family;
    family.max_n = max_n;
    auto p2 = path_graph(2);
    family.members.emplace(canonical_form(p2), FMember{p2, {}});

    for (int order = 2; order < max_n; ++order) {
        std::vector<const FMember *> level;
        for (auto & [form, member] : family.members)
            if (member.tree.order() == order)
                level.push_back(&member);
        std::vector<TreeData> data(level.size());
        auto inner = options;
        inner.threads = 1;
        parallel_for(level.size(), options.threads, [&](std::size_t i) { data[i] = tree_data(level[i]->tree, inner); });

        std::vector<FMember> found;
        for (std::size_t i = 0; i < level.size(); ++i) {
            auto & t = level[i]->tree;
            auto expand = [&](const TreeOp & op) {
                if (order + growth(op) > max_n || op_precondition_failure(t, data[i], op))
                    return;
                auto grown = build_op(t, op);
                auto certificate = level[i]->certificate;
                certificate.steps.push_back({op, canonical_form(grown)});
                found.push_back({std::move(grown), std::move(certificate)});
            };
            for (int r = 1; order + 4 * r + 1 <= max_n; ++r)
                for (Vertex v = 0; v < order; ++v)
                    expand({OpKind::F1, v, r});
            for (auto kind : {OpKind::F2, OpKind::F3, OpKind::F4, OpKind::F5, OpKind::F6, OpKind::F7})
                for (Vertex v = 0; v < order; ++v)
                    expand({kind, v});
        }
        for (auto & member : found) {
            auto form = member.certificate.steps.back().form;
            family.members.try_emplace(std::move(form), std::move(member));
        }
    }
    return family;
}

auto check_characterization(const Graph & t, const FamilyF & family, const SolverOptions & options) -> CharacterizationResult
{
    if (! t.is_tree())
        throw Error(ErrorKind::not_a_tree, "check_characterization needs a tree");
    if (t.order() < 2 || t.order() > max_characterization_order)
        throw Error(ErrorKind::size_limit, "check_characterization: order outside 2.." + std::to_string(max_characterization_order));
    if (t.order() > family.max_n)
        throw Error(ErrorKind::size_limit, "family generated only up to order " + std::to_string(family.max_n));
    CharacterizationResult out;
    out.equality = exact_value(t, {Parameter::gamma_tr2}, options) == exact_value(t, {Parameter::gamma_tr}, options);
    if (auto member = family.find(t)) {
        out.in_F = true;
        out.certificate = member->certificate;
    }
    return out;
}

auto check_characterization(const Graph & t, const SolverOptions & options) -> CharacterizationResult
{
    if (t.order() < 2 || t.order() > max_characterization_order)
        throw Error(ErrorKind::size_limit, "check_characterization: order outside 2.." + std::to_string(max_characterization_order));
    return check_characterization(t, generate_F(t.order(), options), options);
}

auto check_2gamma_t(const Graph & t, const SolverOptions & options) -> TwoGammaTResult
{
    if (! t.is_tree())
        throw Error(ErrorKind::not_a_tree, "check_2gamma_t needs a tree");
    if (t.order() > max_characterization_order)
        throw Error(ErrorKind::size_limit, "check_2gamma_t: order above " + std::to_string(max_characterization_order));
    auto tr2 = exact_value(t, {Parameter::gamma_tr2}, options);
    auto gt = exact_value(t, {Parameter::gamma_t}, options);
    return {
        tr2 == 2 * gt,
        tr2 == exact_value(t, {Parameter::gamma_tr}, options),
        gt == exact_value(t, {Parameter::gamma}, options),
    };
}

}
