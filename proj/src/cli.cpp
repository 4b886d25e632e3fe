#include "tr2dom/cli.hpp"

#include "tr2dom/families.hpp"
#include "tr2dom/io.hpp"
#include "tr2dom/parallel.hpp"
#include "tr2dom/solver.hpp"
#include "tr2dom/theorem_suite.hpp"
#include "tr2dom/tree_family.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace tr2dom {

namespace {
    using json = nlohmann::json;

    struct Options {
        std::string input;
        std::string input_format;
        std::string family;
        std::string format = "graph6";
        std::vector<std::string> params;
        std::vector<std::string> checks;
        int threads = std::max(1u, std::thread::hardware_concurrency());
        int limit = default_solver_limit;
        std::uint64_t seed = 0;
        int max_n = 0;
        bool completeness = false;
        bool no_timing = false;
    };

    auto read_text(const std::string & path, std::istream & in) -> std::string
    {
        std::ostringstream buffer;
        if (path.empty() || path == "-")
            buffer << in.rdbuf();
        else {
            std::ifstream file(path);
            if (! file)
                throw Error(ErrorKind::parse, "cannot open '" + path + "'");
            buffer << file.rdbuf();
        }
        return buffer.str();
    }

    auto load_graph(const Options & o, std::istream & in) -> Graph
    {
        std::optional<GraphFormat> format;
        if (! o.input_format.empty())
            format = parse_format(o.input_format);
        std::optional<Graph> input;
        if (! o.input.empty() || o.family.empty())
            input = read_graph(read_text(o.input, in), format);
        if (o.family.empty())
            return *input;
        return build_family(parse_family_spec(o.family), input, o.seed);
    }

    auto solver_options(const Options & o) -> SolverOptions
    {
        SolverOptions s;
        s.limit = o.limit;
        s.threads = o.threads;
        return s;
    }

    auto graph_json(const Graph & g) -> json
    {
        return {{"digest", graph_digest(g)}, {"graph6", to_graph6(g)}, {"order", g.order()}, {"size", g.edge_count()}};
    }

    auto set_json(VertexSet s) -> json
    {
        return s.to_vector();
    }

    class Report {
    public:
        explicit Report(std::string command) : _start(std::chrono::steady_clock::now())
        {
            _doc["tool"] = {{"name", tool_name}, {"version", tool_version}};
            _doc["command"] = std::move(command);
        }

        auto doc() -> json & { return _doc; }
        auto timing() -> json & { return _timing; }

        auto write(std::ostream & out, bool with_timing) -> void
        {
            if (with_timing) {
                _timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
                _doc["timing"] = _timing;
            }
            out << _doc.dump(2) << "\n";
        }

    private:
        std::chrono::steady_clock::time_point _start;
        json _doc;
        json _timing = json::object();
    };

    auto cmd_compute(const Options & o, std::istream & in, std::ostream & out) -> int
    {
        auto g = load_graph(o, in);
        std::vector<ParameterKind> kinds;
        for (auto & name : o.params) {
            if (name == "all")
                for (auto p : plain_parameters)
                    kinds.push_back({p});
            else
                kinds.push_back(parse_parameter(name));
        }
        if (kinds.empty())
            throw Error(ErrorKind::parse, "compute needs at least one --param");
        for (auto & k : kinds)
            if (k.parameter == Parameter::gamma_tr2_near && k.near_vertex >= g.order())
                throw Error(ErrorKind::invalid_argument, "near vertex " + std::to_string(k.near_vertex) + " not in the graph");

        Report report("compute");
        report.doc()["input"] = graph_json(g);
        auto options = solver_options(o);
        json results = json::array();
        bool infeasible = false;
        for (auto & kind : kinds) {
            auto r = exact(g, kind, options);
            json entry = {{"parameter", to_string(kind)}, {"feasible", r.feasible()}};
            if (r.feasible()) {
                entry["value"] = *r.value;
                entry["witness"] = r.witness->to_string();
                if (is_set_parameter(kind))
                    entry["set"] = set_json(r.witness->positive());
            }
            else {
                entry["value"] = nullptr;
                infeasible = true;
            }
            results.push_back(entry);
            report.timing()["nodes_explored"][to_string(kind)] = r.nodes_explored;
        }
        report.doc()["results"] = {{"parameters", results}};
        report.write(out, ! o.no_timing);
        return infeasible ? exit_code::infeasible : exit_code::ok;
    }

    auto cmd_generate(const Options & o, std::istream & in, std::ostream & out) -> int
    {
        if (o.family.empty())
            throw Error(ErrorKind::parse, "generate needs --family");
        out << write_graph(load_graph(o, in), parse_format(o.format));
        return exit_code::ok;
    }

    auto verdict_json(const Verdict & v) -> json
    {
        json j = {
            {"check_id", v.check_id},
            {"applicable", v.applicable},
            {"holds", v.holds},
            {"lhs", v.lhs},
            {"rhs", v.rhs},
            {"detail", v.detail},
            {"values", v.values},
        };
        j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
        return j;
    }

    auto cmd_verify(const Options & o, std::istream & in, std::ostream & out) -> int
    {
        auto g = load_graph(o, in);
        std::vector<CheckId> ids;
        for (auto & name : o.checks) {
            if (name == "all")
                ids.insert(ids.end(), std::begin(all_checks), std::end(all_checks));
            else
                ids.push_back(parse_check(name));
        }
        if (ids.empty())
            throw Error(ErrorKind::parse, "verify needs at least one --check");

        Report report("verify");
        report.doc()["input"] = graph_json(g);
        auto suite = run_checks(g, ids, solver_options(o));
        json verdicts = json::array();
        for (auto & v : suite.verdicts)
            verdicts.push_back(verdict_json(v));
        report.doc()["results"] = {
            {"verdicts", verdicts},
            {"summary", {{"held", suite.summary.held}, {"vacuous", suite.summary.vacuous}, {"violated", suite.summary.violated}}},
        };
        report.write(out, ! o.no_timing);
        return suite.summary.violated > 0 ? exit_code::violation : exit_code::ok;
    }

    auto certificate_json(const FCertificate & c) -> json
    {
        json steps = json::array();
        for (auto & s : c.steps)
            steps.push_back({{"op", to_string(s.op)}, {"form", s.form}});
        return steps;
    }

    auto cmd_tree_family(const Options & o, std::ostream & out) -> int
    {
        if (o.max_n < 2 || o.max_n > max_family_order)
            throw Error(ErrorKind::size_limit, "--max-n must lie in 2.." + std::to_string(max_family_order));
        if (o.completeness && o.max_n > max_characterization_order)
            throw Error(ErrorKind::size_limit, "completeness checking is limited to --max-n " + std::to_string(max_characterization_order));

        auto options = solver_options(o);
        auto inner = options;
        inner.threads = 1;
        auto family = generate_F(o.max_n, options);

        std::vector<const std::pair<const std::string, FMember> *> members;
        for (auto & entry : family.members)
            members.push_back(&entry);
        std::vector<std::pair<int, int>> values(members.size());
        parallel_for(members.size(), options.threads, [&](std::size_t i) {
            auto & t = members[i]->second.tree;
            values[i] = {exact_value(t, {Parameter::gamma_tr2}, inner), exact_value(t, {Parameter::gamma_tr}, inner)};
        });

        Report report("tree-family");
        json listed = json::array();
        json failures = json::array();
        std::map<std::string, int> counts;
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto & [form, member] = *members[i];
            auto [tr2, tr] = values[i];
            listed.push_back({
                {"form", form},
                {"order", member.tree.order()},
                {"graph6", to_graph6(member.tree)},
                {"certificate", certificate_json(member.certificate)},
                {"gamma_tr2", tr2},
                {"gamma_tr", tr},
            });
            ++counts[std::to_string(member.tree.order())];
            if (tr2 != tr)
                failures.push_back(form);
        }
        json results = {
            {"max_n", o.max_n},
            {"members", listed},
            {"counts", counts},
            {"soundness", {{"checked", members.size()}, {"failures", failures}}},
        };

        bool ok = failures.empty();
        if (o.completeness) {
            json orders = json::object();
            json disagreements = json::array();
            for (int n = 2; n <= o.max_n; ++n) {
                auto trees = enumerate_trees(n);
                std::vector<CharacterizationResult> verdicts(trees.size());
                parallel_for(trees.size(), options.threads, [&](std::size_t i) {
                    verdicts[i] = check_characterization(trees[i], family, inner);
                });
                int equal = 0;
                for (std::size_t i = 0; i < trees.size(); ++i) {
                    equal += verdicts[i].equality;
                    if (! verdicts[i].agrees())
                        disagreements.push_back({{"form", canonical_form(trees[i])}, {"equality", verdicts[i].equality}, {"in_F", verdicts[i].in_F}});
                }
                orders[std::to_string(n)] = {{"trees", trees.size()}, {"equality", equal}, {"members", family.count_of_order(n)}};
            }
            ok = ok && disagreements.empty();
            results["completeness"] = {{"orders", orders}, {"disagreements", disagreements}};
        }
        report.doc()["results"] = results;
        report.write(out, ! o.no_timing);
        return ok ? exit_code::ok : exit_code::violation;
    }

    auto code_for(ErrorKind kind) -> int
    {
        switch (kind) {
        case ErrorKind::infeasible: return exit_code::infeasible;
        case ErrorKind::size_limit: return exit_code::size_limit;
        default: return exit_code::parse_error;
        }
    }

    auto add_graph_options(CLI::App * cmd, Options & o) -> void
    {
        cmd->add_option("--input", o.input, "Graph file (edge list or graph6); '-' or absent reads standard input");
        cmd->add_option("--input-format", o.input_format, "Force the input format")->check(CLI::IsMember({"graph6", "edgelist"}));
        cmd->add_option("--family", o.family, "Build a named family instead, e.g. hs:3, frn:5,8, reduction (base from --input)");
        cmd->add_option("--seed", o.seed, "Seed for random families");
    }

    auto add_solver_options(CLI::App * cmd, Options & o) -> void
    {
        cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));
        cmd->add_option("--limit", o.limit, "Largest order the branch-and-bound solver accepts")->check(CLI::Range(1, Graph::max_order));
        cmd->add_flag("--no-timing", o.no_timing, "Omit the timing object from the report");
    }
}

auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    Options o;
    CLI::App app{"Exact total Roman {2}-domination and related parameters", tool_name};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    auto compute = app.add_subcommand("compute", "Compute parameter values and witnesses");
    add_graph_options(compute, o);
    add_solver_options(compute, o);
    compute->add_option("--param", o.params, "gamma, gamma-t, gamma-r2, gamma-tr, gamma-tr2, gamma-x2, near:<v> or all")->required();

    auto generate = app.add_subcommand("generate", "Emit a graph from a named family");
    add_graph_options(generate, o);
    generate->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));

    auto verify = app.add_subcommand("verify", "Run theorem checks on a graph");
    add_graph_options(verify, o);
    add_solver_options(verify, o);
    verify->add_option("--check", o.checks, "Check id (e.g. chain-i, eq3, reduction-id) or all")->required();

    auto tree_family = app.add_subcommand("tree-family", "Generate the operation-closed tree family");
    add_solver_options(tree_family, o);
    tree_family->add_option("--max-n", o.max_n, "Largest tree order")->required();
    tree_family->add_flag("--check-completeness", o.completeness, "Cross-check against all trees up to --max-n");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::parse_error;
    }

    try {
        if (compute->parsed())
            return cmd_compute(o, in, out);
        if (generate->parsed())
            return cmd_generate(o, in, out);
        if (verify->parsed())
            return cmd_verify(o, in, out);
        return cmd_tree_family(o, out);
    }
    catch (const Error & e) {
        err << tool_name << ": " << e.what() << "\n";
        return code_for(e.kind());
    }
}

}
