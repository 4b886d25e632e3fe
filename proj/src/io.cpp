#include "tr2dom/io.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace tr2dom {

namespace {
    auto parse_error(const std::string & message) -> Error
    {
        return Error(ErrorKind::parse, message);
    }

    auto trim(std::string_view s) -> std::string_view
    {
        auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
        while (! s.empty() && space(s.front()))
            s.remove_prefix(1);
        while (! s.empty() && space(s.back()))
            s.remove_suffix(1);
        return s;
    }

    auto strip_comment(std::string_view line) -> std::string_view
    {
        auto hash = line.find('#');
        return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
    }

    auto parse_int(const std::string & token, const std::string & what) -> long long
    {
        try {
            std::size_t used = 0;
            auto x = std::stoll(token, &used);
            if (used == token.size())
                return x;
        }
        catch (const std::exception &) {
        }
        throw parse_error("bad " + what + " '" + token + "'");
    }
}

auto parse_format(const std::string & name) -> GraphFormat
{
    if (name == "graph6")
        return GraphFormat::graph6;
    if (name == "edgelist")
        return GraphFormat::edgelist;
    throw parse_error("unknown graph format '" + name + "'");
}

auto to_graph6(const Graph & g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits = 0, group = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                bits = group = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

auto from_graph6(std::string_view text) -> Graph
{
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.empty())
        throw parse_error("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw parse_error("graph6 character out of range");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126)
        n = text[pos++] - 63;
    else {
        if (text.size() >= 2 && text[1] == 126)
            throw parse_error("graph6 orders above 258047 are not supported");
        if (text.size() < 4)
            throw parse_error("truncated graph6 order");
        n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
        pos = 4;
    }
    if (n > Graph::max_order)
        throw Error(ErrorKind::size_limit, "graph6 order " + std::to_string(n) + " exceeds " + std::to_string(Graph::max_order));

    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t needed = (pairs + 5) / 6;
    if (text.size() - pos != needed)
        throw parse_error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(needed));

    GraphBuilder b(static_cast<int>(n));
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    if (pairs % 6 != 0) {
        int byte = text.back() - 63;
        if (byte & ((1 << (6 - pairs % 6)) - 1))
            throw parse_error("graph6 padding bits are not zero");
    }
    return b.build();
}

auto to_edge_list(const Graph & g) -> std::string
{
    auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

auto from_edge_list(std::string_view text) -> Graph
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto data = strip_comment(line);
        if (data.empty())
            continue;
        std::istringstream fields{std::string(data)};
        std::vector<std::string> row;
        for (std::string token; fields >> token;)
            row.push_back(token);
        if (row.size() != 2)
            throw parse_error("edge list line '" + std::string(data) + "' needs exactly two fields");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw parse_error("edge list has no header line");

    auto n = parse_int(rows[0][0], "vertex count");
    auto m = parse_int(rows[0][1], "edge count");
    if (n < 0 || m < 0)
        throw parse_error("negative vertex or edge count");
    if (n > Graph::max_order)
        throw Error(ErrorKind::size_limit, "edge list order " + std::to_string(n) + " exceeds " + std::to_string(Graph::max_order));
    if (static_cast<long long>(rows.size()) - 1 != m)
        throw parse_error("edge list declares " + std::to_string(m) + " edges but has " + std::to_string(rows.size() - 1));

    GraphBuilder b(static_cast<int>(n));
    std::set<std::pair<long long, long long>> seen;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto u = parse_int(rows[i][0], "vertex");
        auto v = parse_int(rows[i][1], "vertex");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u == v)
            throw parse_error("self-loop at vertex " + std::to_string(u));
        if (! seen.insert(std::minmax(u, v)).second)
            throw parse_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return b.build();
}

auto write_graph(const Graph & g, GraphFormat format) -> std::string
{
    return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

auto read_graph(std::string_view text, std::optional<GraphFormat> format) -> Graph
{
    if (! format) {
        format = GraphFormat::graph6;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            auto data = strip_comment(line);
            if (data.empty())
                continue;
            if (data.find_first_of(" \t") != std::string_view::npos)
                format = GraphFormat::edgelist;
            break;
        }
    }
    return *format == GraphFormat::graph6 ? from_graph6(text) : from_edge_list(text);
}

auto graph_digest(const Graph & g) -> std::string
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_graph6(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}
