#include "domlab/graph6.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace domlab {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string_view strip_comment(std::string_view line)
{
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    return trim(line);
}

// Non-empty, comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto nl = text.find('\n');
        const auto line = strip_comment(text.substr(0, nl));
        if (!line.empty())
            out.emplace_back(number, std::string(line));
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

bool parse_count(std::istringstream& in, std::size_t& value)
{
    long long raw = 0;
    if (!(in >> raw) || raw < 0)
        return false;
    value = static_cast<std::size_t>(raw);
    return true;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw ParseError("empty graph6 string", 0);
    const auto header = static_cast<unsigned char>(text[0]);
    if (header < 63 || header > 126)
        throw ParseError("invalid graph6 header byte", 0);
    if (header == 126)
        throw ParseError("graph6 orders above " + std::to_string(kMaxGraph6Order) + " are not supported", 0);
    const std::size_t n = header - 63;
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() != 1 + body)
        throw ParseError("graph6 body has " + std::to_string(text.size() - 1) + " bytes, expected "
                             + std::to_string(body),
                         text.size() < 1 + body ? text.size() : 1 + body);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const std::size_t offset = 1 + k / 6;
            const auto byte = static_cast<unsigned char>(text[offset]);
            if (byte < 63 || byte > 126)
                throw ParseError("invalid graph6 data byte", offset);
            if (((byte - 63) >> (5 - k % 6)) & 1U)
                edges.push_back({i, j});
        }
    for (std::size_t offset = 1; offset < text.size(); ++offset) {
        const auto byte = static_cast<unsigned char>(text[offset]);
        if (byte < 63 || byte > 126)
            throw ParseError("invalid graph6 data byte", offset);
    }
    if (bits % 6 != 0) {
        const auto last = static_cast<unsigned>(static_cast<unsigned char>(text.back()) - 63);
        if ((last & ((1U << (6 - bits % 6)) - 1)) != 0)
            throw ParseError("nonzero graph6 padding bits", text.size() - 1);
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kMaxGraph6Order)
        throw std::invalid_argument("graph6 output supports at most " + std::to_string(kMaxGraph6Order) + " vertices");
    std::string out(1, static_cast<char>(n + 63));
    unsigned chunk = 0;
    std::size_t filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError("edge list is empty", 1);
    std::istringstream head(lines[0].second);
    std::size_t n = 0;
    std::size_t m = 0;
    std::string extra;
    if (!parse_count(head, n) || !parse_count(head, m) || (head >> extra))
        throw ParseError("edge list header must be \"n m\"", lines[0].first);
    if (lines.size() - 1 != m)
        throw ParseError("edge list declares " + std::to_string(m) + " edges but lists "
                             + std::to_string(lines.size() - 1),
                         lines.back().first);
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::istringstream in(lines[k].second);
        Edge e;
        if (!parse_count(in, e.u) || !parse_count(in, e.v) || (in >> extra))
            throw ParseError("edge line must be \"u v\"", lines[k].first);
        if (e.u >= n || e.v >= n || e.u == e.v)
            throw ParseError("invalid edge " + std::to_string(e.u) + " " + std::to_string(e.v), lines[k].first);
        edges.push_back(e);
    }
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph read_graph(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::automatic) {
        const auto lines = content_lines(text);
        format = GraphFormat::graph6;
        if (!lines.empty()) {
            std::istringstream head(lines[0].second);
            std::size_t a = 0;
            std::size_t b = 0;
            if (parse_count(head, a) && parse_count(head, b))
                format = GraphFormat::edge_list;
        }
    }
    if (format == GraphFormat::edge_list)
        return parse_edge_list(text);
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError("no graph6 string found", 0);
    if (lines.size() > 1)
        throw ParseError("expected a single graph6 string", lines[1].first);
    return parse_graph6(lines[0].second);
}

}  // namespace domlab
