#include "domlab/labeling.hpp"

#include "domlab/graph6.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace domlab {

namespace {

void require_label(int label)
{
    if (label < 0 || label > 2)
        throw std::invalid_argument("label " + std::to_string(label) + " outside {0,1,2}");
}

void require_length(const Graph& g, const Labeling& f)
{
    if (f.size() != g.order())
        throw std::invalid_argument("labeling has " + std::to_string(f.size()) + " entries for a graph of order "
                                    + std::to_string(g.order()));
}

VertexSet fit(const VertexSet& s, std::size_t universe)
{
    if (s.universe() == universe)
        return s;
    VertexSet out(universe);
    s.for_each([&](Vertex v) { out.insert(v); });  // throws if v is out of range
    return out;
}

int open_sum(const Graph& g, const Labeling& f, Vertex v)
{
    int total = 0;
    g.neighbors(v).for_each([&](Vertex u) { total += f[u]; });
    return total;
}

template <typename Bad>
Verdict collect(std::size_t n, std::string_view reason, Bad&& bad)
{
    Verdict out;
    for (Vertex v = 0; v < n; ++v)
        if (bad(v))
            out.witnesses.push_back(v);
    out.valid = out.witnesses.empty();
    if (!out.valid)
        out.reason = std::string(reason);
    return out;
}

}  // namespace

Labeling::Labeling(std::vector<std::uint8_t> values) : values_(std::move(values))
{
    for (auto x : values_)
        require_label(x);
}

Labeling::Labeling(std::initializer_list<int> values)
{
    values_.reserve(values.size());
    for (int x : values) {
        require_label(x);
        values_.push_back(static_cast<std::uint8_t>(x));
    }
}

Labeling Labeling::indicator(const VertexSet& s)
{
    Labeling f(s.universe());
    s.for_each([&](Vertex v) { f.values_[v] = 1; });
    return f;
}

void Labeling::set(Vertex v, int label)
{
    require_label(label);
    values_.at(v) = static_cast<std::uint8_t>(label);
}

VertexSet Labeling::part(int label) const
{
    VertexSet out(values_.size());
    for (Vertex v = 0; v < values_.size(); ++v)
        if (values_[v] == label)
            out.insert(v);
    return out;
}

int weight(const Labeling& f)
{
    const auto values = f.values();
    return std::accumulate(values.begin(), values.end(), 0);
}

Verdict check_r2df(const Graph& g, const Labeling& f)
{
    require_length(g, f);
    return collect(g.order(), "zero-vertex-underdefended", [&](Vertex v) { return f[v] == 0 && open_sum(g, f, v) < 2; });
}

Verdict check_rdf(const Graph& g, const Labeling& f)
{
    require_length(g, f);
    const auto twos = f.part(2);
    return collect(g.order(), "zero-vertex-without-2-neighbor",
                   [&](Vertex v) { return f[v] == 0 && (g.neighbors(v) & twos).empty(); });
}

Verdict check_brace2(const Graph& g, const Labeling& f)
{
    require_length(g, f);
    return collect(g.order(), "closed-neighborhood-below-2", [&](Vertex v) { return f[v] + open_sum(g, f, v) < 2; });
}

Verdict check_dominating(const Graph& g, const VertexSet& s)
{
    const auto in = fit(s, g.order());
    return collect(g.order(), "undominated",
                   [&](Vertex v) { return !in.contains(v) && (g.neighbors(v) & in).empty(); });
}

Verdict check_2dominating(const Graph& g, const VertexSet& s)
{
    const auto in = fit(s, g.order());
    return collect(g.order(), "fewer-than-2-neighbors-in-set",
                   [&](Vertex v) { return !in.contains(v) && (g.neighbors(v) & in).size() < 2; });
}

std::string_view variant_name(Variant v)
{
    switch (v) {
    case Variant::dom: return "dom";
    case Variant::dom2: return "dom2";
    case Variant::roman: return "roman";
    case Variant::brace2: return "brace2";
    case Variant::roman2: return "roman2";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name)
{
    for (auto v : kAllVariants)
        if (variant_name(v) == name)
            return v;
    return std::nullopt;
}

int max_label(Variant v) { return v == Variant::dom || v == Variant::dom2 ? 1 : 2; }

Verdict check(const Graph& g, const Labeling& f, Variant v)
{
    require_length(g, f);
    if (v == Variant::dom || v == Variant::dom2) {
        auto twos = f.part(2);
        if (!twos.empty()) {
            Verdict out;
            out.valid = false;
            out.witnesses = twos.members();
            out.reason = "alphabet";
            return out;
        }
        const auto s = f.part(1);
        return v == Variant::dom ? check_dominating(g, s) : check_2dominating(g, s);
    }
    switch (v) {
    case Variant::roman: return check_rdf(g, f);
    case Variant::brace2: return check_brace2(g, f);
    default: return check_r2df(g, f);
    }
}

Labeling parse_labeling(std::string_view text, std::size_t order)
{
    std::vector<int> values(order, -1);
    std::size_t number = 0;
    std::istringstream all{std::string(text)};
    std::string line;
    while (std::getline(all, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream in(line);
        long long v = 0;
        long long label = 0;
        std::string extra;
        if (!(in >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            throw ParseError("labeling line must be \"v label\"", number);
        }
        if (!(in >> label) || (in >> extra))
            throw ParseError("labeling line must be \"v label\"", number);
        if (v < 0 || static_cast<std::size_t>(v) >= order)
            throw ParseError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(order), number);
        if (label < 0 || label > 2)
            throw ParseError("label " + std::to_string(label) + " outside {0,1,2}", number);
        if (values[static_cast<std::size_t>(v)] != -1)
            throw ParseError("vertex " + std::to_string(v) + " labeled twice", number);
        values[static_cast<std::size_t>(v)] = static_cast<int>(label);
    }
    std::vector<std::uint8_t> out(order);
    for (Vertex v = 0; v < order; ++v) {
        if (values[v] == -1)
            throw ParseError("vertex " + std::to_string(v) + " has no label", number);
        out[v] = static_cast<std::uint8_t>(values[v]);
    }
    return Labeling(std::move(out));
}

std::string to_labeling_text(const Labeling& f)
{
    std::string out;
    for (Vertex v = 0; v < f.size(); ++v)
        out += std::to_string(v) + " " + std::to_string(f[v]) + "\n";
    return out;
}

}  // namespace domlab
