#include "domlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace domlab {

namespace {

void require_vertex(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order "
                                + std::to_string(g.order()));
}

void require_members(const Graph& g, const VertexSet& s)
{
    if (s.universe() > g.order())
        for (Vertex v = g.order(); v < s.universe(); ++v)
            if (s.contains(v))
                throw std::out_of_range("vertex set member " + std::to_string(v) + " out of range for graph of order "
                                        + std::to_string(g.order()));
}

VertexSet resize(const VertexSet& s, std::size_t universe)
{
    if (s.universe() == universe)
        return s;
    VertexSet out(universe);
    s.for_each([&](Vertex v) {
        if (v < universe)
            out.insert(v);
    });
    return out;
}

}  // namespace

Graph::Graph(std::size_t order) : adj_(order, VertexSet(order)) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order)
{
    for (const auto& e : edges)
        add_edge(e.u, e.v);
}

Graph::Graph(std::size_t order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size()))
{
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u >= order() || v >= order())
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v)
                                    + " has an endpoint outside 0.." + std::to_string(order()));
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v))
        return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++size_;
}

const VertexSet& Graph::neighbors(Vertex v) const
{
    require_vertex(*this, v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex u = 0; u < order(); ++u)
        adj_[u].for_each([&](Vertex v) {
            if (u < v)
                out.push_back({u, v});
        });
    return out;
}

std::uint64_t Graph::mask(Vertex v) const
{
    if (order() > 64)
        throw std::logic_error("word adjacency requires at most 64 vertices");
    return neighbors(v).word(0);
}

Graph make_family(Family kind, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("family members need n >= 1");
    std::vector<Edge> edges;
    switch (kind) {
    case Family::path:
        for (Vertex i = 0; i + 1 < n; ++i)
            edges.push_back({i, i + 1});
        return Graph(n, edges);
    case Family::cycle:
        if (n < 3)
            throw std::invalid_argument("cycles need n >= 3");
        for (Vertex i = 0; i < n; ++i)
            edges.push_back({i, (i + 1) % n});
        return Graph(n, edges);
    case Family::complete:
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                edges.push_back({i, j});
        return Graph(n, edges);
    case Family::star:
        for (Vertex i = 1; i <= n; ++i)
            edges.push_back({0, i});
        return Graph(n + 1, edges);
    case Family::empty:
        return Graph(n);
    }
    throw std::invalid_argument("unknown family");
}

VertexSet neighborhood(const Graph& g, Vertex v, Neighborhood kind)
{
    VertexSet out = g.neighbors(v);
    if (kind == Neighborhood::closed)
        out.insert(v);
    return out;
}

VertexSet degree_class(const Graph& g, std::size_t i)
{
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == i)
            out.insert(v);
    return out;
}

std::size_t max_degree(const Graph& g)
{
    if (g.order() == 0)
        throw std::invalid_argument("maximum degree of the empty graph is undefined");
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v)
{
    require_vertex(g, u);
    require_vertex(g, v);
    std::vector<std::size_t> dist(g.order(), static_cast<std::size_t>(-1));
    std::deque<Vertex> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        if (x == v)
            return dist[x];
        g.neighbors(x).for_each([&](Vertex y) {
            if (dist[y] == static_cast<std::size_t>(-1)) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        });
    }
    return std::nullopt;
}

bool is_connected(const Graph& g)
{
    if (g.order() <= 1)
        return true;
    VertexSet seen(g.order());
    std::vector<Vertex> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        g.neighbors(x).for_each([&](Vertex y) {
            if (!seen.contains(y)) {
                seen.insert(y);
                stack.push_back(y);
            }
        });
    }
    return seen.size() == g.order();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    require_members(g, s);
    const auto members = resize(s, g.order()).members();
    std::vector<Vertex> index(g.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i)
        index[members[i]] = i;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                edges.push_back({i, j});
    return Graph(members.size(), edges);
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    require_members(g, s);
    const auto members = resize(s, g.order()).members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.adjacent(members[i], members[j]))
                return false;
    return true;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v)
{
    if (u == v)
        throw std::invalid_argument("common neighbors need two distinct vertices");
    return g.neighbors(u) & g.neighbors(v);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != g.order())
        throw std::invalid_argument("permutation length does not match graph order");
    VertexSet seen(g.order());
    for (Vertex p : perm) {
        if (p >= g.order() || seen.contains(p))
            throw std::invalid_argument("relabeling is not a permutation");
        seen.insert(p);
    }
    auto edges = g.edges();
    for (auto& e : edges)
        e = {perm[e.u], perm[e.v]};
    return Graph(g.order(), edges);
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    if (n == 0)
        throw std::invalid_argument("random graphs need n >= 1");
    std::vector<Edge> edges;
    std::vector<Vertex> order(n);
    for (Vertex i = 0; i < n; ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    // Random attachment tree over a shuffled order.
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        edges.push_back({order[pick(rng)], order[i]});
    }
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace domlab
