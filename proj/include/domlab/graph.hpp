#pragma once

#include "domlab/vertex_set.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace domlab {

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on the vertex ids 0..order()-1.
///
/// Adjacency is stored as one VertexSet per vertex. Duplicate edges passed to
/// the constructor are merged; self-loops and out-of-range endpoints throw
/// std::invalid_argument.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);
    Graph(std::size_t order, std::span<const Edge> edges);
    Graph(std::size_t order, std::initializer_list<Edge> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return size_; }

    const VertexSet& neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const;

    /// Neighborhood of v as a single machine word. Requires order() <= 64.
    std::uint64_t mask(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void add_edge(Vertex u, Vertex v);

    std::vector<VertexSet> adj_;
    std::size_t size_ = 0;
};

enum class Family { path, cycle, complete, star, empty };

/// Canonical member of a standard family. star(n) is K_{1,n}: n+1 vertices with
/// vertex 0 as the center. Cycles need n >= 3; every family needs n >= 1.
Graph make_family(Family kind, std::size_t n);

inline Graph path_graph(std::size_t n) { return make_family(Family::path, n); }
inline Graph cycle_graph(std::size_t n) { return make_family(Family::cycle, n); }
inline Graph complete_graph(std::size_t n) { return make_family(Family::complete, n); }
inline Graph star_graph(std::size_t leaves) { return make_family(Family::star, leaves); }
inline Graph empty_graph(std::size_t n) { return make_family(Family::empty, n); }

enum class Neighborhood { open, closed };

VertexSet neighborhood(const Graph& g, Vertex v, Neighborhood kind);

/// N_i(G): the vertices of degree exactly i.
VertexSet degree_class(const Graph& g, std::size_t i);

std::size_t max_degree(const Graph& g);

/// BFS distance; std::nullopt when u and v lie in different components.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

/// G[S], relabeled 0..|S|-1 in increasing order of the original ids.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

/// The graph with vertex v renamed to perm[v]. perm must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Random connected graph: a random recursive spanning tree over a shuffled
/// vertex order, plus each pair independently with probability p.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace domlab
