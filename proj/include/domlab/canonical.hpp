#pragma once

#include "domlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace domlab {

/// Largest order for which canonical forms are computed.
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Canonical relabeling of g: the vertex order minimizing the graph6 bit string
/// among all orders that list vertices by increasing refined color (iterated
/// degree refinement). Isomorphic graphs map to identical results.
/// Requires g.order() <= kMaxCanonicalOrder.
Graph canonical_form(const Graph& g);

/// graph6 encoding of canonical_form(g).
std::string canonical_graph6(const Graph& g);

/// True iff an adjacency-preserving bijection exists.
bool is_isomorphic(const Graph& g, const Graph& h);

/// Injective edge-preserving map from the vertices of pattern into target
/// (non-induced subgraph containment). embedding[i] is the image of pattern
/// vertex i. Requires target.order() <= 64.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& target, const Graph& pattern);

inline bool has_subgraph(const Graph& target, const Graph& pattern)
{
    return find_subgraph(target, pattern).has_value();
}

/// One representative per isomorphism class of graphs on n vertices, each in
/// canonical form, sorted by canonical graph6 string.
std::vector<Graph> enumerate_graphs(std::size_t n);

/// As enumerate_graphs, restricted to connected graphs. n <= 8 is the
/// supported range; n = 9 works but is slow.
std::vector<Graph> enumerate_connected(std::size_t n);

}  // namespace domlab
