#pragma once

#include "domlab/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace domlab {

/// Malformed textual input. offset() is the byte (graph6) or line (edge list,
/// labeling) where the problem was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Largest order representable with a single-byte graph6 header.
inline constexpr std::size_t kMaxGraph6Order = 62;

/// graph6: header byte n+63, then the upper triangle in column order
/// (x01, x02, x12, x03, ...) packed six bits per byte, each byte +63, with the
/// final byte zero-padded. Trailing whitespace is ignored; nonzero padding bits
/// are rejected.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge list: first line "n m", then m lines "u v" (0-based). Text after '#'
/// is a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

enum class GraphFormat { automatic, graph6, edge_list };

/// Parses a graph file. Automatic detection picks the edge-list format when the
/// first non-comment line holds two integers, graph6 otherwise.
Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);

}  // namespace domlab
