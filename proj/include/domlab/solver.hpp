#pragma once

#include "domlab/graph.hpp"
#include "domlab/labeling.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>

namespace domlab {

/// Largest order accepted by the exact solver.
inline constexpr std::size_t kMaxSolverOrder = 64;

struct SolveResult {
    int value = 0;
    Labeling certificate;
    std::uint64_t nodes = 0;
    std::chrono::nanoseconds elapsed{0};

    /// Positive-label vertices; the certificate set for dom and dom2.
    VertexSet support() const { return certificate.part(1) | certificate.part(2); }
};

/// Minimum weight of a labeling accepted by check(g, f, variant), together with
/// the lexicographically smallest optimal labeling.
///
/// Branch and bound over vertices in decreasing degree order (ties by id), trying
/// labels 0, 1, 2 in turn, seeded with a greedy incumbent. A second pass in id
/// order extracts the lexicographically smallest certificate of optimal weight.
/// The empty graph has value 0.
SolveResult solve(const Graph& g, Variant variant);

/// Lower bound on the additional weight any feasible completion of a partial
/// labeling must carry. partial[v] is the label of v, or -1 when unassigned.
/// std::nullopt means no completion exists (an assigned vertex can no longer
/// meet its requirement).
///
/// Each unmet requirement is counted in units; one unit of weight placed on an
/// unassigned vertex removes at most a bounded number of units, and the bound is
/// the outstanding units divided by the best such rate, rounded up.
std::optional<int> admissible_lower_bound(const Graph& g, Variant variant, std::span<const int> partial);

inline int domination_number(const Graph& g) { return solve(g, Variant::dom).value; }
inline int two_domination_number(const Graph& g) { return solve(g, Variant::dom2).value; }
inline int roman_domination_number(const Graph& g) { return solve(g, Variant::roman).value; }
inline int brace2_domination_number(const Graph& g) { return solve(g, Variant::brace2).value; }
inline int roman2_domination_number(const Graph& g) { return solve(g, Variant::roman2).value; }

}  // namespace domlab
