#pragma once

#include "domlab/graph.hpp"
#include "domlab/labeling.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domlab {

enum class ForbiddenKind { p7, c6, e6hat, d7, h2 };

inline constexpr ForbiddenKind kAllForbidden[] = {ForbiddenKind::p7, ForbiddenKind::c6, ForbiddenKind::e6hat,
                                                  ForbiddenKind::d7, ForbiddenKind::h2};

std::string_view forbidden_name(ForbiddenKind kind);

/// Fixed numberings:
///   p7    path 0-1-2-3-4-5-6
///   c6    cycle 0-1-2-3-4-5-0
///   e6hat center 0; 1,2,3 adjacent to 0; leaf i+3 hangs off i
///   d7    center 0 with leaves 1 and 2; long arm 0-3-4-5-6
///   h2    4-cycle 0-1-2-3-0 with pendant path 0-4-5
Graph forbidden_graph(ForbiddenKind kind);

/// gamma_R2(G) = 2 structurally: some vertex has degree n-1, or two nonadjacent
/// vertices are both adjacent to every other vertex. Requires n >= 2.
bool check_value_2(const Graph& g);

/// gamma_R2(G) = 3 structurally: Delta = n-2 and N_{n-2}(G) is a clique, or
/// Delta < n-2 and gamma_2(G) = 3. Requires n >= 3.
bool check_value_3(const Graph& g);

/// gamma_R2(G) = 4 structurally: Delta <= n-3 and gamma_2(G) >= 4, together with
/// one of gamma(G) = 2, gamma_2(G) = 4, or gamma_2(G - N[v]) = 2 for some v.
/// Requires n >= 4.
bool check_value_4(const Graph& g);

/// G is K_1 or K_2. Requires G connected.
bool check_value_n(const Graph& g);

/// G is C_3, P_3 or P_4. Requires G connected.
bool check_value_n_minus_1(const Graph& g);

/// Necessary conditions for gamma_R2(G) = n-2 on a connected graph with n >= 3:
///   (i)   Delta(G) <= 3                      reason "max-degree", witness vertex
///   (ii)  nonadjacent degree-3 pairs share exactly two neighbors
///                                            reason "common-neighbors", witness pair
///   (iii) none of P7, C6, E6hat, D7, H2 is a subgraph
///                                            reason "forbidden-subgraph:<name>", witness embedding
Verdict check_n_minus_2_conditions(const Graph& g);

struct PredicateOutcome {
    std::string name;
    int target = 0;             // the gamma_R2 value the predicate characterizes
    std::optional<bool> holds;  // nullopt outside the predicate's domain
    bool agrees = true;         // holds == (exact == target), or n/a
};

struct ClassReport {
    std::size_t order = 0;
    int exact_value = 0;
    std::vector<PredicateOutcome> predicates;  // value_2, value_3, value_4, value_n, value_n_minus_1
    std::optional<Verdict> n_minus_2;          // conditions (i)-(iii), when n >= 3
    bool necessity_holds = true;               // exact == n-2 implies the conditions
    bool sufficiency_gap = false;              // conditions hold but exact != n-2
    bool consistent = true;                    // all predicates agree and necessity holds
};

/// Runs every predicate alongside the exact solver. Requires G connected.
ClassReport classify(const Graph& g);

struct CatalogEntry {
    std::string graph6;  // canonical
    std::size_t order = 0;
    int value = 0;
    bool conditions_hold = false;
};

struct NMinus2Catalog {
    std::size_t max_n = 0;
    std::vector<CatalogEntry> members;          // exact value n-2
    std::vector<CatalogEntry> sufficiency_gaps;  // conditions hold, value != n-2
};

/// All connected graphs with 3 <= n <= max_n and gamma_R2 = n-2, sorted by
/// canonical graph6. workers only affects speed.
NMinus2Catalog n_minus_2_catalog(std::size_t max_n, unsigned workers = 1);

/// Text form: comment header, one graph6 string per line, then comment lines
/// for condition failures and sufficiency gaps.
std::string format_catalog(const NMinus2Catalog& catalog);

}  // namespace domlab
