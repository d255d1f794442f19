#pragma once

#include "domlab/graph.hpp"
#include "domlab/labeling.hpp"
#include "domlab/solver.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace domlab {

inline constexpr std::size_t kMaxGridRows = 6;

/// G_{m,n} = P_m x P_n. Vertex (row i, column j) has id i*n + j.
Graph grid_graph(std::size_t m, std::size_t n);

/// Column-DP state: the labels of the current column and, for each 0-labeled
/// row, the supply it still needs from its right neighbor after counting its
/// vertical and left neighbors.
struct ColumnState {
    std::vector<std::uint8_t> labels;
    std::vector<std::uint8_t> deficits;

    bool terminal() const;
    friend bool operator==(const ColumnState&, const ColumnState&) = default;
};

/// State of the leftmost column (no left neighbor).
ColumnState first_column(std::span<const std::uint8_t> labels);

/// State after appending a column; std::nullopt when some 0-vertex of the
/// current column would stay short (next[i] < deficits[i]).
std::optional<ColumnState> advance(const ColumnState& state, std::span<const std::uint8_t> next);

/// Exact gamma_R2(G_{m,n}) by a left-to-right transfer-matrix DP, 1 <= m <= 6.
/// The certificate uses the grid_graph numbering; among optimal predecessors
/// the one with the lexicographically smaller column labels is kept.
SolveResult grid_value(std::size_t m, std::size_t n);

/// Closed forms for gamma_2(G_{m,n}), n >= 2: n (m = 2), ceil(4n/3) (m = 3),
/// ceil((7n+3)/4) (m = 4, n >= 3). G_{2,1} = P_2 has gamma_2 = 2, so n = 1 is
/// rejected rather than answered wrongly.
int gamma2_grid_formula(std::size_t m, std::size_t n);

/// n for m = 2; for m = 3, floor((5n+3)/4) when n in {2,3,6} and
/// ceil((5n+3)/4) otherwise; for m = 4, floor((5n+4)/3) when n in
/// {2,3,5,6,9} and ceil((5n+4)/3) otherwise.
int r2_grid_bound_formula(std::size_t m, std::size_t n);

/// Roman {2}-dominating labeling of G_{m,n}, 2 <= m <= 4, n >= 2:
///   m = 2  one 1 per column, alternating between the rows
///   m = 3  for n >= 7, a 2 every fourth column alternating between the outer
///          rows, 0 at distance 1, 2 or 4 from a 2, 1 elsewhere, on the first
///          4k-1 columns; remaining columns completed optimally by the DP
///   m = 4  the DP optimum (also used for m = 3, n < 7)
Labeling build_grid_labeling(std::size_t m, std::size_t n);

struct GridTableRow {
    std::size_t m = 0;
    std::size_t n = 0;
    int dp_value = 0;
    std::optional<int> gamma2_formula;
    std::optional<int> r2_bound_formula;
    int construction_weight = 0;
    bool construction_valid = false;
    std::optional<bool> sharp;  // dp_value == gamma2_formula
    std::vector<std::string> findings;
};

/// Rows for m in {2, 3, 4} and 2 <= n <= n_max, checked against the closed
/// forms and the stated sharpness cases (m = 2, all n; m = 3, n <= 13;
/// G_{4,4}). Disagreements become findings.
std::vector<GridTableRow> sharpness_table(std::size_t n_max, unsigned workers = 1);

/// TSV with columns m, n, dp, gamma2, bound, construction_weight, sharp, finding.
std::string format_grid_tsv(const std::vector<GridTableRow>& rows);

}  // namespace domlab
