#pragma once

#include "domlab/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace domlab {

/// One line of a verification report. Mismatches fail a run; findings are
/// documented disagreements with the literal statements and do not.
struct ReportLine {
    enum class Kind { mismatch, finding };
    Kind kind = Kind::mismatch;
    std::string text;
};

struct CrosscheckReport {
    std::size_t n_max = 0;
    std::size_t graphs = 0;
    std::vector<std::string> value_n;          // canonical graph6 of graphs with value n
    std::vector<std::string> value_n_minus_1;  // ... with value n-1
    std::vector<ReportLine> lines;

    std::size_t mismatches() const;
    std::size_t findings() const;
};

/// Every connected graph with 1 <= n <= n_max against the value-2/3/4
/// predicates, the value-n and value-(n-1) lists and the n-2 conditions
/// (necessity as mismatches, sufficiency gaps as findings). n_max <= 8.
CrosscheckReport crosscheck(std::size_t n_max, unsigned workers = 1);

struct ProductRow {
    std::string kind;  // join, corona, cartesian, complete
    std::string left;
    std::string right;
    std::size_t order = 0;
    int theorem = 0;
    std::optional<int> exact;
    bool certificate_ok = true;  // no certificate for join rows
    std::string status;          // ok, MISMATCH, FINDING
    std::string note;
};

struct ProductReport {
    std::vector<ProductRow> rows;
    std::size_t mismatches() const;
    std::size_t findings() const;
};

/// Built-in corpus: connected graphs with n <= 4 plus P5, C5, C7, K_{1,3},
/// K_{1,4}, deduplicated up to isomorphism.
std::vector<Graph> product_corpus();

/// Join, corona and Cartesian theorems over the corpus for products of order
/// <= max_order, plus K_n x K_m for n <= m, nm <= max_order.
///
/// A join row whose literal prediction is 4 while the exact value is 3, with
/// k = 4 attained by both factors and gamma = 2 on the non-argmin one, is the
/// documented ambiguity of the join theorem and becomes a finding.
ProductReport product_check(std::size_t max_order = 12, unsigned workers = 1);

std::string format_crosscheck(const CrosscheckReport& report);
std::string format_products(const ProductReport& report);

}  // namespace domlab
