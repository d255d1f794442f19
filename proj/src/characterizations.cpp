#include "domlab/characterizations.hpp"

#include "domlab/canonical.hpp"
#include "domlab/graph6.hpp"
#include "domlab/parallel.hpp"
#include "domlab/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace domlab {

namespace {

void require_order(const Graph& g, std::size_t minimum, const char* what)
{
    if (g.order() < minimum)
        throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(minimum) + " vertices");
}

void require_connected(const Graph& g, const char* what)
{
    if (!is_connected(g))
        throw std::invalid_argument(std::string(what) + " needs a connected graph");
}

bool isomorphic_to_any(const Graph& g, std::initializer_list<Graph> candidates)
{
    return std::any_of(candidates.begin(), candidates.end(), [&](const Graph& h) { return is_isomorphic(g, h); });
}

// gamma_2 with the convention gamma_2(K_0) = 0.
int two_domination_or_zero(const Graph& g) { return g.order() == 0 ? 0 : two_domination_number(g); }

}  // namespace

std::string_view forbidden_name(ForbiddenKind kind)
{
    switch (kind) {
    case ForbiddenKind::p7: return "P7";
    case ForbiddenKind::c6: return "C6";
    case ForbiddenKind::e6hat: return "E6hat";
    case ForbiddenKind::d7: return "D7";
    case ForbiddenKind::h2: return "H2";
    }
    return "?";
}

Graph forbidden_graph(ForbiddenKind kind)
{
    switch (kind) {
    case ForbiddenKind::p7: return path_graph(7);
    case ForbiddenKind::c6: return cycle_graph(6);
    case ForbiddenKind::e6hat: return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    case ForbiddenKind::d7: return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}});
    case ForbiddenKind::h2: return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}});
    }
    throw std::invalid_argument("unknown forbidden graph");
}

bool check_value_2(const Graph& g)
{
    require_order(g, 2, "check_value_2");
    const std::size_t n = g.order();
    if (max_degree(g) == n - 1)
        return true;
    // Two nonadjacent vertices adjacent to everything else: both have degree n-2.
    const auto candidates = degree_class(g, n - 2).members();
    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = a + 1; b < candidates.size(); ++b)
            if (!g.adjacent(candidates[a], candidates[b]))
                return true;
    return false;
}

bool check_value_3(const Graph& g)
{
    require_order(g, 3, "check_value_3");
    const std::size_t n = g.order();
    const std::size_t delta = max_degree(g);
    if (delta == n - 2)
        return is_clique(g, degree_class(g, n - 2));
    if (delta < n - 2)
        return two_domination_number(g) == 3;
    return false;
}

bool check_value_4(const Graph& g)
{
    require_order(g, 4, "check_value_4");
    const std::size_t n = g.order();
    if (max_degree(g) > n - 3)
        return false;
    const int gamma2 = two_domination_number(g);
    if (gamma2 < 4)
        return false;
    if (gamma2 == 4 || domination_number(g) == 2)
        return true;
    for (Vertex v = 0; v < n; ++v) {
        const auto rest = VertexSet::full(n) - neighborhood(g, v, Neighborhood::closed);
        if (two_domination_or_zero(induced_subgraph(g, rest)) == 2)
            return true;
    }
    return false;
}

bool check_value_n(const Graph& g)
{
    require_connected(g, "check_value_n");
    return isomorphic_to_any(g, {complete_graph(1), complete_graph(2)});
}

bool check_value_n_minus_1(const Graph& g)
{
    require_connected(g, "check_value_n_minus_1");
    return isomorphic_to_any(g, {cycle_graph(3), path_graph(3), path_graph(4)});
}

Verdict check_n_minus_2_conditions(const Graph& g)
{
    require_order(g, 3, "check_n_minus_2_conditions");
    require_connected(g, "check_n_minus_2_conditions");
    const std::size_t n = g.order();
    Verdict out;
    out.valid = false;

    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 3) {
            out.reason = "max-degree";
            out.witnesses = {v};
            return out;
        }

    const auto cubic = degree_class(g, 3).members();
    for (std::size_t a = 0; a < cubic.size(); ++a)
        for (std::size_t b = a + 1; b < cubic.size(); ++b) {
            const Vertex u = cubic[a];
            const Vertex v = cubic[b];
            if (!g.adjacent(u, v) && common_neighbors(g, u, v).size() != 2) {
                out.reason = "common-neighbors";
                out.witnesses = {u, v};
                return out;
            }
        }

    for (auto kind : kAllForbidden)
        if (auto embedding = find_subgraph(g, forbidden_graph(kind))) {
            out.reason = "forbidden-subgraph:" + std::string(forbidden_name(kind));
            out.witnesses = std::move(*embedding);
            return out;
        }

    return Verdict{};
}

ClassReport classify(const Graph& g)
{
    require_connected(g, "classify");
    ClassReport report;
    const std::size_t n = g.order();
    report.order = n;
    report.exact_value = roman2_domination_number(g);
    const int exact = report.exact_value;

    auto add = [&](std::string name, int target, std::optional<bool> holds) {
        PredicateOutcome p{std::move(name), target, holds, true};
        p.agrees = holds ? *holds == (exact == target) : exact != target;
        report.consistent = report.consistent && p.agrees;
        report.predicates.push_back(std::move(p));
    };
    const int order = static_cast<int>(n);
    add("value_2", 2, n >= 2 ? std::optional(check_value_2(g)) : std::nullopt);
    add("value_3", 3, n >= 3 ? std::optional(check_value_3(g)) : std::nullopt);
    add("value_4", 4, n >= 4 ? std::optional(check_value_4(g)) : std::nullopt);
    add("value_n", order, check_value_n(g));
    add("value_n_minus_1", order - 1, check_value_n_minus_1(g));

    if (n >= 3) {
        report.n_minus_2 = check_n_minus_2_conditions(g);
        const bool at_n_minus_2 = exact == order - 2;
        report.necessity_holds = !at_n_minus_2 || report.n_minus_2->valid;
        report.sufficiency_gap = report.n_minus_2->valid && !at_n_minus_2;
        report.consistent = report.consistent && report.necessity_holds;
    }
    return report;
}

NMinus2Catalog n_minus_2_catalog(std::size_t max_n, unsigned workers)
{
    if (max_n > 8)
        throw std::invalid_argument("catalog generation supports n <= 8");
    NMinus2Catalog catalog;
    catalog.max_n = max_n;
    for (std::size_t n = 3; n <= max_n; ++n) {
        const auto graphs = enumerate_connected(n);
        const auto entries = parallel_map(graphs.size(), workers, [&](std::size_t i) {
            const auto& g = graphs[i];
            return CatalogEntry{to_graph6(g), n, roman2_domination_number(g), check_n_minus_2_conditions(g).valid};
        });
        for (const auto& e : entries) {
            if (e.value == static_cast<int>(n) - 2)
                catalog.members.push_back(e);
            else if (e.conditions_hold)
                catalog.sufficiency_gaps.push_back(e);
        }
    }
    auto by_string = [](const CatalogEntry& a, const CatalogEntry& b) { return a.graph6 < b.graph6; };
    std::sort(catalog.members.begin(), catalog.members.end(), by_string);
    std::sort(catalog.sufficiency_gaps.begin(), catalog.sufficiency_gaps.end(), by_string);
    return catalog;
}

std::string format_catalog(const NMinus2Catalog& catalog)
{
    const auto failing = std::count_if(catalog.members.begin(), catalog.members.end(),
                                       [](const CatalogEntry& e) { return !e.conditions_hold; });
    std::string out;
    out += "# connected graphs with gamma_R2 = n-2, 3 <= n <= " + std::to_string(catalog.max_n) + "\n";
    out += "# generator: exhaustive canonical enumeration + exact branch and bound\n";
    out += "# members=" + std::to_string(catalog.members.size()) + " conditions_fail=" + std::to_string(failing)
           + " sufficiency_gaps=" + std::to_string(catalog.sufficiency_gaps.size()) + "\n";
    for (const auto& e : catalog.members)
        out += e.graph6 + "\n";
    for (const auto& e : catalog.members)
        if (!e.conditions_hold)
            out += "# conditions-fail " + e.graph6 + "\n";
    for (const auto& e : catalog.sufficiency_gaps)
        out += "# sufficiency-gap " + e.graph6 + " n=" + std::to_string(e.order) + " value=" + std::to_string(e.value)
               + "\n";
    return out;
}

}  // namespace domlab
