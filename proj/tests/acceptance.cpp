// Acceptance run: one PASS/FAIL line per criterion, with its time budget.
// Exit status is nonzero when any criterion fails.

#include "domlab/canonical.hpp"
#include "domlab/characterizations.hpp"
#include "domlab/cli.hpp"
#include "domlab/graph6.hpp"
#include "domlab/grid.hpp"
#include "domlab/products.hpp"
#include "domlab/reports.hpp"
#include "domlab/solver.hpp"

#include "oracle.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace domlab;

namespace {

struct Result {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Result()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds)
        r.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(budget_seconds) + " s");
    if (!r.ok)
        ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "AC" << id << " " << (r.ok ? "PASS" : "FAIL") << "  " << title << "  [" << seconds << " s]";
    if (!r.detail.empty())
        line << "  " << r.detail;
    std::cout << line.str() << std::endl;
}

std::string g6(const Graph& g) { return to_graph6(g); }

Result closed_forms()
{
    Result r;
    for (std::size_t n = 1; n <= 14; ++n) {
        const int p = roman2_domination_number(path_graph(n));
        if (p != static_cast<int>((n + 2) / 2))
            r.fail("P" + std::to_string(n) + " gives " + std::to_string(p));
    }
    // C_1 and C_2 are not simple graphs; cycles start at three vertices.
    for (std::size_t n = 3; n <= 14; ++n) {
        const int c = roman2_domination_number(cycle_graph(n));
        if (c != static_cast<int>((n + 1) / 2))
            r.fail("C" + std::to_string(n) + " gives " + std::to_string(c));
    }
    r.detail = r.ok ? "P_1..P_14, C_3..C_14 exact" : r.detail;
    return r;
}

Result characterization_equivalence()
{
    Result r;
    std::size_t graphs = 0, mismatches = 0;
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n)) {
            ++graphs;
            const int exact = roman2_domination_number(g);
            auto compare = [&](bool holds, int k) {
                if (holds != (exact == k)) {
                    ++mismatches;
                    r.fail(g6(g) + " value_" + std::to_string(k) + " holds=" + (holds ? "true" : "false")
                           + " exact=" + std::to_string(exact));
                }
            };
            compare(check_value_2(g), 2);
            if (n >= 3)
                compare(check_value_3(g), 3);
            if (n >= 4)
                compare(check_value_4(g), 4);
        }
    if (r.ok)
        r.detail = std::to_string(graphs) + " graphs, 0 mismatches";
    else
        r.detail += " (" + std::to_string(mismatches) + " mismatches)";
    return r;
}

Result extreme_values()
{
    Result r;
    std::vector<Graph> value_n, value_n1;
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n)) {
            const int exact = roman2_domination_number(g);
            if (exact == static_cast<int>(n))
                value_n.push_back(g);
            if (exact + 1 == static_cast<int>(n))
                value_n1.push_back(g);
        }
    auto same_set = [](const std::vector<Graph>& found, const std::vector<Graph>& expected) {
        if (found.size() != expected.size())
            return false;
        for (const auto& e : expected)
            if (std::none_of(found.begin(), found.end(), [&](const Graph& f) { return oracle::isomorphic(f, e); }))
                return false;
        return true;
    };
    if (!same_set(value_n, {complete_graph(1), complete_graph(2)}))
        r.fail("value n set has " + std::to_string(value_n.size()) + " members");
    if (!same_set(value_n1, {cycle_graph(3), path_graph(3), path_graph(4)}))
        r.fail("value n-1 set has " + std::to_string(value_n1.size()) + " members");
    if (r.ok)
        r.detail = "{K1,K2} and {C3,P3,P4}";
    return r;
}

Result n_minus_2_necessity()
{
    Result r;
    std::size_t members = 0;
    for (std::size_t n = 3; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n)) {
            if (roman2_domination_number(g) + 2 != static_cast<int>(n))
                continue;
            ++members;
            const auto v = check_n_minus_2_conditions(g);
            if (!v.valid)
                r.fail(g6(g) + " violates " + v.reason);
        }
    const auto catalog = n_minus_2_catalog(7);
    std::ostringstream d;
    d << members << " graphs with value n-2, 0 violations; catalog " << catalog.members.size() << " members, "
      << catalog.sufficiency_gaps.size() << " sufficiency FINDINGs";
    if (r.ok)
        r.detail = d.str();
    for (const auto& gap : catalog.sufficiency_gaps)
        std::cout << "  FINDING conditions hold but value != n-2: " << gap.graph6 << " n=" << gap.order
                  << " value=" << gap.value << "\n";
    return r;
}

Result corona_theorem()
{
    Result r;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& g : enumerate_connected(n))
            for (const auto& h : {complete_graph(1), complete_graph(2)}) {
                const auto theorem = corona_value(g, h);
                const auto product = corona(g, h).graph;
                const int exact = roman2_domination_number(product);
                ++checked;
                if (exact != theorem.value)
                    r.fail(g6(g) + " o " + g6(h) + ": theorem " + std::to_string(theorem.value) + " exact "
                           + std::to_string(exact));
                if (!check_r2df(product, theorem.certificate).valid || weight(theorem.certificate) != theorem.value)
                    r.fail(g6(g) + " o " + g6(h) + ": certificate rejected");
            }
    if (r.ok)
        r.detail = std::to_string(checked) + " coronas exact, certificates valid";
    return r;
}

Result complete_products()
{
    Result r;
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t m = n; n * m <= 12; ++m) {
            const int exact = roman2_domination_number(cartesian(complete_graph(n), complete_graph(m)).graph);
            if (exact != static_cast<int>(std::min(m, 2 * n)))
                r.fail("K" + std::to_string(n) + "xK" + std::to_string(m) + " exact " + std::to_string(exact));
        }
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t m = n; m <= 8; ++m) {
            const auto c = complete_product_value(n, m);
            const auto g = cartesian(complete_graph(n), complete_graph(m)).graph;
            if (!check_r2df(g, c.certificate).valid || weight(c.certificate) != static_cast<int>(std::min(m, 2 * n)))
                r.fail("construction K" + std::to_string(n) + "xK" + std::to_string(m));
        }
    if (r.ok)
        r.detail = "exact for nm <= 12, constructions valid for n <= m <= 8";
    return r;
}

Result join_theorem()
{
    Result r;
    const auto corpus = product_corpus();
    std::size_t pairs = 0, ambiguous = 0;
    for (const auto& g : corpus)
        for (const auto& h : corpus) {
            if (g.order() + h.order() > 11)
                continue;
            ++pairs;
            const auto p = predict_join(g, h);
            const int exact = roman2_domination_number(join(g, h).graph);
            if ((exact == 2) != (p.k <= 2))
                r.fail("value 2 iff k <= 2 fails for " + g6(g) + " v " + g6(h));
            if (exact == p.value)
                continue;
            const bool documented = p.value == 4 && exact == 3 && p.k == 4 && p.r2_other == 4 && p.gamma_other == 2;
            if (!documented) {
                r.fail(g6(g) + " v " + g6(h) + ": predicted " + std::to_string(p.value) + " exact "
                       + std::to_string(exact));
                continue;
            }
            ++ambiguous;
            std::cout << "  FINDING join " << g6(g) << " v " << g6(h) << ": literal prediction 4, exact 3 "
                      << "(gamma = 2 holds on the other factor)\n";
        }
    if (r.ok)
        r.detail = std::to_string(pairs) + " pairs; " + std::to_string(ambiguous)
                   + " disagreements, all in the documented ambiguity class";
    return r;
}

Result grid_dp()
{
    Result r;
    for (std::size_t m = 1; m <= 16; ++m)
        for (std::size_t n = 1; m * n <= 16; ++n) {
            // The DP runs along the longer side; G_{m,n} and G_{n,m} are the same graph.
            const int dp = grid_value(std::min(m, n), std::max(m, n)).value;
            const int bb = roman2_domination_number(cartesian(path_graph(m), path_graph(n)).graph);
            if (dp != bb)
                r.fail("G" + std::to_string(m) + "," + std::to_string(n) + ": dp " + std::to_string(dp) + " b&b "
                       + std::to_string(bb));
        }
    std::string finding;
    for (std::size_t n = 1; n <= 30; ++n) {
        const int dp = grid_value(2, n).value;
        if (dp == static_cast<int>(n))
            continue;
        // G_{2,1} is K_2, whose value is 2 by exhaustive search; the closed form
        // n cannot hold there and the mismatch is reported rather than failed.
        if (n == 1 && dp == 2 && oracle::minimum(grid_graph(2, 1), Variant::roman2) == 2) {
            finding = "; FINDING G2,1 = K2 has value 2, closed form n gives 1";
            std::cout << "  FINDING G2,1: dp 2 = exhaustive 2, closed form n = 1 does not hold for n = 1\n";
            continue;
        }
        r.fail("G2," + std::to_string(n) + " differs from n");
    }
    for (std::size_t m = 3; m <= 4; ++m)
        for (std::size_t n = 1; n <= 30; ++n)
            if (grid_value(m, n).value > r2_grid_bound_formula(m, n))
                r.fail("G" + std::to_string(m) + "," + std::to_string(n) + " exceeds the bound");
    const int g44 = grid_value(4, 4).value;
    if (g44 != 8 || two_domination_number(grid_graph(4, 4)) != 8)
        r.fail("G4,4 gives " + std::to_string(g44));
    if (r.ok)
        r.detail = "dp = b&b for mn <= 16; G2,n = n for 2 <= n <= 30; bounds hold to n = 30; G4,4 = 8 = gamma2"
                   + finding;
    return r;
}

Result sharpness_audit()
{
    Result r;
    const auto rows = sharpness_table(13);
    bool n13_finding = false;
    for (const auto& row : rows) {
        if (row.m != 3)
            continue;
        const int target = (4 * static_cast<int>(row.n) + 2) / 3;
        std::cout << "  G3," << row.n << ": dp " << row.dp_value << ", ceil(4n/3) " << target << ", "
                  << (row.dp_value == target ? "equal" : "differs");
        for (const auto& f : row.findings)
            std::cout << "  FINDING " << f;
        std::cout << "\n";
        if (row.n == 13)
            n13_finding = !row.findings.empty();
    }
    if (!n13_finding)
        r.fail("the n = 13 row carries no finding");
    std::ostringstream args_out, args_err;
    const char* argv[] = {"domlab", "grid-table", "--nmax", "13"};
    if (cli::run(4, argv, args_out, args_err) != 0)
        r.fail("grid-table exited nonzero");
    if (r.ok)
        r.detail = "n = 13 row reported as FINDING, dp arbitrates";
    return r;
}

Result invariants()
{
    Result r;
    std::mt19937_64 rng(oracle::seed());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        const auto g = random_connected_graph(n, 0.15 + 0.1 * static_cast<double>(rng() % 6), rng);
        const int gamma = domination_number(g);
        const int r2 = roman2_domination_number(g);
        const int gamma2 = two_domination_number(g);
        const int roman = roman_domination_number(g);
        const int brace = brace2_domination_number(g);
        const bool ok = gamma <= r2 && r2 <= std::min({gamma2, roman, 2 * gamma}) && r2 <= brace;
        if (!ok)
            r.fail(g6(g) + " breaks the chain");
    }
    if (r.ok)
        r.detail = "200 graphs, seed " + std::to_string(oracle::seed());
    return r;
}

Result format_fidelity()
{
    Result r;
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            ++graphs;
            if (parse_graph6(to_graph6(g)) != g)
                r.fail("round trip fails for " + g6(g));
        }

    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / ("domlab-acceptance-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    std::mt19937_64 rng(oracle::seed() + 7);
    std::size_t agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_connected_graph(1 + rng() % 12, 0.3, rng);
        const auto variant = kAllVariants[rng() % 5];
        Labeling f(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            f.set(v, static_cast<int>(rng() % (max_label(variant) + 1)));
        const auto gpath = (dir / "g.g6").string();
        const auto fpath = (dir / "f.lab").string();
        std::ofstream(gpath) << to_graph6(g) << "\n";
        std::ofstream(fpath) << to_labeling_text(f);
        const std::string name(variant_name(variant));
        const char* argv[] = {"domlab", "verify", "--variant", name.c_str(), gpath.c_str(), fpath.c_str()};
        std::ostringstream out, err;
        const int code = cli::run(6, argv, out, err);
        if (code == (check(g, f, variant).valid ? 0 : 1))
            ++agree;
        else
            r.fail("verify disagrees on " + g6(g));
    }
    fs::remove_all(dir);
    if (r.ok)
        r.detail = std::to_string(graphs) + " graphs round trip; verify agrees on " + std::to_string(agree) + "/100";
    return r;
}

}  // namespace

int main()
{
    criterion(1, "closed forms for paths and cycles", 30, closed_forms);
    criterion(2, "value 2/3/4 characterizations, connected n = 2..7", 600, characterization_equivalence);
    criterion(3, "value n and n-1 graphs, n <= 7", 600, extreme_values);
    criterion(4, "n-2 necessary conditions, n <= 7", 600, n_minus_2_necessity);
    criterion(5, "corona theorem, n_G <= 4, H in {K1, K2}", 300, corona_theorem);
    criterion(6, "K_n x K_m = min{m, 2n}", 300, complete_products);
    criterion(7, "join theorem over the corpus, order <= 11", 300, join_theorem);
    criterion(8, "grid DP correctness and bounds", 60, grid_dp);
    criterion(9, "G_3,n sharpness audit, n <= 13", 60, sharpness_audit);
    criterion(10, "domination chain on 200 random graphs", 300, invariants);
    criterion(11, "graph6 round trip and verify fidelity", 300, format_fidelity);
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
