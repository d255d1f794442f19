#include "domlab/reports.hpp"

#include "domlab/canonical.hpp"
#include "domlab/characterizations.hpp"
#include "domlab/graph6.hpp"
#include "domlab/parallel.hpp"
#include "domlab/products.hpp"
#include "domlab/solver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace domlab {

namespace {

template <typename Lines>
std::size_t count_kind(const Lines& lines, ReportLine::Kind kind)
{
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [&](const ReportLine& l) { return l.kind == kind; }));
}

ProductRow make_row(std::string kind, std::string left, std::string right, std::size_t order, int theorem)
{
    ProductRow row;
    row.kind = std::move(kind);
    row.left = std::move(left);
    row.right = std::move(right);
    row.order = order;
    row.theorem = theorem;
    return row;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<std::string> canonical_names(std::initializer_list<Graph> graphs, std::size_t n_max)
{
    std::vector<std::string> out;
    for (const auto& g : graphs)
        if (g.order() <= n_max)
            out.push_back(canonical_graph6(g));
    std::sort(out.begin(), out.end());
    return out;
}

std::string join_names(const std::vector<std::string>& names)
{
    std::string out;
    for (const auto& s : names)
        out += (out.empty() ? "" : ",") + s;
    return out.empty() ? "-" : out;
}

}  // namespace

std::size_t CrosscheckReport::mismatches() const { return count_kind(lines, ReportLine::Kind::mismatch); }
std::size_t CrosscheckReport::findings() const { return count_kind(lines, ReportLine::Kind::finding); }

std::size_t ProductReport::mismatches() const
{
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ProductRow& r) { return r.status == "MISMATCH"; }));
}

std::size_t ProductReport::findings() const
{
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ProductRow& r) { return r.status == "FINDING"; }));
}

CrosscheckReport crosscheck(std::size_t n_max, unsigned workers)
{
    if (n_max < 1 || n_max > 8)
        throw std::invalid_argument("crosscheck supports 1 <= n_max <= 8");
    CrosscheckReport report;
    report.n_max = n_max;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto graphs = enumerate_connected(n);
        const auto reports = parallel_map(graphs.size(), workers, [&](std::size_t i) { return classify(graphs[i]); });
        report.graphs += graphs.size();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const auto& r = reports[i];
            const auto name = to_graph6(graphs[i]);
            const std::string exact = std::to_string(r.exact_value);
            for (const auto& p : r.predicates)
                if (!p.agrees)
                    report.lines.push_back({ReportLine::Kind::mismatch,
                                            "MISMATCH\t" + name + "\t" + p.name + "\tholds="
                                                + (p.holds ? yes_no(*p.holds) : std::string("n/a"))
                                                + "\texact=" + exact});
            if (!r.necessity_holds)
                report.lines.push_back({ReportLine::Kind::mismatch, "MISMATCH\t" + name
                                                                        + "\tn_minus_2_necessity\tfailed="
                                                                        + r.n_minus_2->reason + "\texact=" + exact});
            if (r.sufficiency_gap)
                report.lines.push_back({ReportLine::Kind::finding, "FINDING\t" + name
                                                                       + "\tn_minus_2_sufficiency\tconditions hold\texact="
                                                                       + exact + " n=" + std::to_string(n)});
            if (r.exact_value == static_cast<int>(n))
                report.value_n.push_back(name);
            if (r.exact_value + 1 == static_cast<int>(n))
                report.value_n_minus_1.push_back(name);
        }
    }
    std::sort(report.value_n.begin(), report.value_n.end());
    std::sort(report.value_n_minus_1.begin(), report.value_n_minus_1.end());
    const auto expect_n = canonical_names({complete_graph(1), complete_graph(2)}, n_max);
    const auto expect_n1 = canonical_names({cycle_graph(3), path_graph(3), path_graph(4)}, n_max);
    if (report.value_n != expect_n)
        report.lines.push_back({ReportLine::Kind::mismatch,
                                "MISMATCH\tvalue_n_set\texpected=" + join_names(expect_n) + "\tactual="
                                    + join_names(report.value_n)});
    if (report.value_n_minus_1 != expect_n1)
        report.lines.push_back({ReportLine::Kind::mismatch,
                                "MISMATCH\tvalue_n_minus_1_set\texpected=" + join_names(expect_n1) + "\tactual="
                                    + join_names(report.value_n_minus_1)});
    return report;
}

std::vector<Graph> product_corpus()
{
    std::vector<Graph> candidates;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto& g : enumerate_connected(n))
            candidates.push_back(std::move(g));
    for (auto g : {path_graph(5), cycle_graph(5), cycle_graph(7), star_graph(3), star_graph(4)})
        candidates.push_back(std::move(g));
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (auto& g : candidates)
        if (seen.insert(canonical_graph6(g)).second)
            out.push_back(std::move(g));
    return out;
}

ProductReport product_check(std::size_t max_order, unsigned workers)
{
    const auto corpus = product_corpus();
    std::vector<std::function<ProductRow()>> tasks;

    for (const auto& g : corpus)
        for (const auto& h : corpus) {
            if (g.order() + h.order() <= max_order)
                tasks.emplace_back([&g, &h] {
                    const auto prediction = predict_join(g, h);
                    const auto product = join(g, h);
                    ProductRow row = make_row("join", to_graph6(g), to_graph6(h), product.graph.order(), prediction.value);
                    row.exact = roman2_domination_number(product.graph);
                    row.note = "k=" + std::to_string(prediction.k) + " gamma_argmin="
                               + std::to_string(prediction.gamma_argmin) + " gamma_other="
                               + std::to_string(prediction.gamma_other);
                    const bool ambiguity = prediction.value == 4 && *row.exact == 3 && prediction.k == 4
                                           && prediction.r2_other == 4 && prediction.gamma_other == 2;
                    if (*row.exact > 4)
                        row.status = "MISMATCH";
                    else if (*row.exact == prediction.value)
                        row.status = "ok";
                    else
                        row.status = ambiguity ? "FINDING" : "MISMATCH";
                    if (ambiguity)
                        row.note += " (gamma = 2 holds on the other factor)";
                    return row;
                });
            if (g.order() * (1 + h.order()) <= max_order)
                tasks.emplace_back([&g, &h] {
                    const auto theorem = corona_value(g, h);
                    const auto product = corona(g, h);
                    ProductRow row = make_row("corona", to_graph6(g), to_graph6(h), product.graph.order(), theorem.value);
                    row.exact = roman2_domination_number(product.graph);
                    row.certificate_ok = check_r2df(product.graph, theorem.certificate).valid
                                         && weight(theorem.certificate) == theorem.value;
                    row.status = *row.exact == theorem.value && row.certificate_ok ? "ok" : "MISMATCH";
                    return row;
                });
            if (g.order() * h.order() <= max_order)
                tasks.emplace_back([&g, &h] {
                    const auto bound = cartesian_upper(g, h);
                    const auto product = cartesian(g, h);
                    ProductRow row = make_row("cartesian", to_graph6(g), to_graph6(h), product.graph.order(), bound.value);
                    row.exact = roman2_domination_number(product.graph);
                    row.certificate_ok = check_r2df(product.graph, bound.certificate).valid
                                         && weight(bound.certificate) == bound.value;
                    row.status = *row.exact <= bound.value && row.certificate_ok ? "ok" : "MISMATCH";
                    row.note = *row.exact == bound.value ? "tight" : "slack";
                    return row;
                });
        }

    for (std::size_t n = 1; n <= max_order; ++n)
        for (std::size_t m = n; n * m <= max_order; ++m)
            tasks.emplace_back([n, m] {
                const auto theorem = complete_product_value(n, m);
                const auto product = cartesian(complete_graph(n), complete_graph(m));
                ProductRow row = make_row("complete", "K" + std::to_string(n), "K" + std::to_string(m), product.graph.order(),
                               theorem.value);
                row.exact = roman2_domination_number(product.graph);
                row.certificate_ok = check_r2df(product.graph, theorem.certificate).valid
                                     && weight(theorem.certificate) == theorem.value;
                row.status = *row.exact == theorem.value && row.certificate_ok ? "ok" : "MISMATCH";
                return row;
            });

    ProductReport report;
    report.rows = parallel_map(tasks.size(), workers, [&](std::size_t i) { return tasks[i](); });
    return report;
}

std::string format_crosscheck(const CrosscheckReport& report)
{
    std::string out;
    for (const auto& line : report.lines)
        out += line.text + "\n";
    out += "value_n\t" + join_names(report.value_n) + "\n";
    out += "value_n_minus_1\t" + join_names(report.value_n_minus_1) + "\n";
    out += "summary\tn_max=" + std::to_string(report.n_max) + "\tgraphs=" + std::to_string(report.graphs)
           + "\tmismatches=" + std::to_string(report.mismatches()) + "\tfindings=" + std::to_string(report.findings())
           + "\n";
    return out;
}

std::string format_products(const ProductReport& report)
{
    std::string out = "kind\tleft\tright\torder\ttheorem\texact\tcertificate\tstatus\tnote\n";
    for (const auto& r : report.rows)
        out += r.kind + "\t" + r.left + "\t" + r.right + "\t" + std::to_string(r.order) + "\t"
               + std::to_string(r.theorem) + "\t" + (r.exact ? std::to_string(*r.exact) : std::string("-")) + "\t"
               + (r.kind == "join" ? "-" : (r.certificate_ok ? "valid" : "INVALID")) + "\t" + r.status + "\t"
               + (r.note.empty() ? "-" : r.note) + "\n";
    out += "summary\trows=" + std::to_string(report.rows.size()) + "\tmismatches=" + std::to_string(report.mismatches())
           + "\tfindings=" + std::to_string(report.findings()) + "\n";
    return out;
}

}  // namespace domlab
