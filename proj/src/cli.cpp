#include "domlab/cli.hpp"

#include "domlab/canonical.hpp"
#include "domlab/characterizations.hpp"
#include "domlab/graph6.hpp"
#include "domlab/grid.hpp"
#include "domlab/labeling.hpp"
#include "domlab/reports.hpp"
#include "domlab/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace domlab::cli {

namespace {

// Input problems the user can fix: missing files, bad flags, malformed text.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph(const std::string& path, GraphFormat format)
{
    return read_graph(slurp(path), format);
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text))
        throw InputError("cannot write " + path);
}

// Lines starting with "FINDING" are echoed to the diagnostic stream.
void echo_findings(const std::string& text, std::ostream& err)
{
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
        if (line.find("FINDING") != std::string::npos)
            err << line << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_witnesses(const std::vector<Vertex>& witnesses)
{
    std::string out;
    for (auto v : witnesses)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

struct Options {
    std::string graph_path;
    std::string labeling_path;
    Variant variant = Variant::roman2;
    GraphFormat format = GraphFormat::automatic;
    std::size_t nmax = 0;  // set from the chosen report subcommand
    std::size_t max_order = 12;
    unsigned workers = 1;
    std::string out_path;
};

int cmd_solve(const Options& o, std::ostream& out)
{
    const auto g = load_graph(o.graph_path, o.format);
    const auto result = solve(g, o.variant);
    out << "value=" << result.value << "\n" << to_labeling_text(result.certificate);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto g = load_graph(o.graph_path, o.format);
    const auto f = parse_labeling(slurp(o.labeling_path), g.order());
    const auto verdict = check(g, f, o.variant);
    if (verdict) {
        out << "valid weight=" << weight(f) << "\n";
        return kExitOk;
    }
    out << "invalid reason=" << verdict.reason << "\n";
    for (auto v : verdict.witnesses)
        out << "witness " << v << "\n";
    return kExitInvalid;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    const auto g = load_graph(o.graph_path, o.format);
    if (g.order() == 0 || !is_connected(g))
        throw InputError("classify needs a connected graph");
    const auto report = classify(g);
    out << "graph\t" << to_graph6(g) << "\n";
    out << "order\t" << report.order << "\n";
    out << "exact\t" << report.exact_value << "\n";
    out << "predicate\ttarget\tholds\tagrees\n";
    for (const auto& p : report.predicates)
        out << p.name << "\t" << p.target << "\t" << (p.holds ? (*p.holds ? "true" : "false") : "n/a") << "\t"
            << yes_no(p.agrees) << "\n";
    if (report.n_minus_2) {
        const auto& v = *report.n_minus_2;
        out << "n_minus_2_conditions\t" << (v.valid ? "hold" : "fail") << "\t" << v.reason;
        if (!v.witnesses.empty())
            out << "\twitness " << join_witnesses(v.witnesses);
        out << "\n";
    } else {
        out << "n_minus_2_conditions\tn/a\n";
    }
    out << "necessity\t" << yes_no(report.necessity_holds) << "\n";
    out << "sufficiency_gap\t" << yes_no(report.sufficiency_gap) << "\n";
    out << "consistent\t" << yes_no(report.consistent) << "\n";
    return kExitOk;
}

int cmd_crosscheck(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto report = crosscheck(o.nmax, o.workers);
    const auto text = format_crosscheck(report);
    emit(text, o.out_path, out);
    echo_findings(text, err);
    return report.mismatches() == 0 ? kExitOk : kExitInvalid;
}

int cmd_grid_table(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto text = format_grid_tsv(sharpness_table(o.nmax, o.workers));
    emit(text, o.out_path, out);
    echo_findings(text, err);
    return kExitOk;
}

int cmd_product_check(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto report = product_check(o.max_order, o.workers);
    const auto text = format_products(report);
    emit(text, o.out_path, out);
    echo_findings(text, err);
    return report.mismatches() == 0 ? kExitOk : kExitInvalid;
}

int cmd_catalog(const Options& o, std::ostream& out)
{
    emit(format_catalog(n_minus_2_catalog(o.nmax, o.workers)), o.out_path, out);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Roman {2}-domination toolkit", "domlab"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    const std::map<std::string, Variant> variants{{"dom", Variant::dom},
                                                  {"dom2", Variant::dom2},
                                                  {"roman", Variant::roman},
                                                  {"brace2", Variant::brace2},
                                                  {"roman2", Variant::roman2}};
    const std::map<std::string, GraphFormat> formats{
        {"auto", GraphFormat::automatic}, {"graph6", GraphFormat::graph6}, {"edgelist", GraphFormat::edge_list}};

    auto add_graph_flags = [&](CLI::App* sub, bool with_variant) {
        sub->add_option("graph", o.graph_path, "graph file (graph6 or edge list)")->required();
        sub->add_option("--format", o.format, "input format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        if (with_variant)
            sub->add_option("--variant", o.variant, "labeling family")
                ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));
    };
    auto* solve_cmd = app.add_subcommand("solve", "exact minimum labeling and a certificate");
    add_graph_flags(solve_cmd, true);
    solve_cmd->callback([&] { action = [&] { return cmd_solve(o, out); }; });

    auto* verify_cmd = app.add_subcommand("verify", "check a labeling; exit 1 when it is not valid");
    add_graph_flags(verify_cmd, true);
    verify_cmd->add_option("labeling", o.labeling_path, "labeling file, lines 'v label'")->required();
    verify_cmd->callback([&] { action = [&] { return cmd_verify(o, out); }; });

    auto* classify_cmd = app.add_subcommand("classify", "structural predicates against the exact value");
    add_graph_flags(classify_cmd, false);
    classify_cmd->callback([&] { action = [&] { return cmd_classify(o, out); }; });

    // Report subcommands keep separate --nmax defaults.
    auto* cross_cmd = app.add_subcommand("crosscheck", "all connected graphs up to --nmax vertices");
    auto* grid_cmd = app.add_subcommand("grid-table", "grid sharpness table for m = 2, 3, 4");
    auto* product_cmd = app.add_subcommand("product-check", "join, corona and Cartesian product theorems");
    auto* catalog_cmd = app.add_subcommand("catalog", "connected graphs with value n-2");

    std::size_t cross_nmax = 7, grid_nmax = 13, catalog_nmax = 7;
    for (auto [sub, target, limit] : {std::tuple{cross_cmd, &cross_nmax, std::size_t{8}},
                                      std::tuple{grid_cmd, &grid_nmax, std::size_t{40}},
                                      std::tuple{catalog_cmd, &catalog_nmax, std::size_t{8}}}) {
        sub->add_option("--nmax", *target, "largest size to cover")->check(CLI::Range(std::size_t{1}, limit));
        sub->add_option("--workers", o.workers, "worker threads (output is identical for any count)")
            ->check(CLI::Range(1U, 256U));
        sub->add_option("--out", o.out_path, "write the report here instead of stdout");
    }
    product_cmd->add_option("--max-order", o.max_order, "largest product order to solve exactly")
        ->check(CLI::Range(std::size_t{2}, kMaxSolverOrder));
    product_cmd->add_option("--workers", o.workers, "worker threads (output is identical for any count)")
        ->check(CLI::Range(1U, 256U));
    product_cmd->add_option("--out", o.out_path, "write the report here instead of stdout");

    cross_cmd->callback([&] { action = [&] { o.nmax = cross_nmax; return cmd_crosscheck(o, out, err); }; });
    grid_cmd->callback([&] {
        action = [&] {
            o.nmax = grid_nmax;
            if (o.nmax < 2)
                throw InputError("grid-table needs --nmax >= 2");
            return cmd_grid_table(o, out, err);
        };
    });
    product_cmd->callback([&] { action = [&] { return cmd_product_check(o, out, err); }; });
    catalog_cmd->callback([&] {
        action = [&] {
            o.nmax = catalog_nmax;
            if (o.nmax < 3)
                throw InputError("catalog needs --nmax >= 3");
            return cmd_catalog(o, out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return action();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const domlab::ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return kExitInput;
}

}  // namespace domlab::cli
