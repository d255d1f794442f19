#include "domlab/canonical.hpp"
#include "domlab/cli.hpp"
#include "domlab/graph6.hpp"
#include "domlab/solver.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace domlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "domlab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("domlab-cli-" + std::to_string(std::random_device{}())))
    {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) const
    {
        const auto path = dir_ / name;
        std::ofstream(path) << content;
        return path.string();
    }

private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("solve")
{
    Scratch s;
    auto r = invoke({"solve", s.file("p5.g6", to_graph6(path_graph(5)) + "\n")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("value=3\n", 0) == 0);

    r = invoke({"solve", s.file("c4.txt", to_edge_list(cycle_graph(4)))});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("value=2\n", 0) == 0);

    r = invoke({"solve", "--variant", "dom", "--format", "edgelist", s.file("p4.txt", to_edge_list(path_graph(4)))});
    CHECK(r.out.rfind("value=2\n", 0) == 0);

    r = invoke({"solve", s.file("bad.g6", "this is not a graph\n")});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());

    CHECK(invoke({"solve", "/nonexistent/graph.g6"}).code == 2);
    CHECK(invoke({"solve", "--variant", "greek", s.file("k1.g6", "@\n")}).code == 2);
}

TEST_CASE("solve certificate passes verify")
{
    Scratch s;
    const auto graph = s.file("c7.g6", to_graph6(cycle_graph(7)) + "\n");
    const auto r = invoke({"solve", graph});
    const auto labeling = s.file("c7.lab", r.out.substr(r.out.find('\n') + 1));
    CHECK(invoke({"verify", graph, labeling}).code == 0);
}

TEST_CASE("verify")
{
    Scratch s;
    auto r = invoke({"verify", s.file("c4.g6", to_graph6(cycle_graph(4))), s.file("c4.lab", "0 1\n1 0\n2 1\n3 0\n")});
    CHECK(r.code == 0);

    const auto p3 = s.file("p3.g6", to_graph6(path_graph(3)));
    r = invoke({"verify", p3, s.file("bad.lab", "0 0\n1 1\n2 1\n")});
    CHECK(r.code == 1);
    CHECK(r.out.find("witness 0\n") != std::string::npos);

    r = invoke({"verify", p3, s.file("short.lab", "0 0\n1 1\n")});
    CHECK(r.code == 2);
}

TEST_CASE("verify agrees with the in-process checkers")
{
    Scratch s;
    std::mt19937_64 rng(oracle::seed() + 11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_connected_graph(1 + rng() % 10, 0.3, rng);
        const auto variant = kAllVariants[rng() % 5];
        Labeling f(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            f.set(v, static_cast<int>(rng() % (max_label(variant) + 1)));
        const auto r = invoke({"verify", "--variant", std::string(variant_name(variant)),
                               s.file("g.g6", to_graph6(g)), s.file("f.lab", to_labeling_text(f))});
        CHECK(r.code == (check(g, f, variant).valid ? 0 : 1));
    }
}

TEST_CASE("classify")
{
    Scratch s;
    auto r = invoke({"classify", s.file("p4.g6", to_graph6(path_graph(4)))});
    CHECK(r.code == 0);
    CHECK(r.out.find("exact\t3\n") != std::string::npos);
    CHECK(r.out.find("value_3\t3\ttrue\tyes\n") != std::string::npos);
    CHECK(r.out.find("value_n_minus_1\t3\ttrue\tyes\n") != std::string::npos);

    r = invoke({"classify", s.file("k2.g6", to_graph6(complete_graph(2)))});
    CHECK(r.out.find("exact\t2\n") != std::string::npos);
    CHECK(r.out.find("value_n\t2\ttrue\tyes\n") != std::string::npos);
    CHECK(r.out.find("value_2\t2\ttrue\tyes\n") != std::string::npos);

    r = invoke({"classify", s.file("c6.g6", to_graph6(cycle_graph(6)))});
    CHECK(r.out.find("exact\t3\n") != std::string::npos);
    CHECK(r.out.find("fail\tforbidden-subgraph:C6\twitness") != std::string::npos);

    CHECK(invoke({"classify", s.file("split.txt", "4 2\n0 1\n2 3\n")}).code == 2);
}

TEST_CASE("report commands")
{
    Scratch s;
    auto r = invoke({"crosscheck", "--nmax", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("mismatches=0") != std::string::npos);
    CHECK(invoke({"crosscheck", "--nmax", "9"}).code == 2);

    r = invoke({"grid-table", "--nmax", "20", "--workers", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("m\tn\tdp\tgamma2\tbound\tconstruction_weight\tsharp\tfinding\n", 0) == 0);
    CHECK(r.out.find("\n2\t20\t20\t20\t") != std::string::npos);
    CHECK(r.out.find("\n4\t4\t8\t8\t") != std::string::npos);
    CHECK(r.err.find("3\t13\t17\t18\t17\t") != std::string::npos);

    const auto out_path = s.file("products.tsv", "");
    r = invoke({"product-check", "--max-order", "9", "--out", out_path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out_path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("corona\tBw\t@\t6\t4\t4\tvalid\tok") != std::string::npos);
    CHECK(text.str().find("complete\tK2\tK3\t6\t3\t3\tvalid\tok") != std::string::npos);

    r = invoke({"catalog", "--nmax", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n" + canonical_graph6(cycle_graph(4)) + "\n") != std::string::npos);
    CHECK(r.out.find("\n" + canonical_graph6(path_graph(5)) + "\n") != std::string::npos);
}

TEST_CASE("help and usage errors")
{
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"solve"}).code == 2);
}
