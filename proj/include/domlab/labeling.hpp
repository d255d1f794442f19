#pragma once

#include "domlab/graph.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace domlab {

/// A function V -> {0, 1, 2}, indexed by vertex id.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::size_t order) : values_(order, 0) {}
    explicit Labeling(std::vector<std::uint8_t> values);
    Labeling(std::initializer_list<int> values);

    /// 1 on the members of s, 0 elsewhere.
    static Labeling indicator(const VertexSet& s);

    std::size_t size() const noexcept { return values_.size(); }
    int operator[](Vertex v) const { return values_.at(v); }
    void set(Vertex v, int label);
    std::span<const std::uint8_t> values() const noexcept { return values_; }

    /// V_label: the preimage of label.
    VertexSet part(int label) const;

    friend auto operator<=>(const Labeling&, const Labeling&) = default;

private:
    std::vector<std::uint8_t> values_;
};

int weight(const Labeling& f);

/// Outcome of a certificate check. valid iff witnesses is empty; witnesses
/// lists every violating vertex in increasing order.
struct Verdict {
    bool valid = true;
    std::vector<Vertex> witnesses;
    std::string reason = "ok";

    explicit operator bool() const noexcept { return valid; }
};

/// Roman {2}-dominating function: every 0-vertex has f(N(v)) >= 2.
Verdict check_r2df(const Graph& g, const Labeling& f);

/// Roman dominating function: every 0-vertex has a neighbor labeled 2.
Verdict check_rdf(const Graph& g, const Labeling& f);

/// {2}-dominating function: f(N[v]) >= 2 at every vertex.
Verdict check_brace2(const Graph& g, const Labeling& f);

/// N[S] = V.
Verdict check_dominating(const Graph& g, const VertexSet& s);

/// Every vertex outside S has at least two neighbors in S.
Verdict check_2dominating(const Graph& g, const VertexSet& s);

/// The five minimization problems. dom and dom2 use labels {0, 1} (the
/// indicator of a vertex set); the others use {0, 1, 2}.
enum class Variant { dom, dom2, roman, brace2, roman2 };

inline constexpr Variant kAllVariants[] = {Variant::dom, Variant::dom2, Variant::roman, Variant::brace2,
                                           Variant::roman2};

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
int max_label(Variant v);

/// Dispatches to the checker matching the variant. Set variants reject labels
/// of 2 with reason "alphabet".
Verdict check(const Graph& g, const Labeling& f, Variant v);

/// Labeling text format: one "v label" pair per line in any order, '#' starts
/// a comment. Every vertex 0..order-1 must appear exactly once.
Labeling parse_labeling(std::string_view text, std::size_t order);
std::string to_labeling_text(const Labeling& f);

}  // namespace domlab
