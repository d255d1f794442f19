#include "domlab/canonical.hpp"

#include "domlab/graph6.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace domlab {

namespace {

// Iterated degree refinement. Color ids are ranks of sorted signatures, so the
// coloring is invariant under relabeling.
std::vector<int> refined_colors(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v)
        color[v] = static_cast<int>(g.degree(v));

    std::size_t classes = 0;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> around;
            g.neighbors(v).for_each([&](Vertex u) { around.push_back(color[u]); });
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (sorted.size() == classes)
            break;
        classes = sorted.size();
    }
    return color;
}

struct Canon {
    std::uint64_t code = 0;
    std::vector<Vertex> position_of;
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g)
        : n_(g.order()), bits_(n_ * (n_ - 1) / 2), color_(refined_colors(g)), placed_(n_), used_(n_, false)
    {
        slot_color_ = color_;
        std::sort(slot_color_.begin(), slot_color_.end());
        for (Vertex v = 0; v < n_; ++v)
            adj_.push_back(g.mask(v));
    }

    Canon run()
    {
        descend(0, 0);
        Canon out;
        out.code = best_;
        out.position_of.resize(n_);
        for (std::size_t p = 0; p < n_; ++p)
            out.position_of[best_order_[p]] = p;
        return out;
    }

private:
    void descend(std::size_t pos, std::uint64_t prefix)
    {
        if (pos == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                best_order_ = placed_;
                have_best_ = true;
            }
            return;
        }
        const std::size_t prefix_bits = (pos + 1) * pos / 2;
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[v] || color_[v] != slot_color_[pos])
                continue;
            std::uint64_t column = 0;
            for (std::size_t i = 0; i < pos; ++i)
                column = (column << 1) | ((adj_[placed_[i]] >> v) & 1U);
            const std::uint64_t next = (prefix << pos) | column;
            if (have_best_ && next > (best_ >> (bits_ - prefix_bits)))
                continue;
            used_[v] = true;
            placed_[pos] = v;
            descend(pos + 1, next);
            used_[v] = false;
        }
    }

    std::size_t n_;
    std::size_t bits_;
    std::vector<int> color_;
    std::vector<int> slot_color_;
    std::vector<std::uint64_t> adj_;
    std::vector<Vertex> placed_;
    std::vector<bool> used_;
    std::vector<Vertex> best_order_;
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

Canon canonicalize(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw std::invalid_argument("canonical forms are limited to " + std::to_string(kMaxCanonicalOrder)
                                    + " vertices");
    if (g.order() <= 1) {
        Canon c;
        c.position_of.assign(g.order(), 0);
        return c;
    }
    return CanonSearch(g).run();
}

std::vector<std::size_t> degree_sequence(const Graph& g)
{
    std::vector<std::size_t> out;
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

class MonoSearch {
public:
    MonoSearch(const Graph& target, const Graph& pattern)
    {
        const std::size_t tn = target.order();
        const std::size_t pn = pattern.order();
        for (Vertex t = 0; t < tn; ++t)
            tadj_.push_back(target.mask(t));

        std::vector<bool> placed(pn, false);
        for (std::size_t k = 0; k < pn; ++k) {
            Vertex pick = pn;
            std::size_t pick_links = 0;
            for (Vertex h = 0; h < pn; ++h) {
                if (placed[h])
                    continue;
                std::size_t links = 0;
                pattern.neighbors(h).for_each([&](Vertex x) { links += placed[x] ? 1 : 0; });
                if (pick == pn || links > pick_links
                    || (links == pick_links && pattern.degree(h) > pattern.degree(pick))) {
                    pick = h;
                    pick_links = links;
                }
            }
            placed[pick] = true;
            order_.push_back(pick);
        }

        std::vector<std::size_t> rank(pn);
        for (std::size_t k = 0; k < pn; ++k)
            rank[order_[k]] = k;
        earlier_.resize(pn);
        degree_ok_.resize(pn, 0);
        for (std::size_t k = 0; k < pn; ++k) {
            const Vertex h = order_[k];
            pattern.neighbors(h).for_each([&](Vertex x) {
                if (rank[x] < k)
                    earlier_[k].push_back(x);
            });
            for (Vertex t = 0; t < tn; ++t)
                if (target.degree(t) >= pattern.degree(h))
                    degree_ok_[k] |= std::uint64_t{1} << t;
        }
        image_.assign(pn, 0);
    }

    std::optional<std::vector<Vertex>> run()
    {
        if (descend(0, 0))
            return image_;
        return std::nullopt;
    }

private:
    bool descend(std::size_t k, std::uint64_t used)
    {
        if (k == order_.size())
            return true;
        std::uint64_t candidates = degree_ok_[k] & ~used;
        for (Vertex x : earlier_[k])
            candidates &= tadj_[image_[x]];
        while (candidates != 0) {
            const auto t = static_cast<Vertex>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            image_[order_[k]] = t;
            if (descend(k + 1, used | (std::uint64_t{1} << t)))
                return true;
        }
        return false;
    }

    std::vector<std::uint64_t> tadj_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> earlier_;
    std::vector<std::uint64_t> degree_ok_;
    std::vector<Vertex> image_;
};

std::mutex cache_mutex;
std::vector<std::vector<Graph>> cache;  // cache[n] = all graphs on n vertices

}  // namespace

Graph canonical_form(const Graph& g)
{
    const auto c = canonicalize(g);
    return relabel(g, c.position_of);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

bool is_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.size() != h.size() || degree_sequence(g) != degree_sequence(h))
        return false;
    if (g.order() <= kMaxCanonicalOrder)
        return canonicalize(g).code == canonicalize(h).code;
    // Equal order and size: a monomorphism is a bijection that maps edges onto edges.
    return has_subgraph(g, h);
}

std::optional<std::vector<Vertex>> find_subgraph(const Graph& target, const Graph& pattern)
{
    if (target.order() > 64)
        throw std::invalid_argument("subgraph search supports targets with at most 64 vertices");
    if (pattern.order() > target.order() || pattern.size() > target.size())
        return std::nullopt;
    return MonoSearch(target, pattern).run();
}

std::vector<Graph> enumerate_graphs(std::size_t n)
{
    if (n > kMaxCanonicalOrder)
        throw std::invalid_argument("enumeration is limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
    std::lock_guard lock(cache_mutex);
    if (cache.empty()) {
        cache.push_back({Graph(0)});
        cache.push_back({Graph(1)});
    }
    while (cache.size() <= n) {
        const std::size_t m = cache.size();
        std::map<std::uint64_t, Graph> classes;
        for (const auto& base : cache.back()) {
            const auto base_edges = base.edges();
            for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (m - 1)); ++subset) {
                auto edges = base_edges;
                for (Vertex u = 0; u + 1 < m; ++u)
                    if ((subset >> u) & 1U)
                        edges.push_back({u, m - 1});
                const Graph g(m, edges);
                const auto c = canonicalize(g);
                if (!classes.contains(c.code))
                    classes.emplace(c.code, relabel(g, c.position_of));
            }
        }
        std::vector<Graph> level;
        level.reserve(classes.size());
        for (auto& [code, g] : classes)
            level.push_back(std::move(g));
        cache.push_back(std::move(level));
    }
    return cache[n];
}

std::vector<Graph> enumerate_connected(std::size_t n)
{
    std::vector<Graph> out;
    for (auto& g : enumerate_graphs(n))
        if (is_connected(g))
            out.push_back(std::move(g));
    return out;
}

}  // namespace domlab
