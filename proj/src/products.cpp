#include "domlab/products.hpp"

#include "domlab/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domlab {

ProductVertexMap::ProductVertexMap(ProductKind kind, std::size_t left_order, std::size_t right_order)
    : kind_(kind), left_order_(left_order), right_order_(right_order)
{
}

std::size_t ProductVertexMap::order() const noexcept
{
    switch (kind_) {
    case ProductKind::join: return left_order_ + right_order_;
    case ProductKind::corona: return left_order_ * (1 + right_order_);
    case ProductKind::cartesian: return left_order_ * right_order_;
    }
    return 0;
}

void ProductVertexMap::require_kind(ProductKind expected) const
{
    if (kind_ != expected)
        throw std::logic_error("vertex accessor does not apply to this product kind");
}

Vertex ProductVertexMap::left(Vertex i) const
{
    if (kind_ == ProductKind::cartesian)
        throw std::logic_error("cartesian vertices are addressed by pair()");
    if (i >= left_order_)
        throw std::out_of_range("left factor vertex out of range");
    return i;
}

Vertex ProductVertexMap::right(Vertex j, Vertex copy) const
{
    if (j >= right_order_)
        throw std::out_of_range("right factor vertex out of range");
    if (kind_ == ProductKind::join)
        return left_order_ + j;
    require_kind(ProductKind::corona);
    if (copy >= left_order_)
        throw std::out_of_range("corona copy out of range");
    return left_order_ + copy * right_order_ + j;
}

Vertex ProductVertexMap::pair(Vertex i, Vertex j) const
{
    require_kind(ProductKind::cartesian);
    if (i >= left_order_ || j >= right_order_)
        throw std::out_of_range("cartesian coordinate out of range");
    return i * right_order_ + j;
}

ProductVertexMap::Origin ProductVertexMap::origin(Vertex v) const
{
    if (v >= order())
        throw std::out_of_range("product vertex out of range");
    Origin o;
    switch (kind_) {
    case ProductKind::join:
        if (v < left_order_)
            o.left = v;
        else {
            o.side = Side::right;
            o.right = v - left_order_;
        }
        break;
    case ProductKind::corona:
        if (v < left_order_)
            o.left = v;
        else {
            o.side = Side::right;
            o.copy = (v - left_order_) / right_order_;
            o.right = (v - left_order_) % right_order_;
        }
        break;
    case ProductKind::cartesian:
        o.side = Side::pair;
        o.left = v / right_order_;
        o.right = v % right_order_;
        break;
    }
    return o;
}

VertexSet ProductVertexMap::g_layer(Vertex j) const
{
    VertexSet out(order());
    for (Vertex i = 0; i < left_order_; ++i)
        out.insert(pair(i, j));
    return out;
}

VertexSet ProductVertexMap::h_layer(Vertex i) const
{
    VertexSet out(order());
    for (Vertex j = 0; j < right_order_; ++j)
        out.insert(pair(i, j));
    return out;
}

Product join(const Graph& g, const Graph& h)
{
    ProductVertexMap map(ProductKind::join, g.order(), h.order());
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({map.left(e.u), map.left(e.v)});
    for (const auto& e : h.edges())
        edges.push_back({map.right(e.u), map.right(e.v)});
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = 0; j < h.order(); ++j)
            edges.push_back({map.left(i), map.right(j)});
    return {Graph(map.order(), edges), map};
}

Product corona(const Graph& g, const Graph& h)
{
    ProductVertexMap map(ProductKind::corona, g.order(), h.order());
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({map.left(e.u), map.left(e.v)});
    for (Vertex c = 0; c < g.order(); ++c) {
        for (const auto& e : h.edges())
            edges.push_back({map.right(e.u, c), map.right(e.v, c)});
        for (Vertex j = 0; j < h.order(); ++j)
            edges.push_back({map.left(c), map.right(j, c)});
    }
    return {Graph(map.order(), edges), map};
}

Product cartesian(const Graph& g, const Graph& h)
{
    ProductVertexMap map(ProductKind::cartesian, g.order(), h.order());
    std::vector<Edge> edges;
    for (Vertex i = 0; i < g.order(); ++i)
        for (const auto& e : h.edges())
            edges.push_back({map.pair(i, e.u), map.pair(i, e.v)});
    for (Vertex j = 0; j < h.order(); ++j)
        for (const auto& e : g.edges())
            edges.push_back({map.pair(e.u, j), map.pair(e.v, j)});
    return {Graph(map.order(), edges), map};
}

JoinPrediction predict_join(const Graph& g, const Graph& h)
{
    if (g.order() == 0 || h.order() == 0)
        throw std::invalid_argument("join theorem needs nonempty factors");
    const int rg = roman2_domination_number(g);
    const int rh = roman2_domination_number(h);
    JoinPrediction p;
    p.left_is_argmin = rg <= rh;
    const Graph& argmin = p.left_is_argmin ? g : h;
    const Graph& other = p.left_is_argmin ? h : g;
    p.k = std::min(rg, rh);
    p.r2_other = std::max(rg, rh);
    p.gamma_argmin = domination_number(argmin);
    p.gamma_other = domination_number(other);
    if (p.k <= 2)
        p.value = 2;
    else if (p.k == 3 || (p.k == 4 && p.gamma_argmin == 2))
        p.value = 3;
    else
        p.value = 4;
    return p;
}

ValueCertificate corona_value(const Graph& g, const Graph& h)
{
    if (h.order() == 0)
        throw std::invalid_argument("corona theorem needs a nonempty H");
    const auto product = corona(g, h);
    const auto& map = product.map;
    ValueCertificate out{0, Labeling(map.order())};
    const std::size_t n = g.order();
    if (h.order() == 1) {
        const auto dominating = solve(g, Variant::dom);
        out.value = static_cast<int>(n) + dominating.value;
        for (Vertex c = 0; c < n; ++c)
            out.certificate.set(map.right(0, c), 1);
        dominating.support().for_each([&](Vertex v) { out.certificate.set(map.left(v), 1); });
    } else {
        out.value = static_cast<int>(2 * n);
        for (Vertex v = 0; v < n; ++v)
            out.certificate.set(map.left(v), 2);
    }
    return out;
}

ValueCertificate cartesian_upper(const Graph& g, const Graph& h)
{
    const auto product = cartesian(g, h);
    const auto& map = product.map;
    const auto fg = solve(g, Variant::roman2);
    const auto fh = solve(h, Variant::roman2);
    const auto via_g = static_cast<long long>(fg.value) * static_cast<long long>(h.order());
    const auto via_h = static_cast<long long>(fh.value) * static_cast<long long>(g.order());
    ValueCertificate out{static_cast<int>(std::min(via_g, via_h)), Labeling(map.order())};
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = 0; j < h.order(); ++j)
            out.certificate.set(map.pair(i, j), via_g <= via_h ? fg.certificate[i] : fh.certificate[j]);
    return out;
}

ValueCertificate complete_product_value(std::size_t n, std::size_t m)
{
    if (n == 0 || m == 0)
        throw std::invalid_argument("complete graphs need at least one vertex");
    if (n > m)
        throw std::invalid_argument("complete_product_value needs n <= m; swap the arguments");
    const ProductVertexMap map(ProductKind::cartesian, n, m);
    ValueCertificate out{static_cast<int>(std::min(m, 2 * n)), Labeling(map.order())};
    if (m <= 2 * n) {
        for (Vertex i = 0; i < n; ++i)
            out.certificate.set(map.pair(i, i), 1);
        for (Vertex j = n; j < m; ++j)
            out.certificate.set(map.pair(0, j), 1);
    } else {
        for (Vertex i = 0; i < n; ++i)
            out.certificate.set(map.pair(i, i), 2);
    }
    return out;
}

}  // namespace domlab
