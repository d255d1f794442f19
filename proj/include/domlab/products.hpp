#pragma once

#include "domlab/graph.hpp"
#include "domlab/labeling.hpp"

namespace domlab {

enum class ProductKind { join, corona, cartesian };

/// Vertex numbering of a product of a left factor G (order nG) and a right
/// factor H (order nH):
///   join       G vertex i -> i,              H vertex j -> nG + j
///   corona     G vertex i -> i,              copy c of H, vertex j -> nG + c*nH + j
///   cartesian  (i, j) -> i*nH + j            (row-major in the G index)
class ProductVertexMap {
public:
    enum class Side { left, right, pair };

    struct Origin {
        Side side = Side::left;
        Vertex left = 0;   // G index (left and pair)
        Vertex right = 0;  // H index (right and pair)
        Vertex copy = 0;   // corona copy of H
    };

    ProductVertexMap(ProductKind kind, std::size_t left_order, std::size_t right_order);

    ProductKind kind() const noexcept { return kind_; }
    std::size_t left_order() const noexcept { return left_order_; }
    std::size_t right_order() const noexcept { return right_order_; }
    std::size_t order() const noexcept;

    /// join / corona: product id of G vertex i.
    Vertex left(Vertex i) const;
    /// join: id of H vertex j; corona: id of vertex j in copy `copy`.
    Vertex right(Vertex j, Vertex copy = 0) const;
    /// cartesian: id of (i, j).
    Vertex pair(Vertex i, Vertex j) const;

    Origin origin(Vertex v) const;

    /// cartesian: the G-layer {(v, u_j) : v in V(G)}.
    VertexSet g_layer(Vertex j) const;
    /// cartesian: the H-layer {(v_i, u) : u in V(H)}.
    VertexSet h_layer(Vertex i) const;

private:
    void require_kind(ProductKind expected) const;

    ProductKind kind_;
    std::size_t left_order_;
    std::size_t right_order_;
};

struct Product {
    Graph graph;
    ProductVertexMap map;
};

Product join(const Graph& g, const Graph& h);
Product corona(const Graph& g, const Graph& h);
Product cartesian(const Graph& g, const Graph& h);

struct JoinPrediction {
    int value = 0;          // theorem-literal prediction in {2, 3, 4}
    int k = 0;              // min(gamma_R2(G), gamma_R2(H))
    bool left_is_argmin = true;  // ties keep G
    int gamma_argmin = 0;   // gamma of the argmin factor
    int gamma_other = 0;
    int r2_other = 0;
};

/// Literal reading of the join theorem: 2 if k <= 2; 3 if k = 3 or (k = 4 and
/// gamma(argmin) = 2); 4 otherwise. Both graphs must be nonempty.
JoinPrediction predict_join(const Graph& g, const Graph& h);
inline int join_value(const Graph& g, const Graph& h) { return predict_join(g, h).value; }

struct ValueCertificate {
    int value = 0;
    Labeling certificate;  // on the product's vertex numbering
};

/// n + gamma(G) when H has one vertex, else 2n. The certificate labels every
/// pendant copy and a minimum dominating set of G with 1 (H = K_1), or every G
/// vertex with 2.
ValueCertificate corona_value(const Graph& g, const Graph& h);

/// min(gamma_R2(G)|V(H)|, gamma_R2(H)|V(G)|), certified by copying an optimal
/// labeling of the cheaper factor into each of its layers (ties copy G).
ValueCertificate cartesian_upper(const Graph& g, const Graph& h);

/// K_n x K_m with n <= m: value min(m, 2n). For m <= 2n the certificate is
/// 1 on (i, i) for i < n and on (0, j) for n <= j < m; for m > 2n it is 2 on
/// the diagonal (i, i), i < n.
ValueCertificate complete_product_value(std::size_t n, std::size_t m);

}  // namespace domlab
