#pragma once

#include <utility>

#include "lefint/complex.hpp"

namespace lefint {

/// Staircase (order-complex) triangulation of |A| x |B|. Vertices are vertex
/// pairs ordered lexicographically; simplices are monotone chains in the
/// product partial order. cell_carrier maps each product simplex to the pair
/// of open cells (sigma, tau) whose product contains its interior: the spans
/// of its two coordinate projections.
struct ProductRecord {
    ComplexPtr left;
    ComplexPtr right;
    ComplexPtr product;
    std::vector<std::pair<int, int>> cell_carrier;  // product simplex id -> (left id, right id)

    int vertex_pair_index(int va, int vb) const {
        return va * static_cast<int>(right->vertex_names.size()) + vb;
    }
};

ProductRecord product_complex(const ComplexPtr& a, const ComplexPtr& b);

/// Cells of the product carried by (sigma, tau) pairs with sigma in u1 and
/// tau in u2 — the triangulated open set U1 x U2.
OpenSet product_set(const ProductRecord& rec, const OpenSet& u1, const OpenSet& u2);

}  // namespace lefint
