#pragma once

#include "lefint/complex.hpp"

namespace lefint {

/// One barycentric subdivision step. Vertices of `to` are the simplices of
/// `from` (their barycenters); simplices of `to` are chains in the face
/// partial order of `from`.
struct SubdivisionStage {
    ComplexPtr from;
    ComplexPtr to;
    std::vector<int> carrier;  // simplex id in `to` -> carrying simplex id in `from`
};

/// Iterated barycentric subdivision with carrier provenance. The carrier of a
/// refined simplex is the unique original simplex whose open cell contains
/// its open cell.
struct SubdivisionRecord {
    ComplexPtr original;
    ComplexPtr refined;
    std::vector<int> carrier;  // refined simplex id -> original simplex id
    int depth = 0;
    std::vector<SubdivisionStage> stages;  // depth entries, original to refined
};

SubdivisionRecord barycentric_subdivision(const ComplexPtr& x, int depth = 1);

/// Transport an open set to the refinement: all refined cells carried by a
/// cell of S. Covers exactly the same points.
OpenSet refine_set(const OpenSet& s, const SubdivisionRecord& rec);

/// Automorphism transport: a vertex self-map of X taking every simplex to a
/// simplex induces the vertex map on sd^depth X sending each barycenter to
/// the barycenter of the image simplex. `assignment` is over the vertices of
/// rec.original; the result is over the vertices of rec.refined.
std::vector<int> subdivide_vertex_self_map(const std::vector<int>& assignment,
                                           const SubdivisionRecord& rec);

}  // namespace lefint
