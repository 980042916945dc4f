#pragma once

#include "lefint/complex.hpp"
#include "lefint/subdivide.hpp"

namespace lefint {

/// Rational chain complex of a simplicial complex. Basis in dimension p is
/// the p-simplices in canonical order; boundary matrices use the alternating
/// face convention on ascending-ordered simplices.
struct ChainComplexData {
    ComplexPtr host;
    std::vector<QMatrix> boundary;  // boundary[p]: C_p -> C_{p-1}, p >= 1

    int dim() const { return host->dim(); }
    int rank(int p) const {
        return (p >= 0 && p <= dim()) ? static_cast<int>(host->by_dim[p].size()) : 0;
    }
    /// Position of simplex `id` within its dimension's basis.
    int basis_position(int id) const;
};

using ChainComplexPtr = std::shared_ptr<const ChainComplexData>;

ChainComplexPtr boundary_matrices(const ComplexPtr& x);

/// A simplicial vertex map: every simplex's deduplicated image spans a
/// simplex of the target.
struct VertexMap {
    ComplexPtr source;
    ComplexPtr target;
    std::vector<int> assignment;  // source vertex index -> target vertex index
};

/// Validates simpliciality; throws ValidationError naming an offending simplex.
VertexMap make_vertex_map(const ComplexPtr& source, const ComplexPtr& target,
                          std::vector<int> assignment);

/// Per-dimension matrices C_p(source) -> C_p(target) satisfying the
/// chain-map law exactly.
struct ChainMap {
    ChainComplexPtr source;
    ChainComplexPtr target;
    std::vector<QMatrix> mats;  // indexed by p = 0 .. source dim

    const QMatrix& at(int p) const { return mats[p]; }
};

ChainMap identity_chain_map(const ChainComplexPtr& c);

/// Degenerate images (repeated vertices) map to zero; otherwise the image
/// simplex with the sign of the sorting permutation.
ChainMap chain_map_of_vertex_map(const VertexMap& f, const ChainComplexPtr& source_chain,
                                 const ChainComplexPtr& target_chain);

/// The chain-level subdivision operator sd_#: C(original) -> C(refined),
/// built by the inductive cone-at-the-barycenter formula. Each p-simplex
/// maps to a +-1 combination of exactly the refined p-simplices it carries.
ChainMap subdivision_operator(const SubdivisionRecord& rec, const ChainComplexPtr& source_chain,
                              const ChainComplexPtr& refined_chain);

ChainMap compose(const ChainMap& g, const ChainMap& f);

bool satisfies_chain_map_law(const ChainMap& m);

/// Diagonal trace of an endomorphism restricted to the incomplete basis of W,
/// one rational per dimension of the host.
std::vector<Rational> restricted_trace(const ChainMap& phi, const OpenSet& w);

/// Orientation bookkeeping: sign of the permutation sorting `v` ascending,
/// or 0 if it has repeats. Exposed for tests.
int sort_sign(std::vector<int> v);

}  // namespace lefint
