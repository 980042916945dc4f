#pragma once

#include <optional>

#include "lefint/chain.hpp"
#include "lefint/homology.hpp"
#include "lefint/product.hpp"

namespace lefint {

/// A simplicial presentation of a self-map of `host`: a vertex map from the
/// depth-th barycentric subdivision of host back to host. depth 0 is a plain
/// vertex self-map.
struct SelfMap {
    ComplexPtr host;
    int depth = 0;
    VertexMap map;  // source = sd^depth(host), target = host
};

SelfMap make_self_map(const ComplexPtr& host, std::vector<int> assignment);
SelfMap make_self_map_subdivided(const ComplexPtr& host, int depth, std::vector<int> assignment);
SelfMap identity_self_map(const ComplexPtr& host);

/// Setwise invariance of an open set under a depth-0 self-map: every cell's
/// image cell (span of the deduplicated image vertices) stays in the set.
bool check_invariant(const SelfMap& f, const OpenSet& s);

/// True iff the vertex assignment is a bijection preserving the simplex set
/// in both directions (a simplicial witness of a homeomorphism).
bool is_isomorphism(const SelfMap& f);

/// The depth-0 self-map of sd^n(host) induced by an isomorphism.
SelfMap subdivide_self_map(const SelfMap& f, const SubdivisionRecord& rec);

/// The measure (X, f): the cached chain endomorphism of C(host) obtained by
/// composing the map's chain map with the iterated subdivision operator.
struct LefschetzMeasure {
    ComplexPtr host;
    SelfMap selfmap;
    ChainComplexPtr chain;
    ChainMap endomorphism;
};

LefschetzMeasure make_measure(const SelfMap& f);
LefschetzMeasure identity_measure(const ComplexPtr& host);

/// Lambda^c(phi, W): alternating sum of the traces of phi restricted to the
/// incomplete basis of W.
Rational lambda_c(const ChainMap& phi, const OpenSet& w);

/// Lambda(f, U)_X. For depth-0 maps, U must be f-invariant.
Rational lambda(const LefschetzMeasure& m, const OpenSet& u);

/// Alternating restricted trace of the tensor-product endomorphism over the
/// product basis {sigma (x) tau}. Equals lambda_c(phi1,w1) * lambda_c(phi2,w2)
/// by the Kronecker diagonal identity; computed directly as the double sum so
/// that equality is a meaningful test.
Rational lambda_product_tensor(const ChainMap& phi1, const OpenSet& w1, const ChainMap& phi2,
                               const OpenSet& w2);

/// A setwise-fixed simplex of closure(U) together with its barycenter, which
/// an affine vertex permutation fixes.
struct FixedPointCertificate {
    Simplex cell;                                           // in host indexing
    std::vector<std::pair<std::string, Rational>> barycenter;  // vertex name -> weight
};

/// Searches closure(U) for a setwise-fixed simplex of an isomorphism.
std::optional<FixedPointCertificate> fixed_point_certificate(const SelfMap& f, const OpenSet& u);

}  // namespace lefint
