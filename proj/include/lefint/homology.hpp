#pragma once

#include "lefint/chain.hpp"

namespace lefint {

/// Rational homology data: Betti numbers, a deterministic choice of cycle
/// representatives per dimension, and the span matrices used to express any
/// cycle in that basis modulo boundaries.
struct HomologyBasis {
    ChainComplexPtr chain;
    std::vector<int> betti;          // b_p, p = 0 .. dim
    std::vector<QMatrix> reps;       // per p: columns are homology representatives (cycles)
    std::vector<QMatrix> span;       // per p: [image basis of d_{p+1} | reps]
    std::vector<int> image_rank;     // per p: rank of d_{p+1}
};

HomologyBasis homology_basis(const ChainComplexPtr& c);

std::vector<int> betti_numbers(const ComplexPtr& x);

/// Matrices of the endomorphism induced on homology in the chosen bases.
std::vector<QMatrix> induced_homology_map(const ChainMap& phi, const HomologyBasis& h);

/// Classical Lefschetz number: alternating trace on rational homology.
/// Used throughout as the Hopf-trace oracle.
Rational lefschetz_homological(const ChainMap& phi);

}  // namespace lefint
