#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lefint/matrix.hpp"

namespace lefint {

/// A simplex in canonical form: strictly ascending vertex indices of its host.
using Simplex = std::vector<int>;

/// A finite, face-closed simplicial complex given abstractly. Vertices carry
/// a fixed total order (their index), which also fixes the orientation
/// convention: every simplex is oriented by ascending vertex order.
struct SimplicialComplex {
    std::vector<std::string> vertex_names;
    std::vector<Simplex> simplices;              // ordered by (dimension, lex)
    std::map<Simplex, int> ids;                  // simplex -> index into simplices
    std::vector<std::vector<int>> by_dim;        // per dimension, simplex ids

    int dim() const { return static_cast<int>(by_dim.size()) - 1; }
    int size() const { return static_cast<int>(simplices.size()); }

    bool contains(const Simplex& s) const { return ids.count(s) != 0; }
    int id_of(const Simplex& s) const {
        auto it = ids.find(s);
        return it == ids.end() ? -1 : it->second;
    }
    static int dim_of(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

    std::string simplex_name(int id) const;

    bool same_as(const SimplicialComplex& o) const {
        return vertex_names == o.vertex_names && simplices == o.simplices;
    }
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// A "definable set" at desk scale: an arbitrary union of open simplices of a
/// host complex. No face-closure requirement.
struct OpenSet {
    ComplexPtr host;
    std::set<int> cells;  // simplex ids in host
};

inline bool same_host(const ComplexPtr& a, const ComplexPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

/// Build a face-closed complex from maximal (or arbitrary) vertex tuples.
/// Tuples are deduplicated and sorted; all faces are added.
/// Throws ValidationError on empty tuples, repeated vertices within a tuple,
/// or vertices outside the declared universe.
ComplexPtr validate_complex(const std::vector<std::string>& vertices,
                            const std::vector<std::vector<std::string>>& raw);

/// Same, with tuples given as vertex indices.
ComplexPtr validate_complex_indexed(const std::vector<std::string>& vertices,
                                    const std::vector<Simplex>& raw);

OpenSet full_set(const ComplexPtr& host);
OpenSet empty_set(const ComplexPtr& host);
OpenSet make_open_set(const ComplexPtr& host, const std::vector<Simplex>& cells);

/// Smallest face-closed set containing S.
OpenSet closure(const OpenSet& s);

/// closure(S) \ S. Iterating frontier strictly decreases max dimension.
OpenSet frontier(const OpenSet& s);

bool is_closed(const OpenSet& s);

/// Combinatorial Euler characteristic: sum of (-1)^dim over open cells.
/// Additive under disjoint unions; not a homotopy invariant.
long long combinatorial_euler(const OpenSet& s);

OpenSet set_union(const OpenSet& a, const OpenSet& b);
OpenSet set_intersection(const OpenSet& a, const OpenSet& b);
OpenSet set_difference(const OpenSet& a, const OpenSet& b);

}  // namespace lefint
