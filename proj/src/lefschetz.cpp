#include "lefint/lefschetz.hpp"

#include <algorithm>

namespace lefint {

namespace {

Simplex image_cell(const VertexMap& f, const Simplex& s) {
    Simplex image;
    for (int v : s) image.push_back(f.assignment[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

}  // namespace

SelfMap make_self_map(const ComplexPtr& host, std::vector<int> assignment) {
    return SelfMap{host, 0, make_vertex_map(host, host, std::move(assignment))};
}

SelfMap make_self_map_subdivided(const ComplexPtr& host, int depth,
                                 std::vector<int> assignment) {
    if (depth == 0) return make_self_map(host, std::move(assignment));
    SubdivisionRecord rec = barycentric_subdivision(host, depth);
    return SelfMap{host, depth, make_vertex_map(rec.refined, host, std::move(assignment))};
}

SelfMap identity_self_map(const ComplexPtr& host) {
    std::vector<int> id(host->vertex_names.size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    return make_self_map(host, std::move(id));
}

bool check_invariant(const SelfMap& f, const OpenSet& s) {
    if (f.depth != 0) throw PreconditionError("check_invariant requires a depth-0 self-map");
    if (!same_host(s.host, f.host))
        throw ValidationError("check_invariant: open set hosted on a different complex");
    for (int id : s.cells) {
        Simplex img = image_cell(f.map, s.host->simplices[id]);
        int iid = s.host->id_of(img);
        if (iid < 0 || !s.cells.count(iid)) return false;
    }
    return true;
}

bool is_isomorphism(const SelfMap& f) {
    if (f.depth != 0) return false;
    std::vector<int> seen(f.host->vertex_names.size(), 0);
    for (int img : f.map.assignment) {
        if (seen[img]) return false;
        seen[img] = 1;
    }
    // A vertex bijection sends distinct simplices to distinct simplices, so
    // image(simplices) subset of simplices already forces equality.
    for (int i = 0; i < f.host->size(); ++i)
        if (!f.host->contains(image_cell(f.map, f.host->simplices[i]))) return false;
    return true;
}

SelfMap subdivide_self_map(const SelfMap& f, const SubdivisionRecord& rec) {
    if (f.depth != 0 || !same_host(f.host, rec.original))
        throw ValidationError("subdivide_self_map: need a depth-0 map on the subdivided complex");
    std::vector<int> refined_assignment = subdivide_vertex_self_map(f.map.assignment, rec);
    return SelfMap{rec.refined, 0,
                   make_vertex_map(rec.refined, rec.refined, std::move(refined_assignment))};
}

LefschetzMeasure make_measure(const SelfMap& f) {
    ChainComplexPtr chain = boundary_matrices(f.host);
    ChainMap endo;
    if (f.depth == 0) {
        endo = chain_map_of_vertex_map(f.map, chain, chain);
    } else {
        SubdivisionRecord rec = barycentric_subdivision(f.host, f.depth);
        if (!same_host(f.map.source, rec.refined))
            throw ValidationError("make_measure: map domain is not the stated subdivision");
        ChainComplexPtr refined_chain = boundary_matrices(rec.refined);
        ChainMap sd = subdivision_operator(rec, chain, refined_chain);
        endo = compose(chain_map_of_vertex_map(f.map, refined_chain, chain), sd);
    }
    return LefschetzMeasure{f.host, f, chain, std::move(endo)};
}

LefschetzMeasure identity_measure(const ComplexPtr& host) {
    return make_measure(identity_self_map(host));
}

Rational lambda_c(const ChainMap& phi, const OpenSet& w) {
    std::vector<Rational> traces = restricted_trace(phi, w);
    Rational lam = 0;
    for (size_t p = 0; p < traces.size(); ++p) lam += (p % 2 == 0 ? 1 : -1) * traces[p];
    return lam;
}

Rational lambda(const LefschetzMeasure& m, const OpenSet& u) {
    if (!same_host(u.host, m.host))
        throw ValidationError("lambda: open set hosted on a different complex");
    if (m.selfmap.depth == 0 && !check_invariant(m.selfmap, u))
        throw PreconditionError("lambda: open set is not invariant under the self-map");
    return lambda_c(m.endomorphism, u);
}

Rational lambda_product_tensor(const ChainMap& phi1, const OpenSet& w1, const ChainMap& phi2,
                               const OpenSet& w2) {
    if (!same_host(phi1.source->host, w1.host) || !same_host(phi2.source->host, w2.host))
        throw ValidationError("lambda_product_tensor: open sets do not match the endomorphisms");
    // Diagonal of the tensor endomorphism at sigma (x) tau is the product of
    // the factor diagonals; sum with sign (-1)^(dim sigma + dim tau).
    Rational lam = 0;
    for (int id1 : w1.cells) {
        int p = SimplicialComplex::dim_of(w1.host->simplices[id1]);
        int pos1 = phi1.source->basis_position(id1);
        const Rational& d1 = phi1.mats[p](pos1, pos1);
        if (d1 == 0) continue;
        for (int id2 : w2.cells) {
            int q = SimplicialComplex::dim_of(w2.host->simplices[id2]);
            int pos2 = phi2.source->basis_position(id2);
            const Rational& d2 = phi2.mats[q](pos2, pos2);
            if (d2 == 0) continue;
            lam += ((p + q) % 2 == 0 ? 1 : -1) * d1 * d2;
        }
    }
    return lam;
}

std::optional<FixedPointCertificate> fixed_point_certificate(const SelfMap& f, const OpenSet& u) {
    if (!is_isomorphism(f))
        throw PreconditionError("fixed_point_certificate requires a simplicial isomorphism");
    if (!check_invariant(f, u))
        throw PreconditionError("fixed_point_certificate: open set is not invariant");
    OpenSet cl = closure(u);
    for (int id : cl.cells) {
        const Simplex& s = u.host->simplices[id];
        if (image_cell(f.map, s) == s) {
            FixedPointCertificate cert;
            cert.cell = s;
            Rational w(1, static_cast<unsigned>(s.size()));
            for (int v : s) cert.barycenter.emplace_back(u.host->vertex_names[v], w);
            return cert;
        }
    }
    return std::nullopt;
}

}  // namespace lefint
