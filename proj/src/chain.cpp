#include "lefint/chain.hpp"

#include <algorithm>
#include <map>

namespace lefint {

int sort_sign(std::vector<int> v) {
    int sign = 1;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) sign = -sign;
        }
    return sign;
}

int ChainComplexData::basis_position(int id) const {
    int p = SimplicialComplex::dim_of(host->simplices[id]);
    const auto& dimcells = host->by_dim[p];
    auto it = std::lower_bound(dimcells.begin(), dimcells.end(), id);
    return static_cast<int>(it - dimcells.begin());
}

ChainComplexPtr boundary_matrices(const ComplexPtr& x) {
    auto c = std::make_shared<ChainComplexData>();
    c->host = x;
    c->boundary.resize(x->dim() + 1);
    for (int p = 1; p <= x->dim(); ++p) {
        QMatrix d(c->rank(p - 1), c->rank(p));
        for (int j = 0; j < c->rank(p); ++j) {
            const Simplex& s = x->simplices[x->by_dim[p][j]];
            for (int i = 0; i <= p; ++i) {
                Simplex face;
                for (int k = 0; k <= p; ++k)
                    if (k != i) face.push_back(s[k]);
                d(c->basis_position(x->id_of(face)), j) += (i % 2 == 0) ? 1 : -1;
            }
        }
        c->boundary[p] = std::move(d);
    }
    return c;
}

VertexMap make_vertex_map(const ComplexPtr& source, const ComplexPtr& target,
                          std::vector<int> assignment) {
    if (assignment.size() != source->vertex_names.size())
        throw ValidationError("vertex map must assign every source vertex");
    int nt = static_cast<int>(target->vertex_names.size());
    for (int img : assignment)
        if (img < 0 || img >= nt) throw ValidationError("vertex map image out of range");
    VertexMap f{source, target, std::move(assignment)};
    for (int i = 0; i < source->size(); ++i) {
        Simplex image;
        for (int v : source->simplices[i]) image.push_back(f.assignment[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!target->contains(image))
            throw ValidationError("vertex map is not simplicial: image of " +
                                  source->simplex_name(i) + " spans no simplex");
    }
    return f;
}

ChainMap identity_chain_map(const ChainComplexPtr& c) {
    ChainMap m{c, c, {}};
    for (int p = 0; p <= c->dim(); ++p) m.mats.push_back(QMatrix::identity(c->rank(p)));
    return m;
}

ChainMap chain_map_of_vertex_map(const VertexMap& f, const ChainComplexPtr& source_chain,
                                 const ChainComplexPtr& target_chain) {
    if (!same_host(f.source, source_chain->host) || !same_host(f.target, target_chain->host))
        throw ValidationError("chain_map_of_vertex_map: complexes do not match");
    ChainMap m{source_chain, target_chain, {}};
    for (int p = 0; p <= source_chain->dim(); ++p) {
        QMatrix mat(target_chain->rank(p), source_chain->rank(p));
        for (int j = 0; j < source_chain->rank(p); ++j) {
            const Simplex& s = f.source->simplices[f.source->by_dim[p][j]];
            std::vector<int> image;
            for (int v : s) image.push_back(f.assignment[v]);
            int sign = sort_sign(image);
            if (sign == 0) continue;  // degenerate image: zero chain
            std::sort(image.begin(), image.end());
            mat(target_chain->basis_position(f.target->id_of(image)), j) = sign;
        }
        m.mats.push_back(std::move(mat));
    }
    return m;
}

namespace {

using SparseChain = std::map<int, Rational>;  // refined simplex id -> coefficient

// sd_# for one subdivision stage: sd(v) = barycenter of v, and
// sd(sigma) = cone at sigma's barycenter over sd(boundary sigma).
std::vector<SparseChain> stage_operator_chains(const SubdivisionStage& stage) {
    const SimplicialComplex& from = *stage.from;
    const SimplicialComplex& to = *stage.to;
    std::vector<SparseChain> sd(from.simplices.size());
    for (int sid = 0; sid < static_cast<int>(from.simplices.size()); ++sid) {
        const Simplex& s = from.simplices[sid];
        int p = SimplicialComplex::dim_of(s);
        if (p == 0) {
            sd[sid][to.id_of({sid})] = 1;
            continue;
        }
        // Boundary in the original, subdivided termwise.
        SparseChain bd;
        for (int i = 0; i <= p; ++i) {
            Simplex face;
            for (int k = 0; k <= p; ++k)
                if (k != i) face.push_back(s[k]);
            Rational sign = (i % 2 == 0) ? 1 : -1;
            for (const auto& [rid, coeff] : sd[from.id_of(face)]) bd[rid] += sign * coeff;
        }
        // Cone at the barycenter: [b, w_0..w_{p-1}] with b the largest vertex
        // of every chain inside s, so sorting contributes (-1)^p.
        Rational cone_sign = (p % 2 == 0) ? 1 : -1;
        for (const auto& [rid, coeff] : bd) {
            if (coeff == 0) continue;
            Simplex cell = to.simplices[rid];
            cell.push_back(sid);
            sd[sid][to.id_of(cell)] += cone_sign * coeff;
        }
    }
    return sd;
}

ChainMap stage_operator(const SubdivisionStage& stage, const ChainComplexPtr& from_chain,
                        const ChainComplexPtr& to_chain) {
    std::vector<SparseChain> sd = stage_operator_chains(stage);
    ChainMap m{from_chain, to_chain, {}};
    for (int p = 0; p <= from_chain->dim(); ++p) {
        QMatrix mat(to_chain->rank(p), from_chain->rank(p));
        for (int j = 0; j < from_chain->rank(p); ++j)
            for (const auto& [rid, coeff] : sd[stage.from->by_dim[p][j]])
                if (coeff != 0) mat(to_chain->basis_position(rid), j) = coeff;
        m.mats.push_back(std::move(mat));
    }
    return m;
}

}  // namespace

ChainMap subdivision_operator(const SubdivisionRecord& rec, const ChainComplexPtr& source_chain,
                              const ChainComplexPtr& refined_chain) {
    if (rec.depth < 1) throw ValidationError("subdivision_operator: depth must be >= 1");
    if (!same_host(rec.original, source_chain->host) ||
        !same_host(rec.refined, refined_chain->host))
        throw ValidationError("subdivision_operator: chain complexes do not match the record");
    ChainComplexPtr cur_chain = source_chain;
    ChainMap acc;
    for (int d = 0; d < rec.depth; ++d) {
        ChainComplexPtr next_chain =
            (d == rec.depth - 1) ? refined_chain : boundary_matrices(rec.stages[d].to);
        ChainMap step = stage_operator(rec.stages[d], cur_chain, next_chain);
        acc = (d == 0) ? std::move(step) : compose(step, acc);
        cur_chain = next_chain;
    }
    return acc;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!same_host(f.target->host, g.source->host))
        throw ValidationError("compose: chain maps are not composable");
    ChainMap m{f.source, g.target, {}};
    for (int p = 0; p <= f.source->dim(); ++p) {
        if (p <= g.source->dim())
            m.mats.push_back(g.mats[p] * f.mats[p]);
        else
            m.mats.push_back(QMatrix(g.target->rank(p), f.source->rank(p)));
    }
    return m;
}

bool satisfies_chain_map_law(const ChainMap& m) {
    for (int p = 1; p <= m.source->dim(); ++p) {
        QMatrix lhs = (p <= m.target->dim()) ? m.target->boundary[p] * m.mats[p]
                                             : QMatrix(0, m.source->rank(p));
        QMatrix rhs = m.mats[p - 1] * m.source->boundary[p];
        if (lhs.rows() == 0 && !rhs.is_zero()) return false;
        if (lhs.rows() != 0 && !(lhs == rhs)) return false;
    }
    return true;
}

std::vector<Rational> restricted_trace(const ChainMap& phi, const OpenSet& w) {
    if (!same_host(phi.source->host, phi.target->host))
        throw ValidationError("restricted_trace: chain map is not an endomorphism");
    if (!same_host(w.host, phi.source->host))
        throw ValidationError("restricted_trace: open set hosted on a different complex");
    std::vector<Rational> traces(phi.source->dim() + 1, 0);
    for (int id : w.cells) {
        int p = SimplicialComplex::dim_of(w.host->simplices[id]);
        int pos = phi.source->basis_position(id);
        traces[p] += phi.mats[p](pos, pos);
    }
    return traces;
}

}  // namespace lefint
