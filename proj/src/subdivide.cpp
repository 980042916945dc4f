#include "lefint/subdivide.hpp"

#include <algorithm>

namespace lefint {

namespace {

SubdivisionStage subdivide_once(const ComplexPtr& from) {
    // One barycenter vertex per simplex of `from`; simplex ids double as
    // vertex indices in `to` (the (dim, lex) order is compatible with the
    // face partial order, so chains are ascending index tuples).
    std::vector<std::string> names;
    names.reserve(from->size());
    for (int i = 0; i < from->size(); ++i) {
        std::string n = "<";
        const Simplex& s = from->simplices[i];
        for (size_t k = 0; k < s.size(); ++k) {
            if (k) n += ".";
            n += from->vertex_names[s[k]];
        }
        names.push_back(n + ">");
    }

    // Chains in the face poset, grouped by their maximal element.
    std::vector<std::vector<Simplex>> chains_ending(from->size());
    std::vector<Simplex> all;
    for (int s = 0; s < from->size(); ++s) {
        chains_ending[s].push_back({s});
        const Simplex& top = from->simplices[s];
        int n = static_cast<int>(top.size());
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            if (__builtin_popcount(mask) == n) continue;
            Simplex face;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(top[i]);
            int fid = from->id_of(face);
            for (const Simplex& c : chains_ending[fid]) {
                Simplex ext = c;
                ext.push_back(s);
                chains_ending[s].push_back(std::move(ext));
            }
        }
        for (const Simplex& c : chains_ending[s]) all.push_back(c);
    }

    SubdivisionStage stage;
    stage.from = from;
    stage.to = validate_complex_indexed(names, all);
    stage.carrier.assign(stage.to->size(), -1);
    for (int i = 0; i < stage.to->size(); ++i)
        stage.carrier[i] = stage.to->simplices[i].back();
    return stage;
}

}  // namespace

SubdivisionRecord barycentric_subdivision(const ComplexPtr& x, int depth) {
    if (depth < 1) throw ValidationError("subdivision depth must be >= 1");
    SubdivisionRecord rec;
    rec.original = x;
    rec.depth = depth;
    ComplexPtr cur = x;
    for (int d = 0; d < depth; ++d) {
        rec.stages.push_back(subdivide_once(cur));
        cur = rec.stages.back().to;
    }
    rec.refined = cur;
    rec.carrier.assign(rec.refined->size(), -1);
    for (int i = 0; i < rec.refined->size(); ++i) {
        int c = i;
        for (int d = depth - 1; d >= 0; --d) c = rec.stages[d].carrier[c];
        rec.carrier[i] = c;
    }
    return rec;
}

OpenSet refine_set(const OpenSet& s, const SubdivisionRecord& rec) {
    if (!same_host(s.host, rec.original))
        throw ValidationError("refine_set: open set is not hosted on the subdivided complex");
    OpenSet out{rec.refined, {}};
    for (int i = 0; i < rec.refined->size(); ++i)
        if (s.cells.count(rec.carrier[i])) out.cells.insert(i);
    return out;
}

std::vector<int> subdivide_vertex_self_map(const std::vector<int>& assignment,
                                           const SubdivisionRecord& rec) {
    std::vector<int> cur = assignment;
    for (const SubdivisionStage& stage : rec.stages) {
        if (static_cast<int>(cur.size()) != static_cast<int>(stage.from->vertex_names.size()))
            throw ValidationError("subdivide_vertex_self_map: assignment size mismatch");
        std::vector<int> next(stage.to->vertex_names.size(), -1);
        for (int s = 0; s < stage.from->size(); ++s) {
            Simplex image;
            for (int v : stage.from->simplices[s]) image.push_back(cur[v]);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            int iid = stage.from->id_of(image);
            if (iid < 0)
                throw ValidationError("subdivide_vertex_self_map: image of a simplex is not a simplex");
            next[s] = iid;  // barycenter of s maps to barycenter of its image
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace lefint
