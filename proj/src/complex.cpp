#include "lefint/complex.hpp"

#include <algorithm>
#include <unordered_map>

namespace lefint {

std::string SimplicialComplex::simplex_name(int id) const {
    std::string out = "[";
    const Simplex& s = simplices[id];
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += vertex_names[s[i]];
    }
    return out + "]";
}

namespace {

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

ComplexPtr finish_complex(std::vector<std::string> vertices, std::set<Simplex> closed) {
    auto c = std::make_shared<SimplicialComplex>();
    c->vertex_names = std::move(vertices);
    c->simplices.assign(closed.begin(), closed.end());
    std::sort(c->simplices.begin(), c->simplices.end(), simplex_less);
    int max_dim = -1;
    for (int i = 0; i < static_cast<int>(c->simplices.size()); ++i) {
        c->ids[c->simplices[i]] = i;
        max_dim = std::max(max_dim, SimplicialComplex::dim_of(c->simplices[i]));
    }
    c->by_dim.assign(max_dim + 1, {});
    for (int i = 0; i < static_cast<int>(c->simplices.size()); ++i)
        c->by_dim[SimplicialComplex::dim_of(c->simplices[i])].push_back(i);
    return c;
}

void add_faces(const Simplex& s, std::set<Simplex>& out) {
    // All nonempty subsets; tuples are tiny.
    int n = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex face;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(s[i]);
        out.insert(std::move(face));
    }
}

}  // namespace

ComplexPtr validate_complex_indexed(const std::vector<std::string>& vertices,
                                    const std::vector<Simplex>& raw) {
    int n = static_cast<int>(vertices.size());
    std::set<Simplex> closed;
    for (Simplex s : raw) {
        if (s.empty()) throw ValidationError("empty simplex tuple");
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= n)
                throw ValidationError("vertex index out of range in simplex tuple");
            if (i > 0 && s[i] == s[i - 1])
                throw ValidationError("duplicate vertex '" + vertices[s[i]] + "' in simplex tuple");
        }
        add_faces(s, closed);
    }
    return finish_complex(vertices, std::move(closed));
}

ComplexPtr validate_complex(const std::vector<std::string>& vertices,
                            const std::vector<std::vector<std::string>>& raw) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (!index.emplace(vertices[i], i).second)
            throw ValidationError("duplicate vertex name '" + vertices[i] + "'");
    }
    std::vector<Simplex> tuples;
    tuples.reserve(raw.size());
    for (const auto& names : raw) {
        Simplex s;
        for (const auto& name : names) {
            auto it = index.find(name);
            if (it == index.end())
                throw ValidationError("unknown vertex '" + name + "' in simplex tuple");
            s.push_back(it->second);
        }
        tuples.push_back(std::move(s));
    }
    return validate_complex_indexed(vertices, tuples);
}

OpenSet full_set(const ComplexPtr& host) {
    OpenSet s{host, {}};
    for (int i = 0; i < host->size(); ++i) s.cells.insert(i);
    return s;
}

OpenSet empty_set(const ComplexPtr& host) { return OpenSet{host, {}}; }

OpenSet make_open_set(const ComplexPtr& host, const std::vector<Simplex>& cells) {
    OpenSet s{host, {}};
    for (Simplex c : cells) {
        std::sort(c.begin(), c.end());
        int id = host->id_of(c);
        if (id < 0) throw ValidationError("open-set cell is not a simplex of the host");
        s.cells.insert(id);
    }
    return s;
}

OpenSet closure(const OpenSet& s) {
    std::set<Simplex> faces;
    for (int id : s.cells) add_faces(s.host->simplices[id], faces);
    OpenSet out{s.host, {}};
    for (const Simplex& f : faces) out.cells.insert(s.host->id_of(f));
    return out;
}

OpenSet frontier(const OpenSet& s) {
    OpenSet cl = closure(s);
    OpenSet out{s.host, {}};
    for (int id : cl.cells)
        if (!s.cells.count(id)) out.cells.insert(id);
    return out;
}

bool is_closed(const OpenSet& s) { return frontier(s).cells.empty(); }

long long combinatorial_euler(const OpenSet& s) {
    long long chi = 0;
    for (int id : s.cells)
        chi += (SimplicialComplex::dim_of(s.host->simplices[id]) % 2 == 0) ? 1 : -1;
    return chi;
}

namespace {
void check_same_host(const OpenSet& a, const OpenSet& b) {
    if (!same_host(a.host, b.host))
        throw ValidationError("open sets live on different host complexes");
}
}  // namespace

OpenSet set_union(const OpenSet& a, const OpenSet& b) {
    check_same_host(a, b);
    OpenSet out{a.host, a.cells};
    out.cells.insert(b.cells.begin(), b.cells.end());
    return out;
}

OpenSet set_intersection(const OpenSet& a, const OpenSet& b) {
    check_same_host(a, b);
    OpenSet out{a.host, {}};
    for (int id : a.cells)
        if (b.cells.count(id)) out.cells.insert(id);
    return out;
}

OpenSet set_difference(const OpenSet& a, const OpenSet& b) {
    check_same_host(a, b);
    OpenSet out{a.host, {}};
    for (int id : a.cells)
        if (!b.cells.count(id)) out.cells.insert(id);
    return out;
}

}  // namespace lefint
