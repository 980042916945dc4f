#include "lefint/product.hpp"

#include <algorithm>
#include <functional>

namespace lefint {

namespace {

// Lattice paths from (0,0) to (m,n) with steps (1,0), (0,1), (1,1). Their
// point sets are exactly the chains surjective onto both coordinate ranges,
// i.e. the product cells carried by an (m-simplex, n-simplex) pair.
void enumerate_paths(int m, int n, std::vector<std::vector<std::pair<int, int>>>& out) {
    std::vector<std::pair<int, int>> path{{0, 0}};
    std::function<void()> rec = [&]() {
        auto [u, w] = path.back();
        if (u == m && w == n) {
            out.push_back(path);
            return;
        }
        if (u < m) {
            path.emplace_back(u + 1, w);
            rec();
            path.pop_back();
        }
        if (w < n) {
            path.emplace_back(u, w + 1);
            rec();
            path.pop_back();
        }
        if (u < m && w < n) {
            path.emplace_back(u + 1, w + 1);
            rec();
            path.pop_back();
        }
    };
    rec();
}

}  // namespace

ProductRecord product_complex(const ComplexPtr& a, const ComplexPtr& b) {
    ProductRecord rec;
    rec.left = a;
    rec.right = b;

    int nb = static_cast<int>(b->vertex_names.size());
    std::vector<std::string> names;
    names.reserve(a->vertex_names.size() * nb);
    for (const auto& va : a->vertex_names)
        for (const auto& vb : b->vertex_names) names.push_back("(" + va + "," + vb + ")");

    std::vector<Simplex> cells;
    std::vector<std::pair<int, int>> carriers;
    std::vector<std::vector<std::pair<int, int>>> paths;
    for (int sa = 0; sa < a->size(); ++sa) {
        const Simplex& sigma = a->simplices[sa];
        for (int sb = 0; sb < b->size(); ++sb) {
            const Simplex& tau = b->simplices[sb];
            paths.clear();
            enumerate_paths(SimplicialComplex::dim_of(sigma), SimplicialComplex::dim_of(tau),
                            paths);
            for (const auto& path : paths) {
                Simplex cell;
                for (auto [u, w] : path) cell.push_back(sigma[u] * nb + tau[w]);
                cells.push_back(std::move(cell));
                carriers.emplace_back(sa, sb);
            }
        }
    }

    rec.product = validate_complex_indexed(names, cells);
    // Recover carriers from coordinate spans; the per-pair enumeration above
    // already produced every cell once, so this is a total reindexing.
    rec.cell_carrier.assign(rec.product->size(), {-1, -1});
    for (int i = 0; i < rec.product->size(); ++i) {
        Simplex sa, sb;
        for (int v : rec.product->simplices[i]) {
            sa.push_back(v / nb);
            sb.push_back(v % nb);
        }
        std::sort(sa.begin(), sa.end());
        sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
        std::sort(sb.begin(), sb.end());
        sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
        rec.cell_carrier[i] = {a->id_of(sa), b->id_of(sb)};
    }
    return rec;
}

OpenSet product_set(const ProductRecord& rec, const OpenSet& u1, const OpenSet& u2) {
    if (!same_host(u1.host, rec.left) || !same_host(u2.host, rec.right))
        throw ValidationError("product_set: open sets do not match the product factors");
    OpenSet out{rec.product, {}};
    for (int i = 0; i < rec.product->size(); ++i) {
        auto [ca, cb] = rec.cell_carrier[i];
        if (u1.cells.count(ca) && u2.cells.count(cb)) out.cells.insert(i);
    }
    return out;
}

}  // namespace lefint
