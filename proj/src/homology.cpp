#include "lefint/homology.hpp"

namespace lefint {

namespace {

// Incremental echelon form for independence testing.
class Echelon {
public:
    explicit Echelon(int n) : n_(n) {}

    // Reduce v against the stored basis; if a nonzero remainder survives,
    // keep it and report independence.
    bool add(std::vector<Rational> v) {
        for (size_t k = 0; k < rows_.size(); ++k) {
            Rational f = v[pivots_[k]];
            if (f == 0) continue;
            for (int i = 0; i < n_; ++i)
                if (rows_[k][i] != 0) v[i] -= f * rows_[k][i];
        }
        int pivot = -1;
        for (int i = 0; i < n_; ++i)
            if (v[i] != 0) { pivot = i; break; }
        if (pivot < 0) return false;
        Rational inv = 1 / v[pivot];
        for (int i = 0; i < n_; ++i) v[i] *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    int n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

std::vector<Rational> column_of(const QMatrix& m, int j) {
    std::vector<Rational> v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

}  // namespace

HomologyBasis homology_basis(const ChainComplexPtr& c) {
    HomologyBasis h;
    h.chain = c;
    int dim = c->dim();
    h.betti.assign(dim + 1, 0);
    h.reps.resize(dim + 1);
    h.span.resize(dim + 1);
    h.image_rank.assign(dim + 1, 0);

    for (int p = 0; p <= dim; ++p) {
        int n = c->rank(p);
        QMatrix cycles = (p == 0) ? QMatrix::identity(n) : c->boundary[p].kernel_basis();

        // Greedy deterministic bases: first the boundary space from d_{p+1},
        // then cycle columns extending it; the latter represent homology.
        Echelon ech(n);
        std::vector<int> image_cols;
        if (p + 1 <= dim) {
            const QMatrix& d = c->boundary[p + 1];
            for (int j = 0; j < d.cols(); ++j)
                if (ech.add(column_of(d, j))) image_cols.push_back(j);
        }
        std::vector<int> rep_cols;
        for (int j = 0; j < cycles.cols(); ++j)
            if (ech.add(column_of(cycles, j))) rep_cols.push_back(j);

        h.image_rank[p] = static_cast<int>(image_cols.size());
        h.betti[p] = static_cast<int>(rep_cols.size());
        h.reps[p] = QMatrix(n, h.betti[p]);
        for (int k = 0; k < h.betti[p]; ++k)
            for (int i = 0; i < n; ++i) h.reps[p](i, k) = cycles(i, rep_cols[k]);
        h.span[p] = QMatrix(n, h.image_rank[p] + h.betti[p]);
        for (int j = 0; j < h.image_rank[p]; ++j)
            for (int i = 0; i < n; ++i) h.span[p](i, j) = c->boundary[p + 1](i, image_cols[j]);
        for (int j = 0; j < h.betti[p]; ++j)
            for (int i = 0; i < n; ++i) h.span[p](i, h.image_rank[p] + j) = h.reps[p](i, j);
    }
    return h;
}

std::vector<int> betti_numbers(const ComplexPtr& x) {
    return homology_basis(boundary_matrices(x)).betti;
}

std::vector<QMatrix> induced_homology_map(const ChainMap& phi, const HomologyBasis& h) {
    if (!same_host(phi.source->host, phi.target->host))
        throw ValidationError("induced_homology_map: chain map is not an endomorphism");
    if (!satisfies_chain_map_law(phi))
        throw ValidationError("induced_homology_map: chain-map law violated");
    std::vector<QMatrix> out;
    for (int p = 0; p <= phi.source->dim(); ++p) {
        int b = h.betti[p];
        QMatrix m(b, b);
        for (int j = 0; j < b; ++j) {
            // Push the j-th representative through phi, then express it in the
            // span [boundaries | representatives] and keep the quotient part.
            std::vector<Rational> image(phi.source->rank(p), 0);
            for (int i = 0; i < phi.mats[p].rows(); ++i) {
                Rational acc = 0;
                for (int k = 0; k < phi.mats[p].cols(); ++k)
                    if (phi.mats[p](i, k) != 0 && h.reps[p](k, j) != 0)
                        acc += phi.mats[p](i, k) * h.reps[p](k, j);
                image[i] = acc;
            }
            std::vector<Rational> coords = h.span[p].solve(image);
            for (int i = 0; i < b; ++i) m(i, j) = coords[h.image_rank[p] + i];
        }
        out.push_back(std::move(m));
    }
    return out;
}

Rational lefschetz_homological(const ChainMap& phi) {
    HomologyBasis h = homology_basis(phi.source);
    std::vector<QMatrix> induced = induced_homology_map(phi, h);
    Rational lambda = 0;
    for (int p = 0; p < static_cast<int>(induced.size()); ++p)
        lambda += (p % 2 == 0 ? 1 : -1) * induced[p].trace();
    return lambda;
}

}  // namespace lefint
