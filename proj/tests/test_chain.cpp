#include <doctest.h>

#include "support/corpus.hpp"

using namespace lefint;
using namespace lefint::testsupport;

TEST_CASE("boundary of an edge and a triangle") {
    ComplexPtr e = closed_edge();
    ChainComplexPtr c = boundary_matrices(e);
    // d[a,b] = [b] - [a]
    CHECK(c->boundary[1](0, 0) == -1);
    CHECK(c->boundary[1](1, 0) == 1);

    ChainComplexPtr ct = boundary_matrices(closed_triangle());
    // d[a,b,c] = [b,c] - [a,c] + [a,b]
    CHECK(ct->boundary[2](ct->basis_position(ct->host->id_of({1, 2})), 0) == 1);
    CHECK(ct->boundary[2](ct->basis_position(ct->host->id_of({0, 2})), 0) == -1);
    CHECK(ct->boundary[2](ct->basis_position(ct->host->id_of({0, 1})), 0) == 1);
}

TEST_CASE("d compose d = 0 on random complexes") {
    std::mt19937 rng(21);
    for (int it = 0; it < 60; ++it) {
        ChainComplexPtr c = boundary_matrices(random_complex(rng));
        for (int p = 2; p <= c->dim(); ++p) CHECK((c->boundary[p - 1] * c->boundary[p]).is_zero());
    }
}

TEST_CASE("sort_sign") {
    CHECK(sort_sign({0, 1, 2}) == 1);
    CHECK(sort_sign({1, 0}) == -1);
    CHECK(sort_sign({2, 0, 1}) == 1);
    CHECK(sort_sign({1, 1}) == 0);
}

TEST_CASE("vertex maps must be simplicial") {
    ComplexPtr h = hollow_triangle();
    CHECK_NOTHROW(make_vertex_map(h, h, {0, 1, 2}));
    ComplexPtr path = validate_complex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    // (a,b) would land on {a,c}, which is not a simplex of the path.
    CHECK_THROWS_AS(make_vertex_map(path, path, {0, 2, 2}), ValidationError);
}

TEST_CASE("chain map of a vertex map: signs and degeneracies") {
    ComplexPtr e = closed_edge();
    ChainComplexPtr c = boundary_matrices(e);
    ChainMap swap = chain_map_of_vertex_map(make_vertex_map(e, e, {1, 0}), c, c);
    CHECK(swap.at(1)(0, 0) == -1);  // [a,b] -> [b,a] = -[a,b]
    CHECK(swap.at(0)(0, 0) == 0);
    CHECK(swap.at(0)(1, 0) == 1);
    ChainMap collapse = chain_map_of_vertex_map(make_vertex_map(e, e, {0, 0}), c, c);
    CHECK(collapse.at(1).is_zero());  // degenerate image
}

TEST_CASE("chain-map law on random self-maps") {
    std::mt19937 rng(22);
    for (int it = 0; it < 80; ++it) {
        ComplexPtr x = random_complex(rng);
        SelfMap f = random_simplicial_self_map(rng, x);
        ChainComplexPtr c = boundary_matrices(x);
        ChainMap phi = chain_map_of_vertex_map(f.map, c, c);
        CHECK(satisfies_chain_map_law(phi));
    }
}

TEST_CASE("subdivision operator: chain-map law and carrier support") {
    std::mt19937 rng(23);
    for (int it = 0; it < 25; ++it) {
        ComplexPtr x = random_complex(rng, 6, 4);
        SubdivisionRecord rec = barycentric_subdivision(x, 1);
        ChainComplexPtr c = boundary_matrices(x);
        ChainComplexPtr cr = boundary_matrices(rec.refined);
        ChainMap sd = subdivision_operator(rec, c, cr);
        CHECK(satisfies_chain_map_law(sd));
        for (int id = 0; id < x->size(); ++id) {
            int p = SimplicialComplex::dim_of(x->simplices[id]);
            int col = c->basis_position(id);
            int support = 0;
            for (int rid : rec.refined->by_dim[p]) {
                const Rational& coef = sd.at(p)(cr->basis_position(rid), col);
                if (coef == 0) continue;
                CHECK((coef == 1 || coef == -1));
                CHECK(rec.carrier[rid] == id);  // supported only on carried cells
                ++support;
            }
            // A p-cell subdivides into (p+1)! refined p-cells, all hit.
            int factorial = 1;
            for (int k = 2; k <= p + 1; ++k) factorial *= k;
            CHECK(support == factorial);
        }
    }
}

TEST_CASE("subdivision operator on the closed edge, explicitly") {
    ComplexPtr e = closed_edge();
    SubdivisionRecord rec = barycentric_subdivision(e, 1);
    ChainComplexPtr c = boundary_matrices(e);
    ChainComplexPtr cr = boundary_matrices(rec.refined);
    ChainMap sd = subdivision_operator(rec, c, cr);
    // sd[a,b] is a +-1 combination of the two halves whose boundary must be
    // b_hat - a_hat. Vertex i of the refinement is the barycenter of the
    // original simplex with id i, so a_hat = vertex 0, b_hat = vertex 1.
    std::vector<Rational> bd(static_cast<size_t>(cr->rank(0)), 0);
    for (int i = 0; i < cr->rank(0); ++i)
        for (int j = 0; j < cr->rank(1); ++j)
            bd[static_cast<size_t>(i)] += cr->boundary[1](i, j) * sd.at(1)(j, 0);
    CHECK(bd[cr->basis_position(rec.refined->id_of({0}))] == -1);
    CHECK(bd[cr->basis_position(rec.refined->id_of({1}))] == 1);
    CHECK(bd[cr->basis_position(rec.refined->id_of({2}))] == 0);
}

TEST_CASE("restricted trace: swap on the closed edge over the open edge") {
    ComplexPtr e = closed_edge();
    ChainComplexPtr c = boundary_matrices(e);
    ChainMap swap = chain_map_of_vertex_map(make_vertex_map(e, e, {1, 0}), c, c);
    OpenSet w = make_open_set(e, {{0, 1}});
    std::vector<Rational> tr = restricted_trace(swap, w);
    CHECK(tr[0] == 0);
    CHECK(tr[1] == -1);
}

TEST_CASE("restricted trace is additive over disjoint cell sets") {
    std::mt19937 rng(24);
    for (int it = 0; it < 60; ++it) {
        ComplexPtr x = random_complex(rng);
        SelfMap f = random_simplicial_self_map(rng, x);
        ChainComplexPtr c = boundary_matrices(x);
        ChainMap phi = chain_map_of_vertex_map(f.map, c, c);
        OpenSet a = random_cell_set(rng, x);
        OpenSet b = set_difference(random_cell_set(rng, x), a);
        std::vector<Rational> ta = restricted_trace(phi, a), tb = restricted_trace(phi, b),
                              tu = restricted_trace(phi, set_union(a, b));
        for (int p = 0; p <= x->dim(); ++p) CHECK(tu[p] == ta[p] + tb[p]);
    }
}

TEST_CASE("compose with the identity is the identity") {
    ComplexPtr x = closed_triangle();
    ChainComplexPtr c = boundary_matrices(x);
    SelfMap rot = make_self_map(x, {1, 2, 0});
    ChainMap phi = chain_map_of_vertex_map(rot.map, c, c);
    ChainMap id = identity_chain_map(c);
    ChainMap left = compose(id, phi), right = compose(phi, id);
    for (int p = 0; p <= x->dim(); ++p) {
        CHECK(left.at(p) == phi.at(p));
        CHECK(right.at(p) == phi.at(p));
    }
}
