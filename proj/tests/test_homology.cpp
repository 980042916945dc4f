#include <doctest.h>

#include "support/corpus.hpp"

using namespace lefint;
using namespace lefint::testsupport;

TEST_CASE("Betti numbers of the standard small spaces") {
    CHECK(betti_numbers(closed_edge()) == std::vector<int>{1, 0});
    CHECK(betti_numbers(closed_triangle()) == std::vector<int>{1, 0, 0});
    CHECK(betti_numbers(hollow_triangle()) == std::vector<int>{1, 1});
    ComplexPtr two = validate_complex({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK(betti_numbers(two) == std::vector<int>{2, 0});
    // Hollow tetrahedron: a 2-sphere.
    ComplexPtr sphere = validate_complex(
        {"a", "b", "c", "d"},
        {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
    CHECK(betti_numbers(sphere) == std::vector<int>{1, 0, 1});
}

TEST_CASE("homology representatives are cycles outside the image") {
    std::mt19937 rng(31);
    for (int it = 0; it < 40; ++it) {
        ChainComplexPtr c = boundary_matrices(random_complex(rng));
        HomologyBasis h = homology_basis(c);
        long long chi = 0;
        for (int p = 0; p <= c->dim(); ++p) {
            chi += (p % 2 ? -1 : 1) * h.betti[p];
            CHECK(h.reps[p].cols() == h.betti[p]);
            if (p >= 1 && h.betti[p] > 0) CHECK((c->boundary[p] * h.reps[p]).is_zero());
            CHECK(h.span[p].rank() == h.image_rank[p] + h.betti[p]);
        }
        // Euler-Poincare: alternating Betti sum = alternating cell count.
        CHECK(chi == combinatorial_euler(full_set(c->host)));
    }
}

TEST_CASE("induced map of a reflection of the circle") {
    ComplexPtr h = hollow_triangle();
    ChainComplexPtr c = boundary_matrices(h);
    SelfMap refl = make_self_map(h, {1, 0, 2});  // a <-> b, c fixed
    ChainMap phi = chain_map_of_vertex_map(refl.map, c, c);
    HomologyBasis basis = homology_basis(c);
    std::vector<QMatrix> ind = induced_homology_map(phi, basis);
    CHECK(ind[0].trace() == 1);
    CHECK(ind[1].trace() == -1);  // degree -1 on H_1
    CHECK(lefschetz_homological(phi) == 2);
}

TEST_CASE("Hopf trace formula on the full complex") {
    std::mt19937 rng(32);
    for (int it = 0; it < 60; ++it) {
        ComplexPtr x = random_complex(rng);
        SelfMap f = random_simplicial_self_map(rng, x);
        ChainComplexPtr c = boundary_matrices(x);
        ChainMap phi = chain_map_of_vertex_map(f.map, c, c);
        Rational chain_level = 0;
        std::vector<Rational> tr = restricted_trace(phi, full_set(x));
        for (int p = 0; p <= x->dim(); ++p) chain_level += (p % 2 ? -1 : 1) * tr[p];
        CHECK(chain_level == lefschetz_homological(phi));
    }
}

TEST_CASE("induced map rejects non-endomorphisms lightly") {
    ComplexPtr h = hollow_triangle();
    ChainComplexPtr c = boundary_matrices(h);
    HomologyBasis basis = homology_basis(c);
    ChainMap id = identity_chain_map(c);
    std::vector<QMatrix> ind = induced_homology_map(id, basis);
    for (size_t p = 0; p < ind.size(); ++p) CHECK(ind[p] == QMatrix::identity(basis.betti[p]));
}
