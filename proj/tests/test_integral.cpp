#include <doctest.h>

#include "support/corpus.hpp"

using namespace lefint;
using namespace lefint::testsupport;

TEST_CASE("normalize sums a presentation into cell values") {
    ComplexPtr t = closed_triangle();
    OpenSet u = make_open_set(t, {{0}, {0, 1}});
    OpenSet v = make_open_set(t, {{0}, {0, 1, 2}});
    ConstructibleFunction h = normalize({{2, u}, {-1, v}});
    CHECK(h.value(t->id_of({0})) == 1);
    CHECK(h.value(t->id_of({0, 1})) == 2);
    CHECK(h.value(t->id_of({0, 1, 2})) == -1);
    CHECK(h.value(t->id_of({1})) == 0);
    REQUIRE(h.presentation.has_value());
    CHECK(h.presentation->size() == 2);
}

TEST_CASE("level sets partition the nonzero cells") {
    ComplexPtr t = closed_triangle();
    ConstructibleFunction h = normalize({{2, make_open_set(t, {{0}, {1}})},
                                         {1, make_open_set(t, {{1}, {2}})}});
    std::map<long long, OpenSet> levels = level_sets(h);
    CHECK(levels.size() == 3);
    CHECK(levels.at(1).cells == std::set<int>{t->id_of({2})});
    CHECK(levels.at(2).cells == std::set<int>{t->id_of({0})});
    CHECK(levels.at(3).cells == std::set<int>{t->id_of({1})});
}

TEST_CASE("integral of 2 * indicator uses the factor-k convention") {
    ComplexPtr e = closed_edge();
    OpenSet open_edge = make_open_set(e, {{0, 1}});
    ConstructibleFunction h = normalize({{2, open_edge}});
    LefschetzMeasure m = identity_measure(e);
    CHECK(integrate(h, m) == -2);
    CHECK(integrate_via_levels(h, m) == -2);
}

TEST_CASE("Euler integration counts cells with alternating signs") {
    ComplexPtr t = closed_triangle();
    CHECK(euler_integrate(constant_function(t, 1)) == 1);
    CHECK(euler_integrate(indicator(make_open_set(t, {{0, 1, 2}}))) == 1);
    CHECK(euler_integrate(indicator(make_open_set(t, {{0, 1}}))) == -1);
}

TEST_CASE("integration is linear in the function") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    for (int it = 0; it < 50; ++it) {
        MapInstance inst = random_automorphism_instance(rng);
        LefschetzMeasure m = make_measure(inst.f);
        std::vector<WeightedSupport> p1, p2;
        for (int j = 0; j < 2; ++j) {
            p1.push_back({coeff(rng), random_invariant_set(rng, inst.x, inst.f)});
            p2.push_back({coeff(rng), random_invariant_set(rng, inst.x, inst.f)});
        }
        std::vector<WeightedSupport> joint = p1;
        joint.insert(joint.end(), p2.begin(), p2.end());
        CHECK(integrate(normalize(joint), m) ==
              integrate(normalize(p1), m) + integrate(normalize(p2), m));
    }
}

TEST_CASE("the integral is independent of the presentation") {
    std::mt19937 rng(52);
    std::uniform_int_distribution<long long> coeff(1, 3);
    for (int it = 0; it < 60; ++it) {
        MapInstance inst = random_automorphism_instance(rng);
        LefschetzMeasure m = make_measure(inst.f);
        OpenSet u = random_invariant_set(rng, inst.x, inst.f);
        OpenSet v = random_invariant_set(rng, inst.x, inst.f);
        long long c = coeff(rng);
        // c*1_U + 1_V  ==  c*1_{U\V} + (c+1)*1_{U cap V} + 1_{V\U}.
        ConstructibleFunction h1 = normalize({{c, u}, {1, v}});
        ConstructibleFunction h2 = normalize({{c, set_difference(u, v)},
                                              {c + 1, set_intersection(u, v)},
                                              {1, set_difference(v, u)}});
        CHECK(h1.values == h2.values);
        Rational i1 = integrate(h1, m), i2 = integrate(h2, m);
        CHECK(i1 == i2);
        CHECK(i1 == integrate_via_levels(h1, m));
    }
}

TEST_CASE("integration requires invariant supports") {
    ComplexPtr e = closed_edge();
    SelfMap swap = make_self_map(e, {1, 0});
    ConstructibleFunction h = normalize({{1, make_open_set(e, {{0}})}});
    CHECK_THROWS_AS(integrate(h, make_measure(swap)), PreconditionError);
}

TEST_CASE("Fubini on the unit square with a swapped fiber") {
    ComplexPtr base = closed_edge();
    ComplexPtr fiber = closed_edge();
    ProductRecord rec = product_complex(base, fiber);
    SelfMap l2 = make_self_map(fiber, {1, 0});
    LefschetzMeasure fm = make_measure(l2);
    ConstructibleFunction h = indicator(full_set(rec.product));
    FubiniResult r = fubini_trivial_bundle(rec, fm, h);
    // Fiber integral is Lambda(l2, F) = 1 on every base cell: rhs = chi(B) = 1.
    CHECK(r.lhs == r.rhs);
    CHECK(r.rhs == 1);
}

TEST_CASE("Fubini on random trivial bundles") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long long> coeff(-2, 2);
    for (int it = 0; it < 40; ++it) {
        ComplexPtr base = random_complex(rng, 5, 3);
        MapInstance fiber = random_automorphism_instance(rng);
        ProductRecord rec = product_complex(base, fiber.x);
        LefschetzMeasure fm = make_measure(fiber.f);
        // h = sum of c_j * 1_{B_j x F_j} with invariant fiber factors.
        std::vector<WeightedSupport> pres;
        for (int j = 0; j < 2; ++j) {
            OpenSet bj = random_cell_set(rng, base);
            OpenSet fj = random_invariant_set(rng, fiber.x, fiber.f);
            pres.push_back({coeff(rng), product_set(rec, bj, fj)});
        }
        ConstructibleFunction h = normalize(pres);
        FubiniResult r = fubini_trivial_bundle(rec, fm, h);
        CHECK(r.lhs == r.rhs);
    }
}

TEST_CASE("Fubini rejects integrands that are not constant on cell pairs") {
    ComplexPtr e = closed_edge();
    ProductRecord rec = product_complex(e, e);
    LefschetzMeasure fm = identity_measure(e);
    // A single cell of the open square: finer than the cell-pair decomposition.
    int edge_id = e->id_of({0, 1});
    int inner = -1;
    for (int id = 0; id < rec.product->size(); ++id)
        if (rec.cell_carrier[id] == std::make_pair(edge_id, edge_id)) inner = id;
    REQUIRE(inner >= 0);
    OpenSet one_cell{rec.product, {inner}};
    ConstructibleFunction h = indicator(one_cell);
    CHECK_THROWS_AS(fubini_trivial_bundle(rec, fm, h), PreconditionError);
}
