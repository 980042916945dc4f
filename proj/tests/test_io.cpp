#include <doctest.h>

#include "support/corpus.hpp"

using namespace lefint;
using namespace lefint::testsupport;

namespace {

DocumentBundle parse_text(const std::string& text) {
    DocumentBundle b;
    parse_into(b, text, "<test>");
    return b;
}

}  // namespace

TEST_CASE("parse a full bundle") {
    DocumentBundle b = parse_text(R"(
# a commented bundle
complex X
  vertices a b c
  simplex a b c   # closure computed
openset U on X
  cell a
  cell b
  cell a b
map f on X
  a -> b
  b -> a
  c -> c
function h on X
  2 U
scenario s on X
  symmetry f
  supports U
)");
    CHECK(b.complexes.at("X")->size() == 7);
    CHECK(b.open_sets.at("U").cells.size() == 3);
    CHECK(b.maps.at("f").map.assignment == std::vector<int>{1, 0, 2});
    CHECK(b.functions.at("h").value(b.complexes.at("X")->id_of({0, 1})) == 2);
    CHECK(b.scenarios.at("s").supports.size() == 1);
}

TEST_CASE("unknown references are named") {
    CHECK_THROWS_WITH_AS(parse_text("complex X\n  vertices a\n  simplex a z\n"),
                         doctest::Contains("z"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_text("complex X\n  vertices a\nopenset U on X\n  cell q\n"),
                         doctest::Contains("unknown vertex 'q'"), UnknownReferenceError);
    CHECK_THROWS_WITH_AS(parse_text("openset U on Y\n"), doctest::Contains("unknown complex 'Y'"),
                         UnknownReferenceError);
    CHECK_THROWS_WITH_AS(parse_text("complex X\n  vertices a\nfunction h on X\n  1 W\n"),
                         doctest::Contains("unknown openset 'W'"), UnknownReferenceError);
}

TEST_CASE("non-simplicial map files name the offending simplex") {
    std::string text = R"(
complex P
  vertices a b c
  simplex a b
  simplex b c
map g on P
  a -> a
  b -> c
  c -> c
)";
    CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("[a,b]"), ValidationError);
}

TEST_CASE("syntax errors carry file and line") {
    CHECK_THROWS_WITH_AS(parse_text("complex X\n  vertices a\n  garbage\n"),
                         doctest::Contains("<test>:3"), ParseError);
    CHECK_THROWS_AS(parse_text("what\n"), ParseError);
    CHECK_THROWS_AS(parse_text("complex\n"), ParseError);
}

TEST_CASE("non-invariant scenario supports are rejected") {
    std::string text = R"(
complex X
  vertices a b
  simplex a b
map f on X
  a -> b
  b -> a
openset V on X
  cell a
scenario s on X
  symmetry f
  supports V
)";
    CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("not invariant"), ValidationError);
}

TEST_CASE("serialization round-trips to the same canonical form") {
    std::mt19937 rng(71);
    for (int it = 0; it < 20; ++it) {
        MapInstance inst = random_automorphism_instance(rng);
        OpenSet u = random_invariant_set(rng, inst.x, inst.f);
        std::string text = serialize_complex("X", *inst.x) + serialize_map("f", "X", inst.f) +
                           serialize_open_set("U", "X", u);
        DocumentBundle b = parse_text(text);
        CHECK(b.complexes.at("X")->same_as(*inst.x));
        CHECK(b.maps.at("f").map.assignment == inst.f.map.assignment);
        CHECK(b.open_sets.at("U").cells == u.cells);
        // Idempotence on canonical form.
        std::string again = serialize_complex("X", *b.complexes.at("X")) +
                            serialize_map("f", "X", b.maps.at("f")) +
                            serialize_open_set("U", "X", b.open_sets.at("U"));
        CHECK(again == text);
    }
}

TEST_CASE("functions and scenarios round-trip") {
    ComplexPtr t = closed_triangle();
    ConstructibleFunction h = normalize({{2, make_open_set(t, {{0}, {0, 1}})},
                                         {-1, make_open_set(t, {{0, 1, 2}})}});
    DocumentBundle b = parse_text(serialize_complex("T", *t) + serialize_function("h", "T", h));
    CHECK(b.functions.at("h").values == h.values);

    Scenario s = euler_defeating_scenario();
    DocumentBundle sb = parse_text(serialize_scenario("sc", s));
    const Scenario& back = sb.scenarios.at("sc");
    CHECK(back.host->same_as(*s.host));
    CHECK(back.symmetry.map.assignment == s.symmetry.map.assignment);
    REQUIRE(back.supports.size() == s.supports.size());
    for (size_t j = 0; j < back.supports.size(); ++j)
        CHECK(back.supports[j].cells == s.supports[j].cells);
    CHECK(count_targets(back) == 2);
}

TEST_CASE("depth-1 maps round-trip through barycenter names") {
    std::mt19937 rng(72);
    ComplexPtr x = random_complex(rng, 5, 3);
    SelfMap f = random_subdivided_self_map(rng, x);
    DocumentBundle b =
        parse_text(serialize_complex("X", *x) + serialize_map("f", "X", f));
    const SelfMap& back = b.maps.at("f");
    CHECK(back.depth == 1);
    CHECK(back.map.assignment == f.map.assignment);
    CHECK(lambda(make_measure(back), full_set(x)) == lambda(make_measure(f), full_set(x)));
}

TEST_CASE("rational_to_string") {
    CHECK(rational_to_string(Rational(3)) == "3");
    CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK(rational_to_string(Rational(0)) == "0");
}
