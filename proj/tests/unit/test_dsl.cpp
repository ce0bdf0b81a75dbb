#include <doctest.h>

#include "chrank/dsl.hpp"

using namespace chrank;

TEST_CASE("parse a projective-space file") {
    const std::string text =
        "# real projective 6-space\n"
        "space RP^6 dim 6\n"
        "gen a deg 2\n"
        "rel 2*a = 0\n"
        "rel a^4 = 0\n"
        "bundle L\n"
        "c1 = a\n";
    CompiledDoc doc = compile_document(parse(text));
    CHECK(doc.name == "RP^6");
    CHECK(doc.dim == 6);
    REQUIRE(doc.bundles.size() == 1);
    CHECK(ring_equal(*doc.ring, *rp(6).ring));
    CHECK(chernrank(doc.bundles[0], *doc.ring, doc.dim) == 6);
}

TEST_CASE("empty space block gives the one-point ring") {
    CompiledDoc doc = compile_document(parse("space pt dim 0\n"));
    CHECK(doc.ring->basis(0).size() == 1);
    CHECK(doc.ring->max_degree() == 0);
}

TEST_CASE("expression parsing handles signs, powers and parentheses") {
    const std::string text =
        "space X dim 8\n"
        "gen a deg 2\n"
        "gen b deg 4\n"
        "rel b^2 = 0\n"
        "rel a^3 = 0\n"
        "bundle E\n"
        "c3 = 2*a*b - (a^2)*a\n";
    CompiledDoc doc = compile_document(parse(text));
    const GradedRing& r = *doc.ring;
    RingElement want = scale(
        Int(2), r.multiply(r.generator_element("a"), r.generator_element("b")),
        r); // a^3 = 0 kills the second term
    CHECK(bundle_class(doc.bundles[0], 3, r) == want);
}

TEST_CASE("parse errors carry a location") {
    try {
        parse("space X dim 6\ngen a deg\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 0);
    }
    CHECK_THROWS_AS(parse("gen a deg 2\n"), ParseError); // no space line
    CHECK_THROWS_AS(parse("space X dim 2\nrel ??? = 0\n"), ParseError);
    CHECK_THROWS_AS(parse("space X dim 2\ngen a deg 2\nc1 = a\n"), ParseError);
}

TEST_CASE("degree errors") {
    CHECK_THROWS_AS(
        parse("space X dim 4\ngen a deg 2\nbundle L\nc1 = a^2\n"), DegreeError);
    CHECK_THROWS_AS(
        parse("space X dim 4\ngen a deg 2\ngen b deg 4\nrel a = b\n"),
        DegreeError);
}

TEST_CASE("scaled relation with remainder is inadmissible") {
    CHECK_THROWS_AS(
        parse("space X dim 4\ngen a deg 2\ngen b deg 2\nrel 2*a = b\n"),
        NonAdmissiblePresentation);
}

TEST_CASE("mod-2 coefficients") {
    CompiledDoc doc = compile_document(
        parse("space X dim 4 coeff Z2\ngen a deg 2\n"));
    CHECK(doc.ring->mod_p() == 2);
    CHECK(doc.ring->piece(2).orders == std::vector<Int>{2});
}

TEST_CASE("table form parses") {
    const std::string text =
        "space Y dim 8\n"
        "basis u2 deg 4\n"
        "basis u3 deg 6\n"
        "basis u4 deg 8\n"
        "table u2 * u2 = u4\n"
        "table u2 * u3 = 0\n"
        "bundle K\n"
        "c2 = u2\n";
    CompiledDoc doc = compile_document(parse(text));
    CHECK(doc.ring->table_backed());
    RingElement u2 = doc.ring->generator_element("u2");
    CHECK(doc.ring->multiply(u2, u2) == doc.ring->generator_element("u4"));
}

TEST_CASE("flags populate the metadata") {
    const std::string text =
        "space X dim 6\n"
        "gen s deg 6\n"
        "flag is_suspension = true\n"
        "flag k_reduced_trivial = false\n"
        "flag sphere_retract_dims = 6,2\n"
        "flag complex_dim = 3\n";
    DslDocument doc = parse(text);
    CHECK(doc.meta.is_suspension);
    CHECK_FALSE(doc.meta.k_reduced_trivial);
    CHECK(doc.meta.sphere_retract_dims == std::vector<int>{6, 2});
    REQUIRE(doc.meta.complex_dim.has_value());
    CHECK(*doc.meta.complex_dim == 3);
}

TEST_CASE("export then parse reproduces every catalog ring") {
    for (const SpaceEntry& e : build_catalog(VerifyBounds{})) {
        CompiledDoc doc = compile_document(parse(export_dsl(e)));
        CHECK(doc.name == e.name);
        CHECK(doc.dim == e.dim);
        CHECK(ring_equal(*doc.ring, *e.ring));
        REQUIRE(doc.bundles.size() == e.candidates.size());
        for (std::size_t i = 0; i < doc.bundles.size(); ++i) {
            CHECK(doc.bundles[i].label == e.candidates[i].label);
            CHECK(doc.bundles[i].classes == e.candidates[i].classes);
        }
    }
}
