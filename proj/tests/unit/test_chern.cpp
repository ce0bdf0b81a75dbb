#include <doctest.h>

#include "chrank/catalog.hpp"
#include "chrank/chern.hpp"

using namespace chrank;

TEST_CASE("whitney sum") {
    SpaceEntry e = sphere_product(2, 4);
    const GradedRing& r = *e.ring;
    RingElement a = r.generator_element("a");
    RingElement b = r.generator_element("b");
    Bundle x = make_bundle("x", {a}, r);
    Bundle y = make_bundle("y", {r.zero(), b}, r);
    Bundle sum = whitney_sum(x, y, r);
    CHECK(bundle_class(sum, 1, r) == a);
    CHECK(bundle_class(sum, 2, r) == b);
    CHECK(bundle_class(sum, 3, r) == r.multiply(a, b));

    // adding a trivial bundle changes nothing
    Bundle with_trivial = whitney_sum(x, trivial_bundle(r), r);
    CHECK(with_trivial.classes == x.classes);

    // (1 + a) ^ 2 over CP^2
    SpaceEntry c = cp(2);
    RingElement ca = c.ring->generator_element("a");
    Bundle l = make_bundle("L", {ca}, *c.ring);
    Bundle ll = whitney_sum(l, l, *c.ring);
    CHECK(bundle_class(ll, 1, *c.ring) == scale(Int(2), ca, *c.ring));
    CHECK(bundle_class(ll, 2, *c.ring) == c.ring->multiply(ca, ca));
}

TEST_CASE("whitney sum rejects mixed rings") {
    SpaceEntry a = cp(2), b = cp(3);
    Bundle x = make_bundle("x", {a.ring->generator_element("a")}, *a.ring);
    Bundle y = make_bundle("y", {b.ring->generator_element("a")}, *b.ring);
    CHECK_THROWS_AS(whitney_sum(x, y, *a.ring), Error);
}

TEST_CASE("conjugate flips odd classes and is an involution") {
    SpaceEntry e = cp(3);
    const GradedRing& r = *e.ring;
    RingElement a = r.generator_element("a");
    Bundle l = make_bundle("L", {a}, r);
    Bundle lc = conjugate(l);
    CHECK(bundle_class(lc, 1, r) == scale(Int(-1), a, r));
    Bundle lcc = conjugate(lc);
    CHECK(lcc.classes == l.classes);

    // a class in degree 4 is a c_2 and keeps its sign
    SpaceEntry h = hp(1);
    Bundle q = h.candidates[0];
    CHECK(conjugate(q).classes == q.classes);

    // dual is an alias
    CHECK(dual(l).classes == conjugate(l).classes);
}

TEST_CASE("make_bundle validates degrees") {
    SpaceEntry e = cp(3);
    const GradedRing& r = *e.ring;
    RingElement a2 = r.monomial_element(Exponents{2});
    CHECK_THROWS_AS(make_bundle("bad", {a2}, r), DegreeError);
}

TEST_CASE("ring maps and pullbacks") {
    SpaceEntry c3 = cp(3);
    const GradedRing& r = *c3.ring;

    RingMap id = identity_map(r);
    Bundle l = c3.candidates[0];
    Bundle lid = pullback(id, l);
    CHECK(lid.classes == l.classes);

    // degree-one collapse: H^*(S^4) -> H^*(S^1 x S^3), s -> a*b
    SpaceEntry s4 = sphere(4);
    SpaceEntry t = sphere_product(1, 3);
    RingElement ab =
        t.ring->multiply(t.ring->generator_element("a"),
                         t.ring->generator_element("b"));
    RingMap collapse = make_ring_map(*s4.ring, *t.ring, {ab});
    Bundle q = make_bundle("Q", {s4.ring->zero(), s4.ring->generator_element("s")},
                           *s4.ring);
    Bundle pulled = pullback(collapse, q);
    CHECK(bundle_class(pulled, 2, *t.ring) == ab);
    CHECK(saturates({t.ring->coords(bundle_class(pulled, 2, *t.ring), 4)},
                    t.ring->piece(4)));

    // a map killing the generator kills the total class
    RingMap zero_map = make_ring_map(r, r, {r.zero()});
    Bundle dead = pullback(zero_map, l);
    CHECK(dead.classes.empty());
}

TEST_CASE("ring map construction rejects bad images") {
    SpaceEntry c2 = cp(2), c4 = cp(4);
    // wrong degree
    CHECK_THROWS_AS(
        make_ring_map(*c2.ring, *c4.ring, {c4.ring->monomial_element(Exponents{2})}),
        DegreeError);
    // relation violated: a^3 = 0 in CP^2 but not in CP^4
    CHECK_THROWS_AS(
        make_ring_map(*c2.ring, *c4.ring, {c4.ring->generator_element("a")}),
        DegreeError);
    // torsion respected: RP^4 -> CP^2 sending a -> a would need 2a = 0
    SpaceEntry r4 = rp(4);
    CHECK_THROWS_AS(
        make_ring_map(*r4.ring, *c2.ring, {c2.ring->generator_element("a")}),
        DegreeError);
}

TEST_CASE("chern subgroup evaluation") {
    SpaceEntry c3 = cp(3);
    const GradedRing& r = *c3.ring;
    Bundle l = c3.candidates[0];
    auto sub6 = chern_subgroup(l, r, 6);
    // partitions of 3: [3], [2,1], [1,1,1]; only c_1^3 is nonzero
    REQUIRE(sub6.size() == 3);
    CHECK(sub6[0] == GroupElement{Int(0)});
    CHECK(sub6[1] == GroupElement{Int(0)});
    CHECK(sub6[2] == GroupElement{Int(1)});
    CHECK(saturates(sub6, r.piece(6)));

    SpaceEntry c2 = cp(2);
    Bundle twisted = make_bundle(
        "T", {scale(Int(2), c2.ring->generator_element("a"), *c2.ring)}, *c2.ring);
    auto sub4 = chern_subgroup(twisted, *c2.ring, 4);
    REQUIRE(sub4.size() == 2); // [2], [1,1]
    CHECK(sub4[0] == GroupElement{Int(0)});
    CHECK(sub4[1] == GroupElement{Int(4)});
    CHECK_FALSE(saturates(sub4, c2.ring->piece(4)));

    auto sub2 = chern_subgroup(trivial_bundle(r), r, 2);
    REQUIRE(sub2.size() == 1);
    CHECK(sub2[0] == GroupElement{Int(0)});
}

TEST_CASE("chernrank on catalog spaces") {
    for (int n = 1; n <= 5; ++n) {
        SpaceEntry e = cp(n);
        CHECK(chernrank(e.candidates[0], *e.ring, e.dim) == 2 * n);
    }
    SpaceEntry c3 = cp(3);
    CHECK(chernrank(trivial_bundle(*c3.ring), *c3.ring, 6) == 0);

    SpaceEntry s6 = sphere(6);
    CHECK(chernrank(s6.candidates[0], *s6.ring, 6) == 4);

    for (int k = 1; k <= 4; ++k) {
        SpaceEntry e = rp(2 * k);
        CHECK(chernrank(e.candidates[0], *e.ring, e.dim) == 2 * k);
    }
}

TEST_CASE("chernrank never drops below r_X - 2 and respects lemma identities") {
    std::vector<SpaceEntry> sample = {cp(4),
                                      hp(2),
                                      sphere(6),
                                      sphere_product(2, 4),
                                      sphere_product(4, 4),
                                      rp(7),
                                      sphere_x_cp(3, 2),
                                      stunted_cp(5, 1)};
    for (const SpaceEntry& e : sample) {
        const int rx = r_X(*e.ring, e.dim);
        for (const Bundle& x : e.candidates) {
            const int cr = chernrank(x, *e.ring, e.dim);
            CHECK(cr >= rx - 2);
            CHECK(chernrank(conjugate(x), *e.ring, e.dim) == cr);
            CHECK(chernrank(dual(x), *e.ring, e.dim) == cr);
            CHECK(chernrank(whitney_sum(x, trivial_bundle(*e.ring), *e.ring),
                            *e.ring, e.dim) == cr);
            // bundles with identical class lists are indistinguishable
            Bundle copy = x;
            copy.label = "copy";
            CHECK(chernrank(copy, *e.ring, e.dim) == cr);
        }
    }
}

TEST_CASE("a vanishing component in degree r_X collapses the rank") {
    // c_{r_X/2}(x) = 0 forces chernrank x = r_X - 2 (the component in
    // degree r_X, not the r_X-th class).
    SpaceEntry c3 = cp(3);
    const GradedRing& r = *c3.ring;
    RingElement a = r.generator_element("a");
    Bundle no_c1 = make_bundle(
        "N", {r.zero(), r.multiply(a, a), r.multiply(a, r.multiply(a, a))}, r);
    CHECK(chernrank(no_c1, r, 6) == r_X(r, 6) - 2);
}

TEST_CASE("pullback inequality on catalog restriction maps") {
    for (const CatalogMap& cm : catalog_ring_maps()) {
        for (const Bundle& x : cm.source_bundles) {
            const int src = chernrank(x, *cm.source, cm.source_dim);
            Bundle pulled = pullback(cm.map, x);
            const int dst = chernrank(pulled, *cm.target, cm.target_dim);
            CHECK(dst >= std::min(src, cm.target_dim - 1));
        }
    }
}
