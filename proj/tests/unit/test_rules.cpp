#include <doctest.h>

#include "chrank/catalog.hpp"
#include "chrank/rules.hpp"

using namespace chrank;

namespace {

int upper_of(const SpaceEntry& e) { return uchrank_upper(*e.ring, e.meta).bound; }

bool fired(const UpperBound& ub, const std::string& rule) {
    for (const RuleFire& f : ub.trace)
        if (f.rule == rule) return true;
    return false;
}

} // namespace

TEST_CASE("lower bound: maximum over candidates with the trivial floor") {
    SpaceEntry c5 = cp(5);
    CHECK(uchrank_lower(c5.candidates, *c5.ring, c5.dim) == 10);

    SpaceEntry s6 = sphere(6);
    CHECK(uchrank_lower({}, *s6.ring, 6) == 4); // r_X - 2 floor

    SpaceEntry p24 = sphere_product(2, 4);
    CHECK(uchrank_lower(p24.candidates, *p24.ring, 6) == 6);
}

TEST_CASE("upper bound rules") {
    // R1: non-cyclic first even piece
    SpaceEntry p44 = sphere_product(4, 4);
    UpperBound u44 = uchrank_upper(*p44.ring, p44.meta);
    CHECK(u44.bound == 2);
    CHECK(fired(u44, "R1-noncyclic"));

    // R5: power-of-two obstruction on a Stiefel manifold
    SpaceEntry v24 = stiefel(2, 4);
    UpperBound uv = uchrank_upper(*v24.ring, v24.meta);
    CHECK(uv.bound == 10);
    CHECK(fired(uv, "R5-power-of-two"));

    // R4: Bott obstruction via the identity retraction of S^6
    SpaceEntry s6 = sphere(6);
    UpperBound us = uchrank_upper(*s6.ring, s6.meta);
    CHECK(us.bound == 4);
    CHECK(fired(us, "R4-bott-retract"));

    // R6: stably trivial bundles over S^3 x S^3
    SpaceEntry p33 = sphere_product(3, 3);
    UpperBound up = uchrank_upper(*p33.ring, p33.meta);
    CHECK(up.bound == 4);
    CHECK(fired(up, "R6-product-k-trivial"));

    // R3: odd spheres have vanishing reduced K-theory
    SpaceEntry s5 = sphere(5);
    UpperBound u5 = uchrank_upper(*s5.ring, s5.meta);
    CHECK(u5.bound == 4);
    CHECK(fired(u5, "R3-k-trivial"));
}

TEST_CASE("R1 cyclicity comes from the ring, not from metadata") {
    SpaceEntry p44 = sphere_product(4, 4);
    SpaceMeta bare;
    bare.dim = p44.dim; // all flags off
    CHECK(uchrank_upper(*p44.ring, bare).bound == 2);
}

TEST_CASE("R2 suspension bound binds on a synthetic entry") {
    // suspension metadata on a ring whose H^4 is rank 2: k_X = 2
    RingPresentation p;
    p.generators = {{"a", 4}, {"b", 4}};
    p.relations = {Relation{1, Exponents{2, 0}, {}},
                   Relation{1, Exponents{0, 2}, {}},
                   Relation{1, Exponents{1, 1}, {}}};
    p.max_degree = 8;
    GradedRing r = compile(p);
    SpaceMeta meta;
    meta.dim = 8;
    meta.is_suspension = true;
    UpperBound ub = uchrank_upper(r, meta);
    CHECK(k_X(r, 8) == 2);
    CHECK(ub.bound == 2);
}

TEST_CASE("R4 stays silent in dimensions 2 and 4") {
    SpaceEntry s2 = sphere(2), s4 = sphere(4);
    CHECK(upper_of(s2) == 2);
    CHECK(upper_of(s4) == 4);
    CHECK_FALSE(fired(uchrank_upper(*s2.ring, s2.meta), "R4-bott-retract"));
    CHECK_FALSE(fired(uchrank_upper(*s4.ring, s4.meta), "R4-bott-retract"));
}

TEST_CASE("R5 stays silent when r_X is a power of two") {
    // synthetic: sw obstruction flagged but r_X = 4
    SpaceEntry s4 = sphere(4);
    SpaceMeta meta = s4.meta;
    meta.sw_obstruction = true;
    UpperBound ub = uchrank_upper(*s4.ring, meta);
    CHECK_FALSE(fired(ub, "R5-power-of-two"));
    CHECK(ub.bound == 4);
}

TEST_CASE("bott divisor") {
    CHECK(bott_divisor(1) == 1);
    CHECK(bott_divisor(2) == 1);
    CHECK(bott_divisor(3) == 2);
    CHECK(bott_divisor(4) == 6);
    CHECK(bott_divisor(21) == Int("2432902008176640000")); // 20!
    CHECK_THROWS_AS(bott_divisor(0), Error);
}

TEST_CASE("complex-manifold gap check") {
    SpaceEntry c3 = cp(3);
    std::vector<Bundle> cands = c3.candidates;
    cands.push_back(trivial_bundle(*c3.ring));
    GapCheck gap = check_thm29(*c3.ring, 3, cands);
    CHECK(gap.pass);

    SpaceEntry c2 = cp(2);
    GapCheck gap2 = check_thm29(*c2.ring, 2, c2.candidates);
    CHECK(gap2.pass);

    // the forbidden interval rejects a contrived middle rank
    CHECK_FALSE(thm29_allows(3, 2, 4)); // [2d - r_X, 2d) = [4, 6)
    CHECK(thm29_allows(3, 2, 6));
    CHECK(thm29_allows(3, 2, 2));

    // a bundle whose c_1 generates cannot sit in the forbidden zone: the
    // checker confirms every honest candidate lands outside it
    Bundle l = c3.candidates[0];
    CHECK(chernrank(l, *c3.ring, 6) == 6);

    // preconditions
    CHECK_THROWS_AS(check_thm29(*cp(1).ring, 1, {}), PreconditionNotMet);
    SpaceEntry r4 = rp(4); // H^2 = Z/2, not infinite cyclic
    CHECK_THROWS_AS(check_thm29(*r4.ring, 2, {}), PreconditionNotMet);
}

TEST_CASE("combine") {
    UpperBound six{6, {{"ceiling", 6, ""}}};
    RankReport det = combine(6, six);
    CHECK(det.determined);
    CHECK(det.lower == 6);
    CHECK(det.upper == 6);

    RankReport open = combine(4, six);
    CHECK_FALSE(open.determined);

    CHECK_THROWS_AS(combine(8, six), InconsistentBounds);
}

TEST_CASE("catalog-wide: no rule contradicts a constructed candidate") {
    for (const SpaceEntry& e : build_catalog(VerifyBounds{}.clamped(6))) {
        const int lower = uchrank_lower(e.candidates, *e.ring, e.dim);
        UpperBound ub = uchrank_upper(*e.ring, e.meta);
        CHECK(lower <= ub.bound);
    }
}
