#include <doctest.h>

#include <random>

#include "chrank/catalog.hpp"
#include "chrank/cuplen.hpp"

using namespace chrank;

TEST_CASE("even cup length on catalog spaces") {
    for (int n = 1; n <= 6; ++n)
        CHECK(even_cup_length(*cp(n).ring, 2 * n).length == n);

    SpaceEntry p = sphere_product(2, 4);
    CupReport rep = even_cup_length(*p.ring, 6);
    CHECK(rep.length == 2);
    REQUIRE(rep.witness.size() == 2);
    CHECK(p.ring->monomial_string(rep.witness[0]) == "a");
    CHECK(p.ring->monomial_string(rep.witness[1]) == "b");

    CHECK(even_cup_length(*sphere(6).ring, 6).length == 1);
    CHECK(even_cup_length(*stiefel(2, 4).ring, 12).length == 1);
    CHECK(even_cup_length(*sphere(3).ring, 3).length == 0);
}

TEST_CASE("witness product is nonzero and of even degrees") {
    for (const SpaceEntry& e :
         {cp(4), hp(2), rp(8), sphere_x_cp(2, 3), stunted_cp(6, 2)}) {
        CupReport rep = even_cup_length(*e.ring, e.dim);
        REQUIRE(rep.length == static_cast<int>(rep.witness.size()));
        RingElement prod = e.ring->one();
        for (const Exponents& m : rep.witness) {
            const int d = e.ring->degree_of(m);
            CHECK(d >= 2);
            CHECK(d % 2 == 0);
            prod = e.ring->multiply(prod, e.ring->monomial_element(m));
        }
        if (rep.length > 0) CHECK_FALSE(prod.is_zero());
    }
}

TEST_CASE("basis search is sound for arbitrary even classes") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (const SpaceEntry& e :
         {cp(5), hp(2), rp(8), sphere_product(2, 4), sphere_x_rp(2, 4)}) {
        const GradedRing& r = *e.ring;
        const int bound = even_cup_length(r, e.dim).length;
        std::vector<int> even_degrees;
        for (int d = 2; d <= e.dim; d += 2)
            if (!r.basis(d).empty()) even_degrees.push_back(d);
        if (even_degrees.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, even_degrees.size() - 1);
        for (int iter = 0; iter < 100; ++iter) {
            RingElement prod = r.one();
            int len = 0;
            while (true) {
                const int d = even_degrees[pick(rng)];
                RingElement x;
                for (const Exponents& m : r.basis(d))
                    x.terms.emplace(m, coeff(rng));
                x = r.normalize(x);
                RingElement next = r.multiply(prod, x);
                if (next.is_zero()) break;
                prod = next;
                ++len;
            }
            CHECK(len <= bound);
        }
    }
}

TEST_CASE("cup length bound hypothesis") {
    // formal ring of S^2 x S^4 regarded as a 3-fold with bundle 1 + a
    SpaceEntry p = sphere_product(2, 4);
    Bundle x = make_bundle("x", {p.ring->generator_element("a")}, *p.ring);
    CHECK(thm12_hypothesis(x, 1, *p.ring, 3));

    SpaceEntry c3 = cp(3);
    CHECK_FALSE(thm12_hypothesis(c3.candidates[0], 1, *c3.ring, 3));

    // no partition of d into parts <= k reaches a nonzero class
    SpaceEntry c2 = cp(2);
    Bundle l2 = c2.candidates[0];
    CHECK_FALSE(thm12_hypothesis(l2, 1, *c2.ring, 2)); // c_1^2 != 0

    // preconditions
    CHECK_THROWS_AS(thm12_hypothesis(x, 0, *p.ring, 3), PreconditionNotMet);
    CHECK_THROWS_AS(thm12_hypothesis(x, 2, *p.ring, 3), PreconditionNotMet);
    SpaceEntry r4 = rp(4); // torsion in even degrees
    CHECK_THROWS_AS(thm12_hypothesis(r4.candidates[0], 1, *r4.ring, 2),
                    PreconditionNotMet);
}

TEST_CASE("cup length bound formula is exact") {
    CHECK(thm12_bound(3, 1, 2) == mpq_class(2));
    CHECK(thm12_bound(5, 4, 2) == mpq_class(1));
    CHECK(thm12_bound(4, 1, 4) == mpq_class(2));
    CHECK(thm12_bound(5, 1, 4) == mpq_class(5, 2));
    CHECK_THROWS_AS(thm12_bound(1, 1, 2), PreconditionNotMet);
    CHECK_THROWS_AS(thm12_bound(3, 0, 2), PreconditionNotMet);
    CHECK_THROWS_AS(thm12_bound(3, 1, 3), PreconditionNotMet);
}

TEST_CASE("chern monomial length") {
    for (int n = 1; n <= 6; ++n) {
        SpaceEntry e = cp(n);
        CHECK(chern_monomial_length(e.candidates[0], *e.ring, e.dim) == n);
    }
    SpaceEntry p = sphere_product(2, 4);
    const Bundle& w = p.candidates.back(); // whitney sum
    CHECK(chern_monomial_length(w, *p.ring, 6) == 2);
    CHECK(chern_monomial_length(trivial_bundle(*p.ring), *p.ring, 6) == 0);
}

TEST_CASE("chern monomial length ignores trivial summands") {
    for (const SpaceEntry& e : {cp(4), hp(2), sphere_product(2, 4)}) {
        for (const Bundle& x : e.candidates) {
            const int base = chern_monomial_length(x, *e.ring, e.dim);
            Bundle padded = whitney_sum(x, trivial_bundle(*e.ring), *e.ring);
            CHECK(chern_monomial_length(padded, *e.ring, e.dim) == base);
        }
    }
}
