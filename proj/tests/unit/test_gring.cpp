#include <doctest.h>

#include <random>

#include "chrank/catalog.hpp"
#include "chrank/gring.hpp"

using namespace chrank;

namespace {

RingPresentation truncated_poly(const std::string& name, int deg, int power,
                                int maxdeg) {
    RingPresentation p;
    p.generators = {{name, deg}};
    Relation r;
    r.lhs = Exponents{power};
    p.relations = {r};
    p.max_degree = maxdeg;
    return p;
}

RingElement random_homogeneous(const GradedRing& r, int degree,
                               std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    RingElement e;
    for (const Exponents& m : r.basis(degree))
        e.terms.emplace(m, coeff(rng));
    return r.normalize(e);
}

RingElement random_element(const GradedRing& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, r.max_degree());
    RingElement e;
    for (int pick = 0; pick < 2; ++pick) {
        RingElement h = random_homogeneous(r, deg(rng), rng);
        for (const auto& [m, c] : h.terms) {
            auto it = e.terms.find(m);
            if (it == e.terms.end())
                e.terms.emplace(m, c);
            else
                it->second += c;
        }
    }
    return r.normalize(e);
}

} // namespace

TEST_CASE("compile: truncated polynomial ring") {
    GradedRing r = compile(truncated_poly("a", 2, 4, 6));
    CHECK(r.basis(2).size() == 1);
    CHECK(r.basis(4).size() == 1);
    CHECK(r.basis(6).size() == 1);
    CHECK(r.basis(3).empty());
    CHECK(r.piece(2).orders == std::vector<Int>{0});
    CHECK(r.piece(6).orders == std::vector<Int>{0});
    CHECK(r.basis(6)[0] == Exponents{3});
}

TEST_CASE("compile: torsion ring Z[a]/(2a, a^3)") {
    RingPresentation p;
    p.generators = {{"a", 2}};
    p.relations = {Relation{2, Exponents{1}, {}}, Relation{1, Exponents{3}, {}}};
    p.max_degree = 4;
    GradedRing r = compile(p);
    CHECK(r.basis(2).size() == 1);
    CHECK(r.piece(2).orders == std::vector<Int>{2});
    CHECK(r.basis(4).size() == 1);
    CHECK(r.piece(4).orders == std::vector<Int>{2});
}

TEST_CASE("compile: exterior algebra on odd generators") {
    RingPresentation p;
    p.generators = {{"x5", 5}, {"x7", 7}};
    p.max_degree = 12;
    GradedRing r = compile(p);
    CHECK(r.basis(12).size() == 1);
    CHECK(r.basis(12)[0] == Exponents{1, 1});
    CHECK(r.piece(12).orders == std::vector<Int>{0});
    CHECK(r.basis(10).empty()); // x5^2 dies by the default square rule
    CHECK(r.notes().size() == 2);
}

TEST_CASE("normalize: graded commutativity sign") {
    RingPresentation p;
    p.generators = {{"x5", 5}, {"x7", 7}};
    p.max_degree = 12;
    GradedRing r = compile(p);
    RingElement x5 = r.generator_element("x5");
    RingElement x7 = r.generator_element("x7");
    RingElement x75 = r.multiply(x7, x5);
    RingElement minus_x57 = scale(Int(-1), r.multiply(x5, x7), r);
    CHECK(x75 == minus_x57);
    CHECK_FALSE(x75.is_zero());
}

TEST_CASE("normalize: torsion and truncation") {
    SpaceEntry e = rp(4); // Z[a]/(2a, a^3), dim 4
    const GradedRing& r = *e.ring;
    CHECK(scale(Int(2), r.generator_element("a"), r).is_zero());

    GradedRing cp4 = compile(truncated_poly("a", 2, 4, 6));
    RingElement a2 = cp4.monomial_element(Exponents{2});
    CHECK(cp4.multiply(a2, a2).is_zero());
}

TEST_CASE("multiply: product ring, identity, torsion annihilation") {
    SpaceEntry e = sphere_product(2, 4);
    const GradedRing& r = *e.ring;
    RingElement ab = r.multiply(r.generator_element("a"), r.generator_element("b"));
    CHECK(r.basis(6).size() == 1);
    CHECK(ab == r.monomial_element(r.basis(6)[0]));

    CHECK(r.multiply(r.one(), ab) == ab);

    SpaceEntry rp6 = rp(6); // k = 3
    const GradedRing& q = *rp6.ring;
    RingElement ak = q.monomial_element(Exponents{3});
    CHECK(q.multiply(ak, q.generator_element("a")).is_zero());
}

TEST_CASE("r_X conventions") {
    CHECK(r_X(*cp(3).ring, 6) == 2);
    CHECK(r_X(*sphere(3).ring, 3) == 4);
    CHECK(r_X(*sphere(6).ring, 6) == 6);
    CHECK(r_X(*sphere(5).ring, 5) == 6);
    CHECK(r_X(*sphere_product(1, 3).ring, 4) == 4);
}

TEST_CASE("k_X cyclic prefix") {
    CHECK(k_X(*sphere_wedge(2, 4).ring, 4) == 4);
    CHECK(k_X(*sphere_product(4, 4).ring, 8) == 2);
    CHECK(k_X(*cp(5).ring, 10) == 10);
}

TEST_CASE("is_cyclic per degree") {
    CHECK_FALSE(is_cyclic(*sphere_product(4, 4).ring, 4));
    CHECK(is_cyclic(*rp(4).ring, 2));
    CHECK(is_cyclic(*cp(2).ring, 3)); // empty piece counts as cyclic
}

TEST_CASE("tensor consistency: sphere product ranks") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 4}, {2, 6}}) {
        SpaceEntry e = sphere_product(m, n);
        const GradedRing& r = *e.ring;
        for (int d = 1; d <= e.dim; ++d) {
            const std::size_t want = (d == m || d == n || d == m + n) ? 1 : 0;
            CHECK(r.basis(d).size() == want);
        }
    }
}

TEST_CASE("randomized algebra laws on catalog rings") {
    std::mt19937_64 rng(31337);
    std::vector<SpaceEntry> sample;
    sample.push_back(cp(4));
    sample.push_back(rp(7));
    sample.push_back(sphere_product(3, 4));
    sample.push_back(sphere_x_rp(2, 5));
    sample.push_back(stiefel(2, 4));
    sample.push_back(stunted_cp(5, 2));
    for (const SpaceEntry& e : sample) {
        const GradedRing& r = *e.ring;
        for (int iter = 0; iter < 40; ++iter) {
            RingElement a = random_element(r, rng);
            RingElement b = random_element(r, rng);
            RingElement c = random_element(r, rng);
            CHECK(r.normalize(a) == a); // idempotent
            CHECK(r.multiply(r.multiply(a, b), c) ==
                  r.multiply(a, r.multiply(b, c)));
            CHECK(r.multiply(a, add(b, c, r)) ==
                  add(r.multiply(a, b), r.multiply(a, c), r));
        }
        for (int iter = 0; iter < 40; ++iter) {
            std::uniform_int_distribution<int> deg(1, r.max_degree());
            const int da = deg(rng), db = deg(rng);
            RingElement a = random_homogeneous(r, da, rng);
            RingElement b = random_homogeneous(r, db, rng);
            RingElement ab = r.multiply(a, b);
            RingElement ba = r.multiply(b, a);
            if ((da * db) % 2 == 1) ba = scale(Int(-1), ba, r);
            CHECK(ab == ba);
        }
    }
}

TEST_CASE("compile rejects a non-confluent presentation with a witness") {
    RingPresentation p;
    p.generators = {{"a", 2}, {"b", 2}, {"c", 2}};
    Relation r1; // a*b -> c^2
    r1.lhs = Exponents{1, 1, 0};
    r1.rhs.terms.emplace(Exponents{0, 0, 2}, Int(1));
    Relation r2; // b*c -> 0
    r2.lhs = Exponents{0, 1, 1};
    p.relations = {r1, r2};
    p.max_degree = 6;
    bool threw = false;
    try {
        compile(p);
    } catch (const NonConfluent& e) {
        threw = true;
        CHECK(e.witness == "a*b*c");
    }
    CHECK(threw);
}

TEST_CASE("compile rejects inadmissible presentations") {
    // order-increasing relation: c^2 -> a*b with c declared last
    {
        RingPresentation p;
        p.generators = {{"a", 2}, {"b", 2}, {"c", 2}};
        Relation r;
        r.lhs = Exponents{0, 0, 2};
        r.rhs.terms.emplace(Exponents{1, 1, 0}, Int(1));
        p.relations = {r};
        p.max_degree = 4;
        CHECK_THROWS_AS(compile(p), NonAdmissiblePresentation);
    }
    // scaled relation with nonzero rhs
    {
        RingPresentation p;
        p.generators = {{"a", 2}, {"b", 2}};
        Relation r;
        r.lhs = Exponents{1, 0};
        r.lhs_coeff = 2;
        r.rhs.terms.emplace(Exponents{0, 1}, Int(1));
        p.relations = {r};
        p.max_degree = 4;
        CHECK_THROWS_AS(compile(p), NonAdmissiblePresentation);
    }
    // relation that is not degree-preserving
    {
        RingPresentation p;
        p.generators = {{"a", 2}, {"b", 4}};
        Relation r;
        r.lhs = Exponents{0, 1};
        r.rhs.terms.emplace(Exponents{1, 0}, Int(1));
        p.relations = {r};
        p.max_degree = 4;
        CHECK_THROWS_AS(compile(p), NonAdmissiblePresentation);
    }
    // duplicate generator names
    {
        RingPresentation p;
        p.generators = {{"a", 2}, {"a", 4}};
        p.max_degree = 4;
        CHECK_THROWS_AS(compile(p), NonAdmissiblePresentation);
    }
    // conflicting torsion forcing an order-1 monomial
    {
        RingPresentation p;
        p.generators = {{"a", 2}};
        p.relations = {Relation{2, Exponents{1}, {}},
                       Relation{3, Exponents{1}, {}}};
        p.max_degree = 2;
        CHECK_THROWS_AS(compile(p), NonAdmissiblePresentation);
    }
}

TEST_CASE("mod-2 coefficient mode") {
    RingPresentation p;
    p.generators = {{"x5", 5}, {"x7", 7}};
    p.max_degree = 12;
    p.mod_p = 2;
    GradedRing r = compile(p);
    for (int d = 0; d <= 12; ++d)
        for (const Int& o : r.piece(d).orders)
            CHECK(o == 2);
    RingElement x5 = r.generator_element("x5");
    CHECK(scale(Int(2), x5, r).is_zero());
    // signs disappear over Z/2
    RingElement x7 = r.generator_element("x7");
    CHECK(r.multiply(x7, x5) == r.multiply(x5, x7));
}

TEST_CASE("exterior algebra mod 2 matches the integral basis") {
    SpaceEntry v = stiefel(2, 4);
    RingPresentation p = std::get<RingPresentation>(v.presentation);
    p.mod_p = 2;
    GradedRing mod2 = compile(p);
    for (int d = 0; d <= v.dim; ++d)
        CHECK(mod2.basis(d).size() == v.ring->basis(d).size());
}

TEST_CASE("table form compiles and validates") {
    SpaceEntry e = stunted_cp(5, 2); // classes u3, u4, u5
    const GradedRing& r = *e.ring;
    CHECK(r.table_backed());
    CHECK(r.basis(6).size() == 1);
    CHECK(r.basis(8).size() == 1);
    CHECK(r.basis(10).size() == 1);
    CHECK(r.basis(2).empty());
    CHECK(r.piece(6).orders == std::vector<Int>{0});
    // u3 * u4 lands beyond the truncation degree
    RingElement u3 = r.generator_element("u3");
    RingElement u4 = r.generator_element("u4");
    CHECK(r.multiply(u3, u4).is_zero());

    // stunted CP^6/CP^1 has genuinely nonzero products
    SpaceEntry f = stunted_cp(6, 1);
    RingElement p2 = f.ring->generator_element("u2");
    RingElement p4 = f.ring->generator_element("u4");
    CHECK(f.ring->multiply(p2, p4) == f.ring->generator_element("u6"));

    // non-associative table is rejected
    TablePresentation bad;
    bad.classes = {{"p", 2, 0}, {"q", 4, 0}, {"r", 6, 0}, {"s", 8, 0}};
    bad.products[{0, 0}] = {Int(1), 1}; // p*p = q
    bad.products[{0, 1}] = {Int(1), 2}; // p*q = r
    bad.products[{0, 2}] = {Int(2), 3}; // p*r = 2s
    bad.products[{1, 1}] = {Int(1), 3}; // q*q = s
    bad.max_degree = 8;
    CHECK_THROWS_AS(compile(bad), NonAdmissiblePresentation);
}

TEST_CASE("ring equality") {
    SpaceEntry a = cp(3), b = cp(3), c = cp(4);
    CHECK(ring_equal(*a.ring, *b.ring));
    CHECK_FALSE(ring_equal(*a.ring, *c.ring));
}
