#include "chrank/catalog.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace chrank {

namespace {

Exponents mono(std::size_t ngens, std::initializer_list<std::pair<int, int>> parts) {
    Exponents e(ngens, 0);
    for (const auto& [idx, exp] : parts)
        e[static_cast<std::size_t>(idx)] = exp;
    return e;
}

Relation rewrite_to_zero(Exponents lhs) {
    return Relation{1, std::move(lhs), {}};
}

Relation torsion(long c, Exponents lhs) {
    return Relation{Int(c), std::move(lhs), {}};
}

std::shared_ptr<const GradedRing> shared_compile(const RingPresentation& p) {
    return std::make_shared<const GradedRing>(compile(p));
}

std::shared_ptr<const GradedRing> shared_compile(const TablePresentation& p) {
    return std::make_shared<const GradedRing>(compile(p));
}

} // namespace

SpaceEntry cp(int n) {
    if (n < 1) throw UnsupportedParams("CP^n needs n >= 1");
    SpaceEntry e;
    e.name = "CP^" + std::to_string(n);
    e.dim = 2 * n;
    RingPresentation p;
    p.generators = {{"a", 2}};
    p.relations = {rewrite_to_zero(mono(1, {{0, n + 1}}))};
    p.max_degree = e.dim;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = e.dim;
    e.meta.complex_dim = n;
    e.meta.provenance.push_back({"complex_dim", "complex projective n-space"});
    e.candidates.push_back(make_bundle(
        "L", {e.ring->generator_element("a")}, *e.ring,
        "canonical line bundle; c_1(L) generates every H^{2i}"));
    e.expected_uchrank = 2 * n;
    e.expected_why = "c_1 of the canonical line bundle generates the whole ring";
    e.expected_cup_e = n;
    return e;
}

SpaceEntry hp(int n) {
    if (n < 1) throw UnsupportedParams("HP^n needs n >= 1");
    SpaceEntry e;
    e.name = "HP^" + std::to_string(n);
    e.dim = 4 * n;
    RingPresentation p;
    p.generators = {{"b", 4}};
    p.relations = {rewrite_to_zero(mono(1, {{0, n + 1}}))};
    p.max_degree = e.dim;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = e.dim;
    e.candidates.push_back(make_bundle(
        "Q", {e.ring->zero(), e.ring->generator_element("b")}, *e.ring,
        "complex 2-plane bundle underlying the quaternionic line bundle; "
        "c_2(Q) generates every H^{4i}"));
    e.expected_uchrank = 4 * n;
    e.expected_why = "c_2 of the quaternionic line bundle generates the whole ring";
    e.expected_cup_e = n;
    return e;
}

SpaceEntry sphere(int n) {
    if (n < 1) throw UnsupportedParams("S^n needs n >= 1");
    SpaceEntry e;
    e.name = "S^" + std::to_string(n);
    e.dim = n;
    RingPresentation p;
    p.generators = {{"s", n}};
    if (n % 2 == 0) p.relations = {rewrite_to_zero(mono(1, {{0, 2}}))};
    p.max_degree = n;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = n;
    e.meta.is_suspension = true;
    e.meta.provenance.push_back({"is_suspension", "S^n is the suspension of S^{n-1}"});
    if (n % 2 == 0) {
        e.meta.sphere_retract_dims = {n};
        e.meta.provenance.push_back(
            {"sphere_retract_dims",
             "identity retraction; Bott integrality constrains the top class"});
        const int half = n / 2;
        if (half == 1) {
            e.candidates.push_back(make_bundle(
                "L", {e.ring->generator_element("s")}, *e.ring,
                "line bundle with c_1 a generator (S^2 is the complex projective line)"));
            e.expected_uchrank = 2;
        } else if (half == 2) {
            e.candidates.push_back(make_bundle(
                "Q", {e.ring->zero(), e.ring->generator_element("s")}, *e.ring,
                "2-plane bundle with c_2 a generator (S^4 is the quaternionic "
                "projective line)"));
            e.expected_uchrank = 4;
        } else {
            std::vector<RingElement> classes(half, e.ring->zero());
            classes[half - 1] =
                scale(bott_divisor(half), e.ring->generator_element("s"), *e.ring);
            e.candidates.push_back(make_bundle(
                "B", std::move(classes), *e.ring,
                "minimal Bott-admissible bundle: c_n = (n-1)! times a generator"));
            e.expected_uchrank = n - 2;
        }
        e.expected_why = (half <= 2)
                             ? "the top class is a first or second Chern class"
                             : "Bott integrality: c_n is divisible by (n-1)!";
    } else {
        e.meta.k_reduced_trivial = true;
        e.meta.provenance.push_back(
            {"k_reduced_trivial", "reduced K-theory of an odd sphere vanishes"});
        e.expected_uchrank = n - 1;
        e.expected_why = "no even reduced cohomology below the ceiling";
    }
    return e;
}

bool product_supported(int m, int n) {
    if (m < 1 || n < 1) return false;
    if (m > n) std::swap(m, n);
    const bool modd = m % 2, nodd = n % 2;
    if (!modd || !nodd) return true;
    if (m + n == 2 || m + n == 4) return true;
    if (m % 8 == 3 && n % 8 == 3) return true;
    if (m == 1 && n % 8 == 5) return true;
    return false;
}

SpaceEntry sphere_product(int m, int n) {
    if (!product_supported(m, n))
        throw UnsupportedParams("S^" + std::to_string(m) + " x S^" +
                                std::to_string(n) +
                                " has no established maximal chern rank");
    if (m > n) std::swap(m, n);
    SpaceEntry e;
    e.name = "S^" + std::to_string(m) + "xS^" + std::to_string(n);
    e.dim = m + n;
    RingPresentation p;
    p.generators = {{"a", m}, {"b", n}};
    if (m % 2 == 0) p.relations.push_back(rewrite_to_zero(mono(2, {{0, 2}})));
    if (n % 2 == 0) p.relations.push_back(rewrite_to_zero(mono(2, {{1, 2}})));
    p.max_degree = e.dim;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = e.dim;
    for (int f : {m, n})
        if (f % 2 == 0) e.meta.sphere_retract_dims.push_back(f);
    if (!e.meta.sphere_retract_dims.empty())
        e.meta.provenance.push_back(
            {"sphere_retract_dims", "each factor is a retract of the product"});

    auto factor_candidate = [&](int f, const char* gen) {
        const int half = f / 2;
        std::vector<RingElement> classes(half, e.ring->zero());
        if (half <= 2) {
            classes[half - 1] = e.ring->generator_element(gen);
            e.candidates.push_back(make_bundle(
                std::string("P") + gen, std::move(classes), *e.ring,
                std::string("pullback of the generating bundle on the S^") +
                    std::to_string(f) + " factor"));
        } else {
            classes[half - 1] =
                scale(bott_divisor(half), e.ring->generator_element(gen), *e.ring);
            e.candidates.push_back(make_bundle(
                std::string("B") + gen, std::move(classes), *e.ring,
                std::string("pullback of the minimal Bott bundle on the S^") +
                    std::to_string(f) + " factor"));
        }
    };

    const bool modd = m % 2, nodd = n % 2;
    if (!modd) factor_candidate(m, "a");
    if (!nodd) factor_candidate(n, "b");

    if (!modd && !nodd) {
        if (m == 2 && n == 4) {
            Bundle w = whitney_sum(e.candidates[0], e.candidates[1], *e.ring);
            w.label = "W";
            w.justification =
                "whitney sum of the factor pullbacks; c_1 c_2 hits the top class";
            e.candidates.push_back(std::move(w));
            e.expected_uchrank = m + n;
            e.expected_why = "the sum of the factor bundles reaches the top class";
        } else if (m == n) {
            e.expected_uchrank = m - 2;
            e.expected_why = "H^m is free of rank 2, hence not cyclic";
        } else if (m == 2 || m == 4) {
            e.expected_uchrank = n - 2;
            e.expected_why =
                "restriction to the S^n factor meets the Bott obstruction";
        } else {
            e.expected_uchrank = m - 2;
            e.expected_why =
                "restriction to the S^m factor meets the Bott obstruction";
        }
        e.expected_cup_e = 2;
    } else if (modd != nodd) {
        const int even = modd ? n : m;
        if (even == 2 || even == 4) {
            e.expected_uchrank = m + n - 1;
            e.expected_why =
                "the only even reduced group is generated by a Chern class";
        } else {
            e.expected_uchrank = even - 2;
            e.expected_why =
                "restriction to the even factor meets the Bott obstruction";
        }
    } else {
        // both odd
        if (m + n == 2 || m + n == 4) {
            GradedRing top = compile(RingPresentation{
                {{"s", m + n}}, {}, 0, m + n});
            RingMap collapse = make_ring_map(
                top, *e.ring,
                {e.ring->multiply(e.ring->generator_element("a"),
                                  e.ring->generator_element("b"))});
            std::vector<RingElement> src((m + n) / 2, top.zero());
            src.back() = top.generator_element("s");
            Bundle gen_bundle = make_bundle("G", std::move(src), top);
            Bundle f = pullback(collapse, gen_bundle);
            f.label = "F";
            f.justification =
                "pullback of the generating bundle on S^" + std::to_string(m + n) +
                " along a degree-one collapse map";
            e.candidates.push_back(std::move(f));
            e.expected_uchrank = m + n;
            e.expected_why = "a degree-one map onto S^" + std::to_string(m + n) +
                             " pulls the generator back to the top class";
        } else {
            e.meta.product_k_trivial = true;
            e.meta.provenance.push_back(
                {"product_k_trivial",
                 m == 1 ? "orientable bundles over S^1 x S^{8k+5} are stably trivial"
                        : "reduced KO-theory of both factors and of their smash "
                          "product vanishes (dimensions 3 mod 8)"});
            e.expected_uchrank = m + n - 2;
            e.expected_why = "stably trivial bundles cannot hit the top class";
        }
    }
    return e;
}

bool wedge_supported(int m1, int m2) {
    if (m1 < 1 || m2 < 1) return false;
    return (m1 % 2 == 0) || (m2 % 2 == 0);
}

SpaceEntry sphere_wedge(int m1, int m2) {
    if (!wedge_supported(m1, m2))
        throw UnsupportedParams("S^" + std::to_string(m1) + " v S^" +
                                std::to_string(m2) +
                                " has no established maximal chern rank");
    // Canonical order: both even ascending, otherwise odd summand first.
    if ((m1 % 2 == 0 && m2 % 2 == 0 && m1 > m2) || (m1 % 2 == 0 && m2 % 2 == 1))
        std::swap(m1, m2);
    SpaceEntry e;
    e.name = "S^" + std::to_string(m1) + "vS^" + std::to_string(m2);
    e.dim = std::max(m1, m2);
    RingPresentation p;
    p.generators = {{"w1", m1}, {"w2", m2}};
    if (m1 % 2 == 0) p.relations.push_back(rewrite_to_zero(mono(2, {{0, 2}})));
    if (m2 % 2 == 0) p.relations.push_back(rewrite_to_zero(mono(2, {{1, 2}})));
    p.relations.push_back(rewrite_to_zero(mono(2, {{0, 1}, {1, 1}})));
    p.max_degree = e.dim;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = e.dim;
    e.meta.is_suspension = true;
    e.meta.provenance.push_back(
        {"is_suspension", "a wedge of spheres is a suspension"});
    for (int f : {m1, m2})
        if (f % 2 == 0) e.meta.sphere_retract_dims.push_back(f);
    e.meta.provenance.push_back(
        {"sphere_retract_dims", "each sphere summand is a retract of the wedge"});

    auto summand_candidate = [&](int f, const char* gen) {
        const int half = f / 2;
        std::vector<RingElement> classes(half, e.ring->zero());
        if (half <= 2) {
            classes[half - 1] = e.ring->generator_element(gen);
            e.candidates.push_back(make_bundle(
                std::string("P") + gen, std::move(classes), *e.ring,
                std::string("pullback along the retraction onto the S^") +
                    std::to_string(f) + " summand"));
        } else {
            classes[half - 1] =
                scale(bott_divisor(half), e.ring->generator_element(gen), *e.ring);
            e.candidates.push_back(make_bundle(
                std::string("B") + gen, std::move(classes), *e.ring,
                std::string("pullback of the minimal Bott bundle on the S^") +
                    std::to_string(f) + " summand"));
        }
    };
    if (m1 % 2 == 0) summand_candidate(m1, "w1");
    if (m2 % 2 == 0) summand_candidate(m2, "w2");

    if (m1 % 2 == 0 && m2 % 2 == 0) {
        if (m1 == 2 && m2 == 4) {
            e.candidates.push_back(make_bundle(
                "J",
                {e.ring->generator_element("w1"), e.ring->generator_element("w2")},
                *e.ring,
                "restriction of the product-space whitney sum along the wedge "
                "inclusion"));
            e.expected_uchrank = m2;
            e.expected_why =
                "the restricted product bundle generates both summands";
        } else if (m1 == m2) {
            e.expected_uchrank = m1 - 2;
            e.expected_why = "H^{m} is free of rank 2, hence not cyclic";
        } else if (m1 == 2 || m1 == 4) {
            e.expected_uchrank = m2 - 2;
            e.expected_why =
                "restriction to the upper summand meets the Bott obstruction";
        } else {
            e.expected_uchrank = m1 - 2;
            e.expected_why =
                "restriction to the lower summand meets the Bott obstruction";
        }
    } else {
        // m1 odd, m2 even
        if (m2 == 2 || m2 == 4) {
            e.expected_uchrank = (m1 < m2) ? m2 : m1 - 1;
            e.expected_why =
                "the even summand carries a generating Chern class";
        } else {
            e.expected_uchrank = m2 - 2;
            e.expected_why =
                "restriction to the even summand meets the Bott obstruction";
        }
    }
    return e;
}

SpaceEntry rp(int n) {
    if (n < 1) throw UnsupportedParams("RP^n needs n >= 1");
    SpaceEntry e;
    e.name = "RP^" + std::to_string(n);
    e.dim = n;
    const int k = n / 2;
    RingPresentation p;
    if (n % 2 == 0) {
        p.generators = {{"a", 2}};
        p.relations = {torsion(2, mono(1, {{0, 1}})),
                       rewrite_to_zero(mono(1, {{0, k + 1}}))};
    } else {
        p.generators = {{"a", 2}, {"t", n}};
        p.relations = {torsion(2, mono(2, {{0, 1}})),
                       rewrite_to_zero(mono(2, {{0, k + 1}})),
                       rewrite_to_zero(mono(2, {{0, 1}, {1, 1}}))};
    }
    p.max_degree = n;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = n;
    e.candidates.push_back(make_bundle(
        "L", {e.ring->generator_element("a")}, *e.ring,
        "complex line bundle with nonzero c_1 (c_1 classifies line bundles "
        "and H^2 is Z/2)"));
    e.expected_uchrank = 2 * k;
    e.expected_why =
        "powers of c_1 of a nontrivial line bundle generate every even group";
    if (n % 2 == 0) e.expected_cup_e = k;
    return e;
}

SpaceEntry sphere_x_rp(int m, int n) {
    // n = 1 degenerates to S^{2m} x S^1, which the product family covers
    // (and where the m = 1 value differs).
    if (m < 1 || n < 2)
        throw UnsupportedParams("S^{2m} x RP^n needs m >= 1 and n >= 2");
    SpaceEntry e;
    e.name = "S^" + std::to_string(2 * m) + "xRP^" + std::to_string(n);
    e.dim = 2 * m + n;
    const int k = n / 2;
    RingPresentation p;
    if (n % 2 == 0) {
        p.generators = {{"a", 2}, {"s", 2 * m}};
        p.relations = {torsion(2, mono(2, {{0, 1}})),
                       rewrite_to_zero(mono(2, {{0, k + 1}})),
                       rewrite_to_zero(mono(2, {{1, 2}}))};
    } else {
        p.generators = {{"a", 2}, {"s", 2 * m}, {"t", n}};
        p.relations = {torsion(2, mono(3, {{0, 1}})),
                       rewrite_to_zero(mono(3, {{0, k + 1}})),
                       rewrite_to_zero(mono(3, {{1, 2}})),
                       rewrite_to_zero(mono(3, {{0, 1}, {2, 1}}))};
    }
    p.max_degree = e.dim;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = e.dim;
    e.meta.sphere_retract_dims = {2 * m};
    e.meta.provenance.push_back(
        {"sphere_retract_dims", "the sphere factor is a retract of the product"});

    Bundle v = make_bundle("v", {e.ring->generator_element("a")}, *e.ring,
                           "pullback of the nontrivial line bundle on the "
                           "projective factor");
    e.candidates.push_back(v);
    if (m == 2) {
        std::vector<RingElement> cls = {e.ring->zero(),
                                        e.ring->generator_element("s")};
        Bundle eta = make_bundle("w", std::move(cls), *e.ring,
                                 "pullback of the generating 2-plane bundle on "
                                 "the S^4 factor");
        Bundle sum = whitney_sum(v, eta, *e.ring);
        sum.label = "v+w";
        sum.justification =
            "whitney sum of the two factor pullbacks; c_1 = a, c_2 = s";
        e.candidates.push_back(std::move(sum));
        e.expected_uchrank = 2 * (m + k);
        e.expected_why = "the factor sum generates every even group";
    } else if (m >= 3) {
        std::vector<RingElement> cls(m, e.ring->zero());
        cls[m - 1] = scale(bott_divisor(m), e.ring->generator_element("s"), *e.ring);
        e.candidates.push_back(make_bundle(
            "B", std::move(cls), *e.ring,
            "pullback of the minimal Bott bundle on the sphere factor"));
        e.expected_uchrank = 2 * (m - 1);
        e.expected_why =
            "the sphere class in degree 2m is blocked by Bott integrality";
    } else {
        e.expected_uchrank = 0;
        e.expected_why = "H^2 is Z + Z/2, hence not cyclic";
    }
    return e;
}

SpaceEntry sphere_x_cp(int m, int n) {
    if (m < 1 || n < 1)
        throw UnsupportedParams("S^{2m} x CP^n needs m, n >= 1");
    SpaceEntry e;
    e.name = "S^" + std::to_string(2 * m) + "xCP^" + std::to_string(n);
    e.dim = 2 * m + 2 * n;
    RingPresentation p;
    p.generators = {{"a", 2}, {"s", 2 * m}};
    p.relations = {rewrite_to_zero(mono(2, {{0, n + 1}})),
                   rewrite_to_zero(mono(2, {{1, 2}}))};
    p.max_degree = e.dim;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = e.dim;
    e.meta.sphere_retract_dims = {2 * m};
    e.meta.provenance.push_back(
        {"sphere_retract_dims", "the sphere factor is a retract of the product"});

    Bundle v = make_bundle("v", {e.ring->generator_element("a")}, *e.ring,
                           "pullback of the canonical line bundle on the "
                           "projective factor");
    e.candidates.push_back(v);
    if (m == 2) {
        std::vector<RingElement> cls = {e.ring->zero(),
                                        e.ring->generator_element("s")};
        Bundle eta = make_bundle("w", std::move(cls), *e.ring,
                                 "pullback of the generating 2-plane bundle on "
                                 "the S^4 factor");
        Bundle sum = whitney_sum(v, eta, *e.ring);
        sum.label = "v+w";
        sum.justification =
            "whitney sum of the two factor pullbacks; c_1 = a, c_2 = s";
        e.candidates.push_back(std::move(sum));
        e.expected_uchrank = 2 * (m + n);
        e.expected_why = "the factor sum generates every even group";
    } else if (m >= 3) {
        std::vector<RingElement> cls(m, e.ring->zero());
        cls[m - 1] = scale(bott_divisor(m), e.ring->generator_element("s"), *e.ring);
        e.candidates.push_back(make_bundle(
            "B", std::move(cls), *e.ring,
            "pullback of the minimal Bott bundle on the sphere factor"));
        e.expected_uchrank = 2 * (m - 1);
        e.expected_why =
            "the sphere class in degree 2m is blocked by Bott integrality";
    } else {
        e.expected_uchrank = 0;
        e.expected_why = "H^2 is free of rank 2, hence not cyclic";
    }
    return e;
}

bool stiefel_supported(int k, int n) {
    if (!(1 < k && k < n)) return false;
    const int d = n - k;
    if (d % 2 == 0) return true;
    return !is_power_of_two(d + 1);
}

SpaceEntry stiefel(int k, int n) {
    if (!(1 < k && k < n))
        throw UnsupportedParams("V_k(C^n) needs 1 < k < n");
    if (!stiefel_supported(k, n))
        throw UnsupportedParams(
            "V_k(C^n) with n-k odd and n-k = 2^t - 1 has no established value");
    SpaceEntry e;
    e.name = "V_" + std::to_string(k) + "(C^" + std::to_string(n) + ")";
    e.dim = k * (2 * n - k);
    RingPresentation p;
    for (int j = n - k; j <= n - 1; ++j)
        p.generators.push_back({"x" + std::to_string(2 * j + 1), 2 * j + 1});
    p.max_degree = e.dim;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = e.dim;
    e.meta.sw_obstruction = true;
    e.meta.provenance.push_back(
        {"sw_obstruction",
     "the integral generator in the lowest even degree survives reduction "
     "mod 2, and the first nonzero Stiefel-Whitney class of any real bundle "
     "lies in a power-of-two degree"});
    e.expected_uchrank = 4 * (n - k) + 2;
    e.expected_why =
        "the lowest even class sits in degree 4(n-k)+4, which is not a power "
        "of two";
    return e;
}

SpaceEntry stunted_cp(int n, int m) {
    if (!(m >= 1 && n >= m + 2))
        throw UnsupportedParams("CP^n/CP^m needs m >= 1 and n >= m + 2");
    SpaceEntry e;
    e.name = "CP^" + std::to_string(n) + "/CP^" + std::to_string(m);
    e.dim = 2 * n;
    TablePresentation p;
    for (int i = m + 1; i <= n; ++i)
        p.classes.push_back({"u" + std::to_string(i), 2 * i, 0});
    for (int i = m + 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (i + j <= n)
                p.products[{i - (m + 1), j - (m + 1)}] = {Int(1), i + j - (m + 1)};
    p.max_degree = e.dim;
    e.presentation = p;
    e.ring = shared_compile(p);
    e.meta.dim = e.dim;
    if (m >= 2) {
        e.meta.sphere_retract_dims = {2 * (m + 1)};
        e.meta.provenance.push_back(
            {"sphere_retract_dims",
             "the bottom cell is a sphere and restriction to it is an "
             "isomorphism on H^{2m+2}"});
        e.expected_uchrank = 2 * m;
        e.expected_why =
            "the bottom class in degree 2m+2 is blocked by Bott integrality";
    } else {
        std::vector<RingElement> cls = {e.ring->zero(),
                                        e.ring->generator_element("u2")};
        e.candidates.push_back(make_bundle(
            "K", std::move(cls), *e.ring,
            "bundle with c_2 the bottom class: the 6-skeleton splits as "
            "S^4 v S^6 and K-theory restriction is onto"));
        e.expected_uchrank = 4;
        e.expected_why =
            "the bottom class is a c_2 but the degree-6 class is out of reach "
            "(Steenrod square argument on the 6-skeleton)";
    }
    return e;
}

SpaceEntry space(const std::string& family, const std::vector<int>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw UnsupportedParams("family " + family + " wants " +
                                    std::to_string(n) + " parameter(s)");
    };
    if (family == "CP") { need(1); return cp(params[0]); }
    if (family == "HP") { need(1); return hp(params[0]); }
    if (family == "S") { need(1); return sphere(params[0]); }
    if (family == "SxS") { need(2); return sphere_product(params[0], params[1]); }
    if (family == "SvS") { need(2); return sphere_wedge(params[0], params[1]); }
    if (family == "RP") { need(1); return rp(params[0]); }
    if (family == "SxRP") { need(2); return sphere_x_rp(params[0], params[1]); }
    if (family == "SxCP") { need(2); return sphere_x_cp(params[0], params[1]); }
    if (family == "V") { need(2); return stiefel(params[0], params[1]); }
    if (family == "CP/CP") { need(2); return stunted_cp(params[0], params[1]); }
    throw UnsupportedParams("unknown family '" + family + "'");
}

SpaceEntry space_by_name(const std::string& name) {
    std::smatch m;
    auto num = [&](int i) { return std::stoi(m[i].str()); };
    if (std::regex_match(name, m, std::regex(R"(CP\^(\d+))")))
        return cp(num(1));
    if (std::regex_match(name, m, std::regex(R"(HP\^(\d+))")))
        return hp(num(1));
    if (std::regex_match(name, m, std::regex(R"(S\^(\d+)xS\^(\d+))")))
        return sphere_product(num(1), num(2));
    if (std::regex_match(name, m, std::regex(R"(S\^(\d+)vS\^(\d+))")))
        return sphere_wedge(num(1), num(2));
    if (std::regex_match(name, m, std::regex(R"(S\^(\d+)xRP\^(\d+))"))) {
        if (num(1) % 2 != 0)
            throw UnsupportedParams("sphere factor dimension must be even");
        return sphere_x_rp(num(1) / 2, num(2));
    }
    if (std::regex_match(name, m, std::regex(R"(S\^(\d+)xCP\^(\d+))"))) {
        if (num(1) % 2 != 0)
            throw UnsupportedParams("sphere factor dimension must be even");
        return sphere_x_cp(num(1) / 2, num(2));
    }
    if (std::regex_match(name, m, std::regex(R"(S\^(\d+))")))
        return sphere(num(1));
    if (std::regex_match(name, m, std::regex(R"(RP\^(\d+))")))
        return rp(num(1));
    if (std::regex_match(name, m, std::regex(R"(V_(\d+)\(C\^(\d+)\))")))
        return stiefel(num(1), num(2));
    if (std::regex_match(name, m, std::regex(R"(CP\^(\d+)/CP\^(\d+))")))
        return stunted_cp(num(1), num(2));
    throw UnsupportedParams("unrecognized space name '" + name + "'");
}

Verdict verify(const SpaceEntry& e) {
    Verdict v;
    v.name = e.name;
    v.expected = e.expected_uchrank;
    v.expected_why = e.expected_why;
    const GradedRing& ring = *e.ring;

    bool ok = true;
    v.lower = uchrank_lower(e.candidates, ring, e.dim);
    UpperBound ub = uchrank_upper(ring, e.meta);
    v.upper = ub.bound;
    v.trace = ub.trace;
    try {
        combine(v.lower, ub);
    } catch (const InconsistentBounds& ex) {
        ok = false;
        v.checks.push_back(std::string("FAIL inconsistent bounds: ") + ex.what());
    }
    if (!(v.lower <= v.expected && v.expected <= v.upper)) {
        ok = false;
        v.checks.push_back("FAIL expected value outside [lower, upper]");
    }

    // Gap check for complex manifolds (candidates plus the trivial bundle).
    if (e.meta.complex_dim) {
        try {
            std::vector<Bundle> cands = e.candidates;
            cands.push_back(trivial_bundle(ring));
            GapCheck gap = check_thm29(ring, *e.meta.complex_dim, cands);
            if (gap.pass) {
                v.checks.push_back("gap check: pass (" + gap.note + ")");
            } else {
                ok = false;
                std::string msg = "FAIL gap check:";
                for (const std::string& w : gap.witnesses) msg += " " + w;
                v.checks.push_back(msg);
            }
        } catch (const PreconditionNotMet&) {
            v.checks.push_back("gap check: not applicable");
        }
    }

    // When a candidate reaches the even dimension, the even cup length must
    // equal its maximal nonzero Chern monomial length.
    if (e.dim % 2 == 0) {
        for (const Bundle& x : e.candidates) {
            if (chernrank(x, ring, e.dim) != e.dim) continue;
            const int cup = even_cup_length(ring, e.dim).length;
            const int ml = chern_monomial_length(x, ring, e.dim);
            if (cup == ml) {
                v.checks.push_back("cup length " + std::to_string(cup) +
                                   " = chern monomial length of " + x.label);
            } else {
                ok = false;
                v.checks.push_back(
                    "FAIL cup length " + std::to_string(cup) +
                    " != chern monomial length " + std::to_string(ml) + " of " +
                    x.label);
            }
            break;
        }
    }

    if (e.expected_cup_e) {
        const int cup = even_cup_length(ring, e.dim).length;
        if (cup != *e.expected_cup_e) {
            ok = false;
            v.checks.push_back("FAIL even cup length " + std::to_string(cup) +
                               " != expected " +
                               std::to_string(*e.expected_cup_e));
        }
    }

    // Cup length bound for complex manifolds with free even cohomology.
    if (e.meta.complex_dim) {
        const int d = *e.meta.complex_dim;
        const int rx = r_X(ring, e.dim);
        for (const Bundle& x : e.candidates) {
            int cr = 0;
            try {
                cr = chernrank(x, ring, 2 * d);
            } catch (...) {
                continue;
            }
            for (int k = 1; 2 * k <= cr; ++k) {
                bool hyp = false;
                try {
                    hyp = thm12_hypothesis(x, k, ring, d);
                } catch (const PreconditionNotMet&) {
                    break;
                }
                if (!hyp) continue;
                mpq_class bound = thm12_bound(d, k, rx);
                const int cup = even_cup_length(ring, e.dim).length;
                if (mpq_class(cup) > bound) {
                    ok = false;
                    v.checks.push_back("FAIL cup length bound violated at k = " +
                                       std::to_string(k));
                } else {
                    v.checks.push_back("cup length bound holds at k = " +
                                       std::to_string(k));
                }
            }
        }
    }

    v.pass = ok;
    if (!ok)
        v.status = "FAIL";
    else if (v.lower == v.expected && v.expected == v.upper)
        v.status = "DETERMINED";
    else
        v.status = "PAPER-ASSERTED";
    return v;
}

VerifyBounds VerifyBounds::clamped(int cap) const {
    VerifyBounds b = *this;
    auto clamp = [cap](int& v) { v = std::min(v, cap); };
    clamp(b.cp_max);
    clamp(b.hp_max);
    clamp(b.sphere_odd_max);
    clamp(b.sphere_even_half_max);
    clamp(b.product_max);
    clamp(b.wedge_max);
    clamp(b.rp_max);
    clamp(b.sxrp_m_max);
    clamp(b.sxrp_n_max);
    clamp(b.sxcp_m_max);
    clamp(b.sxcp_n_max);
    clamp(b.stiefel_n_max);
    clamp(b.stunted_m_max);
    clamp(b.stunted_n_max);
    return b;
}

std::vector<SpaceEntry> build_catalog(const VerifyBounds& b) {
    std::vector<SpaceEntry> out;
    for (int n = 1; n <= b.cp_max; ++n) out.push_back(cp(n));
    for (int n = 1; n <= b.hp_max; ++n) out.push_back(hp(n));
    for (int n = 1; n <= b.sphere_odd_max; n += 2) out.push_back(sphere(n));
    for (int half = 1; half <= b.sphere_even_half_max; ++half)
        out.push_back(sphere(2 * half));
    for (int m = 1; m <= b.product_max; ++m)
        for (int n = m; n <= b.product_max; ++n)
            if (product_supported(m, n)) out.push_back(sphere_product(m, n));
    for (int m1 = 1; m1 <= b.wedge_max; ++m1)
        for (int m2 = m1; m2 <= b.wedge_max; ++m2)
            if (wedge_supported(m1, m2)) out.push_back(sphere_wedge(m1, m2));
    for (int n = 1; n <= b.rp_max; ++n) out.push_back(rp(n));
    for (int m = 1; m <= b.sxrp_m_max; ++m)
        for (int n = 2; n <= b.sxrp_n_max; ++n) out.push_back(sphere_x_rp(m, n));
    for (int m = 1; m <= b.sxcp_m_max; ++m)
        for (int n = 1; n <= b.sxcp_n_max; ++n) out.push_back(sphere_x_cp(m, n));
    for (int n = 2; n <= b.stiefel_n_max; ++n)
        for (int k = 2; k < n; ++k)
            if (stiefel_supported(k, n)) out.push_back(stiefel(k, n));
    for (int m = 1; m <= b.stunted_m_max; ++m)
        for (int n = m + 2; n <= b.stunted_n_max; ++n)
            out.push_back(stunted_cp(n, m));
    return out;
}

VerifyReport verify_entries(const std::vector<SpaceEntry>& entries) {
    VerifyReport rep;
    rep.entries = static_cast<int>(entries.size());
    for (const SpaceEntry& e : entries) {
        rep.verdicts.push_back(verify(e));
        if (!rep.verdicts.back().pass) ++rep.failures;
    }
    return rep;
}

VerifyReport verify_all(const VerifyBounds& b) {
    return verify_entries(build_catalog(b));
}

std::vector<CatalogMap> catalog_ring_maps() {
    std::vector<CatalogMap> maps;

    auto restriction = [&](SpaceEntry big, SpaceEntry small,
                           std::vector<RingElement> images) {
        CatalogMap cm;
        cm.name = big.name + " -> " + small.name;
        cm.source = big.ring;
        cm.target = small.ring;
        cm.source_dim = big.dim;
        cm.target_dim = small.dim;
        cm.map = make_ring_map(*cm.source, *cm.target, std::move(images));
        cm.source_bundles = big.candidates;
        maps.push_back(std::move(cm));
    };

    {
        SpaceEntry big = cp(4), small = cp(2);
        restriction(big, small, {small.ring->generator_element("a")});
    }
    {
        SpaceEntry big = cp(6), small = cp(3);
        restriction(big, small, {small.ring->generator_element("a")});
    }
    {
        SpaceEntry big = hp(3), small = hp(1);
        restriction(big, small, {small.ring->generator_element("b")});
    }
    {
        SpaceEntry big = rp(8), small = rp(4);
        restriction(big, small, {small.ring->generator_element("a")});
    }
    {
        SpaceEntry big = rp(7), small = rp(6);
        restriction(big, small,
                    {small.ring->generator_element("a"), small.ring->zero()});
    }
    {
        SpaceEntry big = sphere_product(2, 4), small = sphere(2);
        restriction(big, small,
                    {small.ring->generator_element("s"), small.ring->zero()});
    }
    {
        SpaceEntry big = sphere_product(4, 4), small = sphere(4);
        restriction(big, small,
                    {small.ring->generator_element("s"), small.ring->zero()});
    }
    {
        SpaceEntry big = sphere_product(3, 4), small = sphere(4);
        restriction(big, small,
                    {small.ring->zero(), small.ring->generator_element("s")});
    }
    {
        SpaceEntry e = cp(3);
        CatalogMap cm;
        cm.name = e.name + " identity";
        cm.source = e.ring;
        cm.target = e.ring;
        cm.source_dim = e.dim;
        cm.target_dim = e.dim;
        cm.map = identity_map(*e.ring);
        cm.source_bundles = e.candidates;
        maps.push_back(std::move(cm));
    }
    return maps;
}

} // namespace chrank
