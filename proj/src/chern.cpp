#include "chrank/chern.hpp"

#include <functional>

namespace chrank {

Bundle make_bundle(const std::string& label, std::vector<RingElement> classes,
                   const GradedRing& r, const std::string& justification) {
    Bundle b;
    b.label = label;
    b.justification = justification;
    b.ring = &r;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        RingElement c = r.normalize(classes[i]);
        const int want = 2 * static_cast<int>(i + 1);
        for (const auto& [mono, coeff] : c.terms)
            if (r.degree_of(mono) != want)
                throw DegreeError("c" + std::to_string(i + 1) +
                                  " must be homogeneous of degree " +
                                  std::to_string(want));
        b.classes.push_back(std::move(c));
    }
    while (!b.classes.empty() && b.classes.back().is_zero())
        b.classes.pop_back();
    return b;
}

Bundle trivial_bundle(const GradedRing& r, const std::string& label) {
    return make_bundle(label, {}, r, "trivial bundle; total class 1");
}

RingElement bundle_class(const Bundle& x, int i, const GradedRing& r) {
    if (i < 1) throw Error("chern class index must be >= 1");
    if (static_cast<std::size_t>(i) > x.classes.size()) return r.zero();
    return x.classes[i - 1];
}

Bundle whitney_sum(const Bundle& x, const Bundle& y, const GradedRing& r) {
    if ((x.ring && x.ring != &r) || (y.ring && y.ring != &r))
        throw Error("whitney sum of bundles over mixed rings");
    const int top = r.max_degree() / 2;
    std::vector<RingElement> classes;
    for (int k = 1; k <= top; ++k) {
        RingElement ck = r.zero();
        for (int i = 0; i <= k; ++i) {
            RingElement a = (i == 0) ? r.one() : bundle_class(x, i, r);
            if (a.is_zero()) continue;
            RingElement b = (k - i == 0) ? r.one() : bundle_class(y, k - i, r);
            if (b.is_zero()) continue;
            ck = add(ck, r.multiply(a, b), r);
        }
        classes.push_back(std::move(ck));
    }
    return make_bundle(x.label + "+" + y.label, std::move(classes), r,
                       "whitney sum of " + x.label + " and " + y.label);
}

Bundle conjugate(const Bundle& x) {
    if (!x.ring) throw Error("bundle without a ring");
    const GradedRing& r = *x.ring;
    std::vector<RingElement> classes = x.classes;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (i % 2 == 0) // c_1, c_3, ... flip sign
            classes[i] = scale(Int(-1), classes[i], r);
    Bundle b = make_bundle("conj(" + x.label + ")", std::move(classes), r,
                           "conjugate of " + x.label);
    return b;
}

Bundle dual(const Bundle& x) {
    Bundle b = conjugate(x);
    b.label = "dual(" + x.label + ")";
    return b;
}

RingMap make_ring_map(const GradedRing& source, const GradedRing& target,
                      std::vector<RingElement> images) {
    if (images.size() != source.generators().size())
        throw DegreeError("ring map needs one image per source generator");
    RingMap f;
    f.source = &source;
    f.target = &target;
    for (std::size_t i = 0; i < images.size(); ++i) {
        RingElement img = target.normalize(images[i]);
        const int want = source.generators()[i].degree;
        for (const auto& [mono, c] : img.terms)
            if (target.degree_of(mono) != want)
                throw DegreeError("image of generator '" +
                                  source.generators()[i].name +
                                  "' must be homogeneous of degree " +
                                  std::to_string(want));
        f.images.push_back(std::move(img));
    }

    auto check_zero = [&](const RingElement& e, const std::string& what) {
        if (!e.is_zero())
            throw DegreeError("ring map does not respect " + what);
    };

    if (!source.table_backed()) {
        for (const Relation& rel : source.admitted_relations()) {
            RingElement lhs_mono;
            lhs_mono.terms.emplace(rel.lhs, rel.lhs_coeff);
            RingElement lhs = apply(f, lhs_mono);
            RingElement minus_rhs = apply(f, scale(Int(-1), rel.rhs, source));
            check_zero(add(lhs, minus_rhs, target),
                       "relation " + source.monomial_string(rel.lhs));
        }
    } else {
        // Pairwise products and class orders determine table rings.
        const auto& classes = source.table().classes;
        const std::size_t n = classes.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (classes[i].order != 0)
                check_zero(scale(classes[i].order, f.images[i], target),
                           "order of " + classes[i].name);
            for (std::size_t j = i; j < n; ++j) {
                Exponents mono(n, 0);
                mono[i] += 1;
                mono[j] += 1;
                RingElement prod_src = source.monomial_element(mono);
                RingElement lhs = target.multiply(f.images[i], f.images[j]);
                RingElement rhs = apply(f, prod_src);
                check_zero(add(lhs, scale(Int(-1), rhs, target), target),
                           "product " + classes[i].name + "*" + classes[j].name);
            }
        }
    }
    return f;
}

RingMap identity_map(const GradedRing& r) {
    std::vector<RingElement> images;
    for (const Generator& g : r.generators())
        images.push_back(r.generator_element(g.name));
    return make_ring_map(r, r, std::move(images));
}

RingElement apply(const RingMap& f, const RingElement& e) {
    const GradedRing& tgt = *f.target;
    RingElement out = tgt.zero();
    for (const auto& [mono, c] : e.terms) {
        RingElement prod = tgt.one();
        for (std::size_t i = 0; i < mono.size() && !prod.is_zero(); ++i)
            for (int rep = 0; rep < mono[i]; ++rep)
                prod = tgt.multiply(prod, f.images[i]);
        out = add(out, scale(c, prod, tgt), tgt);
    }
    return out;
}

Bundle pullback(const RingMap& f, const Bundle& x) {
    if (x.ring && x.ring != f.source)
        throw Error("bundle does not live over the map's source ring");
    std::vector<RingElement> classes;
    for (const RingElement& c : x.classes)
        classes.push_back(apply(f, c));
    return make_bundle(x.label + "^*", std::move(classes), *f.target,
                       "pullback of " + x.label);
}

std::vector<std::vector<int>> partitions_of(int n, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, max_part < n ? max_part : n);
    return out;
}

std::vector<GroupElement> chern_subgroup(const Bundle& x, const GradedRing& r,
                                         int degree2i) {
    if (degree2i % 2 != 0 || degree2i < 2)
        throw Error("chern_subgroup wants a positive even degree");
    if (degree2i > r.max_degree())
        throw Error("degree beyond the truncation bound");
    const int i = degree2i / 2;
    std::vector<GroupElement> out;
    for (const std::vector<int>& part : partitions_of(i, i)) {
        RingElement prod = r.one();
        for (int p : part) {
            if (prod.is_zero()) break;
            prod = r.multiply(prod, bundle_class(x, p, r));
        }
        out.push_back(r.coords(prod, degree2i));
    }
    return out;
}

int chernrank(const Bundle& x, const GradedRing& r, int dim) {
    if (x.ring && x.ring != &r)
        throw Error("bundle does not live over this ring");
    for (int i = 1; 2 * i <= dim; ++i) {
        const FGGroup& piece = r.piece(2 * i);
        if (piece.trivial()) continue;
        if (!saturates(chern_subgroup(x, r, 2 * i), piece))
            return 2 * (i - 1);
    }
    return (dim % 2 == 0) ? dim : dim - 1;
}

} // namespace chrank
