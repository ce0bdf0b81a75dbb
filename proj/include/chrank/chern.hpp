#ifndef CHRANK_CHERN_HPP
#define CHRANK_CHERN_HPP

// Formal complex-bundle algebra: a bundle is its total Chern class, a list
// of homogeneous ring elements c_1, c_2, ... with c_i in degree 2i.  There
// is no rank bookkeeping and no realizability checking here; realizability
// obstructions are the business of the rules/catalog layers.

#include <string>
#include <vector>

#include "chrank/gring.hpp"

namespace chrank {

struct Bundle {
    std::string label;
    std::vector<RingElement> classes; // classes[i] = c_{i+1}; trailing zeros ok
    std::string justification;
    const GradedRing* ring = nullptr;
};

// Validates homogeneity (c_i of degree exactly 2i or zero), normalizes all
// classes, and drops trailing zeros.
Bundle make_bundle(const std::string& label, std::vector<RingElement> classes,
                   const GradedRing& r, const std::string& justification = "");

Bundle trivial_bundle(const GradedRing& r, const std::string& label = "trivial");

// c_i for i >= 1 (zero element beyond the stored list).
RingElement bundle_class(const Bundle& x, int i, const GradedRing& r);

// Total class of the direct sum: (1 + sum c_i(x)) * (1 + sum c_i(y)),
// truncated at the ring's top degree.
Bundle whitney_sum(const Bundle& x, const Bundle& y, const GradedRing& r);

// c_k negated for odd k.  An involution; the dual bundle has the same
// Chern classes, so `dual` is an alias.
Bundle conjugate(const Bundle& x);
Bundle dual(const Bundle& x);

// Degree-preserving ring homomorphism given by generator images; images
// are checked against all source relations at construction.
struct RingMap {
    const GradedRing* source = nullptr;
    const GradedRing* target = nullptr;
    std::vector<RingElement> images; // per source generator, normalized
};

RingMap make_ring_map(const GradedRing& source, const GradedRing& target,
                      std::vector<RingElement> images);
RingMap identity_map(const GradedRing& r);

RingElement apply(const RingMap& f, const RingElement& e);

// Bundle with classes f(c_i(x)) over the target ring.
Bundle pullback(const RingMap& f, const Bundle& x);

// Every evaluated Chern monomial c_{j1} * ... * c_{jt} with j1+...+jt = i,
// as coordinate vectors in the degree-2i piece.  Partitions are enumerated
// largest-part-first; zero evaluations are kept.
std::vector<GroupElement> chern_subgroup(const Bundle& x, const GradedRing& r,
                                         int degree2i);

// Largest even 2k <= dim such that the Chern monomials of x saturate every
// even piece H^{2i}, i <= k.  Always at least r_X - 2.
int chernrank(const Bundle& x, const GradedRing& r, int dim);

// Partitions of n into positive parts, each partition non-increasing,
// enumerated largest-part-first.  Exposed for the cup-length module.
std::vector<std::vector<int>> partitions_of(int n, int max_part);

} // namespace chrank

#endif
