#ifndef CHRANK_CUPLEN_HPP
#define CHRANK_CUPLEN_HPP

// Even cup length by exhaustive basis search, the complex-manifold cup
// length bound with its hypothesis check, and the maximal nonzero Chern
// monomial length.

#include <gmpxx.h>

#include <vector>

#include "chrank/chern.hpp"

namespace chrank {

struct CupReport {
    int length = 0;
    // Basis monomials (each of even degree >= 2) whose product is nonzero;
    // the lexicographically first maximal witness in the monomial order.
    std::vector<Exponents> witness;
};

// Longest nonzero product of even-degree (>= 2) basis classes.  Searching
// basis monomials only is complete: a nonzero product of sums has a
// nonzero product of basis terms of the same degrees.
CupReport even_cup_length(const GradedRing& r, int dim);

// True iff every monomial in c_1..c_k of total degree 2d evaluates to
// zero.  Preconditions (violations throw): k >= 1, 2k <= chernrank(x),
// all even pieces free.
bool thm12_hypothesis(const Bundle& x, int k, const GradedRing& r,
                      int complex_dim);

// The exact rational 1 + 2(d - k - 1)/rx; callers floor only for display.
mpq_class thm12_bound(int d, int k, int rx);

// Maximal length of a nonzero product c_{i_1} * ... * c_{i_k}, i_t >= 1;
// zero when all positive Chern classes vanish.
int chern_monomial_length(const Bundle& x, const GradedRing& r, int dim);

} // namespace chrank

#endif
