#include "chrank/rules.hpp"

#include <algorithm>

namespace chrank {

int uchrank_lower(const std::vector<Bundle>& candidates, const GradedRing& r,
                  int dim) {
    int best = r_X(r, dim) - 2;
    for (const Bundle& x : candidates)
        best = std::max(best, chernrank(x, r, dim));
    return best;
}

UpperBound uchrank_upper(const GradedRing& r, const SpaceMeta& meta) {
    const int dim = meta.dim;
    const int rx = r_X(r, dim);
    UpperBound ub;
    ub.trace.push_back({"ceiling", (dim % 2 == 0) ? dim : dim - 1,
                        (dim % 2 == 0) ? "even dimension" : "odd dimension"});

    // R1: a non-cyclic first even piece blocks everything above it.
    // Cyclicity is computed from the ring, never taken from a flag.
    if (rx <= dim && !is_cyclic(r, rx))
        ub.trace.push_back({"R1-noncyclic", rx - 2,
                            "H^" + std::to_string(rx) + " is not cyclic"});

    // R2: suspensions have no positive-degree products.
    if (meta.is_suspension)
        ub.trace.push_back({"R2-suspension", k_X(r, dim),
                            "k_X = " + std::to_string(k_X(r, dim))});

    // R3: vanishing reduced K-theory leaves only stably trivial bundles.
    if (meta.k_reduced_trivial)
        ub.trace.push_back({"R3-k-trivial", rx - 2, "reduced K-theory is 0"});

    // R4: restriction onto a sphere retract S^{2n}; Bott integrality keeps
    // c_n from hitting a generator unless n is 1 or 2.
    for (int m : meta.sphere_retract_dims) {
        if (m % 2 != 0) continue;
        const int n = m / 2;
        if (n == 1 || n == 2) continue;
        ub.trace.push_back({"R4-bott-retract", m - 2,
                            "retract dimension " + std::to_string(m) +
                                ", (n-1)! = " + bott_divisor(n).get_str()});
    }

    // R5: the first nonzero Stiefel-Whitney class sits in a power-of-two
    // degree, so an obstructed generator in a non-power-of-two degree is
    // unreachable.
    if (meta.sw_obstruction && rx <= dim && !is_power_of_two(rx))
        ub.trace.push_back({"R5-power-of-two", rx - 2,
                            "r_X = " + std::to_string(rx) +
                                " is not a power of two"});

    // R6: stably trivial bundles cannot hit the top class of a product.
    if (meta.product_k_trivial)
        ub.trace.push_back({"R6-product-k-trivial",
                            (dim % 2 == 0) ? dim - 2 : dim - 1,
                            "all bundles stably trivial"});

    ub.bound = ub.trace.front().bound;
    for (const RuleFire& f : ub.trace)
        ub.bound = std::min(ub.bound, f.bound);
    return ub;
}

Int bott_divisor(int n) {
    if (n < 1) throw Error("bott_divisor wants n >= 1");
    Int f = 1;
    for (int i = 2; i <= n - 1; ++i)
        f *= i;
    return f;
}

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

bool thm29_allows(int d, int rx, int cr) {
    return cr < 2 * d - rx || cr >= 2 * d;
}

GapCheck check_thm29(const GradedRing& r, int complex_dim,
                     const std::vector<Bundle>& candidates) {
    const int d = complex_dim;
    const int dim = 2 * d;
    const int rx = r_X(r, dim);
    if (rx > d)
        throw PreconditionNotMet("gap check needs r_X <= d");
    const FGGroup& piece = r.piece(rx);
    if (piece.rank() != 1 || piece.orders[0] != 0)
        throw PreconditionNotMet("gap check needs H^{r_X} infinite cyclic");

    GapCheck out;
    out.note = "forbidden chern rank interval [" + std::to_string(2 * d - rx) +
               ", " + std::to_string(2 * d) + ")";
    for (const Bundle& x : candidates) {
        const int cr = chernrank(x, r, dim);
        if (!thm29_allows(d, rx, cr)) {
            out.pass = false;
            out.witnesses.push_back(x.label + " has chern rank " +
                                    std::to_string(cr));
        }
    }
    return out;
}

RankReport combine(int lower, const UpperBound& upper) {
    if (lower > upper.bound)
        throw InconsistentBounds("lower bound " + std::to_string(lower) +
                                 " exceeds upper bound " +
                                 std::to_string(upper.bound));
    RankReport rep;
    rep.lower = lower;
    rep.upper = upper.bound;
    rep.determined = (lower == upper.bound);
    rep.trace = upper.trace;
    return rep;
}

} // namespace chrank
