#ifndef CHRANK_RULES_HPP
#define CHRANK_RULES_HPP

// Upper/lower estimation of the maximum chern rank over all bundles:
// lower bounds come from explicit candidate bundles, upper bounds from
// obstruction rules driven by catalog metadata, combined into an interval.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chrank/chern.hpp"

namespace chrank {

// Metadata flags are catalog data with citations, not derived facts; the
// engine only validates their arithmetic side conditions (cyclicity and the
// power-of-two test are always recomputed from the ring).
struct SpaceMeta {
    int dim = 0;
    bool is_suspension = false;
    bool k_reduced_trivial = false;        // reduced K-theory vanishes
    std::vector<int> sphere_retract_dims;  // even m: restriction to S^m is onto H^m
    bool sw_obstruction = false;           // top even generator survives mod 2 and
                                           // lower SW classes of complex bundles vanish
    std::optional<int> complex_dim;        // closed complex manifold of dimension d
    bool product_k_trivial = false;        // stably trivial bundles only (product case)
    std::vector<std::pair<std::string, std::string>> provenance; // flag -> why
};

struct RuleFire {
    std::string rule;
    int bound = 0;
    std::string detail;
};

struct UpperBound {
    int bound = 0;
    std::vector<RuleFire> trace; // every fired rule; bound = minimum
};

struct RankReport {
    int lower = 0;
    int upper = 0;
    bool determined = false;
    std::vector<RuleFire> trace;
};

// Max chern rank over the candidates, floored at r_X - 2 (the trivial
// bundle is always implicitly available).
int uchrank_lower(const std::vector<Bundle>& candidates, const GradedRing& r,
                  int dim);

// Minimum over the applicable obstruction rules; the default ceiling is
// dim (even) or dim - 1 (odd).
UpperBound uchrank_upper(const GradedRing& r, const SpaceMeta& meta);

// (n-1)!, the divisor of any top Chern class over S^{2n} (Bott integrality).
Int bott_divisor(int n);

bool is_power_of_two(int n);

// Complex-manifold gap: a chern rank must be < 2d - r_X or exactly 2d.
bool thm29_allows(int d, int rx, int cr);

struct GapCheck {
    bool pass = true;
    std::vector<std::string> witnesses; // failing candidates, if any
    std::string note;
};

// Checks every candidate (callers usually append the trivial bundle).
// Preconditions: r_X <= d and H^{r_X} infinite cyclic; violation throws.
GapCheck check_thm29(const GradedRing& r, int complex_dim,
                     const std::vector<Bundle>& candidates);

// Throws InconsistentBounds when lower > upper.
RankReport combine(int lower, const UpperBound& upper);

} // namespace chrank

#endif
