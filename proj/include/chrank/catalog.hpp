#ifndef CHRANK_CATALOG_HPP
#define CHRANK_CATALOG_HPP

// Parameterized constructors for the spaces whose maximal chern rank is
// known, with ring presentations, metadata flags, candidate bundles and
// expected values, plus a whole-catalog regression verifier.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chrank/cuplen.hpp"
#include "chrank/rules.hpp"

namespace chrank {

struct SpaceEntry {
    std::string name;
    std::shared_ptr<const GradedRing> ring;
    std::variant<RingPresentation, TablePresentation> presentation;
    int dim = 0;
    SpaceMeta meta;
    std::vector<Bundle> candidates;
    int expected_uchrank = 0;
    std::string expected_why;
    std::optional<int> expected_cup_e;
};

// Families; parameters outside the documented ranges throw UnsupportedParams.
SpaceEntry cp(int n);                    // CP^n
SpaceEntry hp(int n);                    // HP^n
SpaceEntry sphere(int n);                // S^n
SpaceEntry sphere_product(int m, int n); // S^m x S^n
SpaceEntry sphere_wedge(int m1, int m2); // S^m1 v S^m2
SpaceEntry rp(int n);                    // RP^n
SpaceEntry sphere_x_rp(int m, int n);    // S^{2m} x RP^n
SpaceEntry sphere_x_cp(int m, int n);    // S^{2m} x CP^n
SpaceEntry stiefel(int k, int n);        // V_k(C^n), 1 < k < n
SpaceEntry stunted_cp(int n, int m);     // CP^n / CP^m, n >= m + 2

// Dispatcher over family tags: "CP", "HP", "S", "SxS", "SvS", "RP",
// "SxRP", "SxCP", "V", "CP/CP".
SpaceEntry space(const std::string& family, const std::vector<int>& params);

// Entry from its display name, e.g. "CP^3", "S^2xS^4", "V_2(C^4)".
SpaceEntry space_by_name(const std::string& name);

bool product_supported(int m, int n);
bool wedge_supported(int m1, int m2);
bool stiefel_supported(int k, int n);

struct Verdict {
    std::string name;
    int expected = 0;
    int lower = 0;
    int upper = 0;
    std::string status; // DETERMINED | PAPER-ASSERTED | FAIL
    bool pass = false;
    std::vector<RuleFire> trace;
    std::vector<std::string> checks; // gap/cup/monomial-length check notes
    std::string expected_why;
};

// lower = max chern rank over candidates, upper = rule minimum; PASS iff
// lower <= expected <= upper and every applicable side check succeeds.
Verdict verify(const SpaceEntry& e);

struct VerifyBounds {
    int cp_max = 8;
    int hp_max = 4;
    int sphere_odd_max = 9;
    int sphere_even_half_max = 6; // S^2, S^4 always; S^{2n} for 3 <= n <= this
    int product_max = 12;
    int wedge_max = 10;
    int rp_max = 10;
    int sxrp_m_max = 4;
    int sxrp_n_max = 5;
    int sxcp_m_max = 4;
    int sxcp_n_max = 4;
    int stiefel_n_max = 6;
    int stunted_m_max = 3;
    int stunted_n_max = 6;

    // Clamp every family bound to at most `cap`.
    VerifyBounds clamped(int cap) const;
};

std::vector<SpaceEntry> build_catalog(const VerifyBounds& b);

struct VerifyReport {
    std::vector<Verdict> verdicts;
    int entries = 0;
    int failures = 0;
};

VerifyReport verify_all(const VerifyBounds& b);
VerifyReport verify_entries(const std::vector<SpaceEntry>& entries);

// Surjective restriction maps between catalog rings, with bundles over the
// source, for the pullback inequality property suite.
struct CatalogMap {
    std::string name;
    std::shared_ptr<const GradedRing> source;
    std::shared_ptr<const GradedRing> target;
    int source_dim = 0;
    int target_dim = 0;
    RingMap map;
    std::vector<Bundle> source_bundles;
};

std::vector<CatalogMap> catalog_ring_maps();

} // namespace chrank

#endif
