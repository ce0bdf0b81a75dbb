#ifndef CHRANK_GRING_HPP
#define CHRANK_GRING_HPP

// Finitely presented graded-commutative rings, compiled to per-degree
// monomial bases with exact multiplication.  This is the model of the
// integral cohomology ring H^*(X) of a finite CW-complex: a presentation
// is either a generators/relations description (compiled by exhaustive
// rewriting) or an explicit basis with a multiplication table.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chrank/zlattice.hpp"

namespace chrank {

struct Generator {
    std::string name;
    int degree = 0; // >= 1
};

// Monomial as an exponent vector aligned with the generator list.  The
// implicit word lists generators in declaration order; reordering odd
// generators costs a sign.
using Exponents = std::vector<int>;

// Formal integer combination of monomials.  After `normalize` every key is
// a basis monomial and every coefficient is the canonical residue modulo
// that monomial's order.
struct RingElement {
    std::map<Exponents, Int> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const RingElement&) const = default;
};

// Oriented, degree-preserving relation: lhs_coeff * lhs = rhs with every
// rhs monomial strictly smaller than lhs in the global degree-lex order.
// Coefficient 1 gives a rewrite rule; lhs_coeff >= 2 declares torsion and
// requires rhs = 0.
struct Relation {
    Int lhs_coeff = 1;
    Exponents lhs;
    RingElement rhs;
};

struct RingPresentation {
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    int mod_p = 0;      // 0 = integer coefficients, otherwise Z/p
    int max_degree = 0; // truncation bound = dimension of the space
};

// Basis/table form: named classes with explicit pairwise products.  Used
// for rings whose natural description is an ideal with unit adjoined
// rather than a quotient presentation.  Only even-degree classes are
// allowed (no sign conventions to encode in the table).
struct TableClass {
    std::string name;
    int degree = 0;
    Int order = 0; // 0 = infinite cyclic
};

struct TablePresentation {
    std::vector<TableClass> classes;
    // (i, j) with i <= j -> (coefficient, target index); target -1 or missing
    // pair means the product is zero.
    std::map<std::pair<int, int>, std::pair<Int, int>> products;
    int mod_p = 0;
    int max_degree = 0;
};

class GradedRing {
public:
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t generator_index(const std::string& name) const;
    int max_degree() const { return maxdeg_; }
    int mod_p() const { return modp_; }
    bool table_backed() const { return table_; }
    const std::vector<std::string>& notes() const { return notes_; }
    const std::vector<Relation>& admitted_relations() const { return relations_; }
    const TablePresentation& table() const;

    int degree_of(const Exponents& mono) const;
    const std::vector<Exponents>& basis(int degree) const;
    const FGGroup& piece(int degree) const;

    // Canonical form: monomials reduced by the rewrite system (or folded
    // through the table), coefficients reduced modulo each monomial's order.
    // Idempotent; accepts raw input monomials.
    RingElement normalize(const RingElement& e) const;
    RingElement multiply(const RingElement& a, const RingElement& b) const;

    RingElement zero() const { return {}; }
    RingElement one() const;
    RingElement monomial_element(const Exponents& mono, const Int& coeff = 1) const;
    RingElement generator_element(const std::string& name) const;

    // Coordinates of a homogeneous element in the degree piece.
    GroupElement coords(const RingElement& e, int degree) const;

    std::string monomial_string(const Exponents& mono) const;
    std::string to_string(const RingElement& e) const;

    friend GradedRing compile(const RingPresentation& p);
    friend GradedRing compile(const TablePresentation& p);

private:
    GradedRing() = default;

    RingElement table_reduce(const Exponents& mono) const;
    void reduce_coeffs(RingElement& e) const;

    struct Piece {
        std::vector<Exponents> basis; // ascending in the global monomial order
        FGGroup grp;                  // orders aligned with basis
        std::map<Exponents, std::size_t> index;
    };

    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> gen_index_;
    int maxdeg_ = 0;
    int modp_ = 0;
    bool table_ = false;
    std::vector<Relation> relations_;         // as admitted, defaults included
    std::map<Exponents, RingElement> nf_;     // rewrite normal form per monomial
    std::vector<Piece> pieces_;               // degree 0..maxdeg_
    std::vector<std::string> notes_;
    TablePresentation tablepres_;
};

GradedRing compile(const RingPresentation& p);
GradedRing compile(const TablePresentation& p);

RingElement normalize(const RingElement& e, const GradedRing& r);
RingElement multiply(const RingElement& a, const RingElement& b, const GradedRing& r);
RingElement add(const RingElement& a, const RingElement& b, const GradedRing& r);
RingElement scale(const Int& c, const RingElement& e, const GradedRing& r);

// Smallest even i >= 2 with a nontrivial degree-i piece; if there is none,
// dim + 2 for even-dimensional spaces and dim + 1 otherwise.
int r_X(const GradedRing& r, int dim);

// Largest even 2k <= dim such that every even piece H^{2j}, j <= k, is
// cyclic (trivial pieces count as cyclic).
int k_X(const GradedRing& r, int dim);

// True iff the degree piece has at most one summand.
bool is_cyclic(const GradedRing& r, int degree);

// Degree-lex order: by total degree, then lexicographically on exponent
// vectors (a larger exponent on an earlier generator wins).
bool monomial_less(const Exponents& a, const Exponents& b, const GradedRing& r);

// Sign of sorting the concatenated word of u then v back into generator
// order; each pair of crossing odd-degree letters contributes -1.
int word_merge_sign(const Exponents& u, const Exponents& v,
                    const std::vector<Generator>& gens);

// Structural equality of compiled rings: generators, per-degree bases and
// orders, and all pairwise basis products.
bool ring_equal(const GradedRing& a, const GradedRing& b);

} // namespace chrank

#endif
