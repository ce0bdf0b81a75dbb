#ifndef CHRANK_ZLATTICE_HPP
#define CHRANK_ZLATTICE_HPP

// Exact integer matrix kernel: Smith normal form over Z plus the
// subgroup saturation / membership tests used for finitely generated
// abelian groups.  All arithmetic is arbitrary precision.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "chrank/errors.hpp"

namespace chrank {

using Int = mpz_class;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

// A finitely generated abelian group as an ordered list of cyclic orders:
// 0 stands for an infinite cyclic summand, otherwise each order is >= 2.
// The empty list is the trivial group.
struct FGGroup {
    std::vector<Int> orders;

    std::size_t rank() const { return orders.size(); }
    bool trivial() const { return orders.empty(); }
};

// Element coordinates, read modulo the corresponding orders.
using GroupElement = std::vector<Int>;

struct SnfResult {
    std::vector<Int> diag;  // non-negative invariant factors, d_i | d_{i+1}
    IntMatrix left;         // unimodular
    IntMatrix right;        // unimodular; left * m * right is diagonal
};

// Diagonalize by elementary row/column operations.  Pivot selection is the
// minimal nonzero absolute value with ties broken by lowest (row, col), so
// the output is reproducible.  Diagonal entries are canonical: non-negative
// with d_1 | d_2 | ... | d_r.
SnfResult smith_normal_form(const IntMatrix& m);

// True iff the subgroup generated by `gens` inside g equals all of g.
// Decided via the SNF of the matrix stacking the generator vectors on top
// of the order relations diag(d_1..d_n): the quotient presented by that
// matrix is trivial iff all n invariant factors equal 1.
bool saturates(const std::vector<GroupElement>& gens, const FGGroup& g);

// True iff x lies in the subgroup generated by `gens` modulo the orders,
// decided by solving the integer linear system augmented with order columns.
bool member(const GroupElement& x, const std::vector<GroupElement>& gens,
            const FGGroup& g);

} // namespace chrank

#endif
