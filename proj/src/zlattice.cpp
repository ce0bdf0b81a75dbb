#include "chrank/zlattice.hpp"

#include <cstdlib>
#include <utility>

namespace chrank {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(dst, j) += q * m.at(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.at(i, dst) += q * m.at(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) = -m.at(r, j);
}

// Smallest nonzero |entry| in the submatrix starting at (t, t);
// ties broken by lowest (row, col).  Returns false if all zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& v = d.at(i, j);
            if (v == 0) continue;
            Int a = abs(v);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix d = m;
    IntMatrix left = IntMatrix::identity(nr);
    IntMatrix right = IntMatrix::identity(nc);

    const std::size_t n = nr < nc ? nr : nc;
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(d, t, pr, pc))
            break;
        swap_rows(d, t, pr);
        swap_rows(left, t, pr);
        swap_cols(d, t, pc);
        swap_cols(right, t, pc);

        for (;;) {
            // Clear column t below the pivot, then row t right of it.
            // Truncated division leaves remainders strictly smaller than
            // the pivot, so re-picking the minimum terminates.
            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                add_row(d, i, t, -q);
                add_row(left, i, t, -q);
                if (d.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                add_col(d, j, t, -q);
                add_col(right, j, t, -q);
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t rr = 0, cc = 0;
                find_pivot(d, t, rr, cc);
                swap_rows(d, t, rr);
                swap_rows(left, t, rr);
                swap_cols(d, t, cc);
                swap_cols(right, t, cc);
                continue;
            }
            // Pivot must divide the remaining submatrix for the
            // divisibility chain; pull a bad row up and re-reduce.
            bool fixed = true;
            for (std::size_t i = t + 1; i < nr && fixed; ++i)
                for (std::size_t j = t + 1; j < nc && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, t, i, Int(1));
                        add_row(left, t, i, Int(1));
                        fixed = false;
                    }
            if (fixed) break;
        }

        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(left, t);
        }
    }

    SnfResult res;
    res.diag.resize(n);
    for (std::size_t t = 0; t < n; ++t)
        res.diag[t] = d.at(t, t);
    res.left = std::move(left);
    res.right = std::move(right);
    return res;
}

namespace {

// Rows = generator vectors stacked on top of diag(orders).
IntMatrix stack_with_orders(const std::vector<GroupElement>& gens, const FGGroup& g) {
    const std::size_t n = g.rank();
    IntMatrix m(gens.size() + n, n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != n)
            throw DimensionMismatch("generator length does not match group rank");
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = gens[i][j];
    }
    for (std::size_t j = 0; j < n; ++j)
        m.at(gens.size() + j, j) = g.orders[j];
    return m;
}

} // namespace

bool saturates(const std::vector<GroupElement>& gens, const FGGroup& g) {
    const std::size_t n = g.rank();
    if (n == 0) return true;
    IntMatrix m = stack_with_orders(gens, g);
    SnfResult snf = smith_normal_form(m);
    // Quotient Z^n / rowspace is trivial iff there are n invariant
    // factors all equal to 1.
    std::size_t ones = 0;
    for (const Int& v : snf.diag)
        if (v == 1) ++ones;
    return ones == n;
}

bool member(const GroupElement& x, const std::vector<GroupElement>& gens,
            const FGGroup& g) {
    const std::size_t n = g.rank();
    if (x.size() != n)
        throw DimensionMismatch("element length does not match group rank");
    if (n == 0) return true;

    // Columns: one per generator, then the order columns d_j * e_j.
    const std::size_t cols = gens.size() + n;
    IntMatrix a(n, cols);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].size() != n)
            throw DimensionMismatch("generator length does not match group rank");
        for (std::size_t i = 0; i < n; ++i)
            a.at(i, k) = gens[k][i];
    }
    for (std::size_t j = 0; j < n; ++j)
        a.at(j, gens.size() + j) = g.orders[j];

    // A w = x is solvable over Z iff D u = L x is, where L A R = D.
    SnfResult snf = smith_normal_form(a);
    std::vector<Int> lx(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            lx[i] += snf.left.at(i, j) * x[j];

    for (std::size_t i = 0; i < n; ++i) {
        if (i < snf.diag.size() && snf.diag[i] != 0) {
            if (lx[i] % snf.diag[i] != 0) return false;
        } else {
            if (lx[i] != 0) return false;
        }
    }
    return true;
}

} // namespace chrank
