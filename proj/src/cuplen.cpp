#include "chrank/cuplen.hpp"

#include <functional>

namespace chrank {

CupReport even_cup_length(const GradedRing& r, int dim) {
    struct Cls {
        int degree;
        Exponents mono;
        RingElement elem;
    };
    std::vector<Cls> classes;
    for (int d = 2; d <= dim; d += 2)
        for (const Exponents& m : r.basis(d))
            classes.push_back({d, m, r.monomial_element(m)});
    // basis() is ascending within a degree and degrees ascend, so the list
    // is ascending in the global monomial order.

    CupReport best;
    std::vector<std::size_t> seq;
    std::function<void(std::size_t, const RingElement&, int)> dfs =
        [&](std::size_t start, const RingElement& prod, int used) {
            if (static_cast<int>(seq.size()) > best.length) {
                best.length = static_cast<int>(seq.size());
                best.witness.clear();
                for (std::size_t idx : seq)
                    best.witness.push_back(classes[idx].mono);
            }
            for (std::size_t i = start; i < classes.size(); ++i) {
                if (used + classes[i].degree > dim) break; // degrees ascend
                RingElement next = r.multiply(prod, classes[i].elem);
                if (next.is_zero()) continue;
                seq.push_back(i);
                dfs(i, next, used + classes[i].degree);
                seq.pop_back();
            }
        };
    dfs(0, r.one(), 0);
    return best;
}

bool thm12_hypothesis(const Bundle& x, int k, const GradedRing& r,
                      int complex_dim) {
    const int d = complex_dim;
    if (k < 1)
        throw PreconditionNotMet("hypothesis check needs k >= 1");
    if (d < 1 || 2 * d > r.max_degree())
        throw PreconditionNotMet("complex dimension out of range");
    for (int deg = 2; deg <= r.max_degree(); deg += 2)
        for (const Int& o : r.piece(deg).orders)
            if (o != 0)
                throw PreconditionNotMet(
                    "even cohomology must be a free Z-module");
    if (2 * k > chernrank(x, r, 2 * d))
        throw PreconditionNotMet("hypothesis check needs 2k <= chernrank");

    for (const std::vector<int>& part : partitions_of(d, k)) {
        RingElement prod = r.one();
        for (int p : part) {
            if (prod.is_zero()) break;
            prod = r.multiply(prod, bundle_class(x, p, r));
        }
        if (!prod.is_zero()) return false;
    }
    return true;
}

mpq_class thm12_bound(int d, int k, int rx) {
    if (!(d > k && k >= 1))
        throw PreconditionNotMet("bound needs d > k >= 1");
    if (rx < 2 || rx % 2 != 0)
        throw PreconditionNotMet("bound needs even r_X >= 2");
    mpq_class q(2 * (d - k - 1), rx);
    q.canonicalize();
    return q + 1;
}

int chern_monomial_length(const Bundle& x, const GradedRing& r, int dim) {
    std::vector<std::pair<int, RingElement>> classes; // (degree 2i, c_i)
    for (std::size_t i = 0; i < x.classes.size(); ++i)
        if (!x.classes[i].is_zero())
            classes.emplace_back(2 * static_cast<int>(i + 1), x.classes[i]);

    int best = 0;
    std::function<void(std::size_t, const RingElement&, int, int)> dfs =
        [&](std::size_t start, const RingElement& prod, int used, int len) {
            if (len > best) best = len;
            for (std::size_t i = start; i < classes.size(); ++i) {
                if (used + classes[i].first > dim) break;
                RingElement next = r.multiply(prod, classes[i].second);
                if (next.is_zero()) continue;
                dfs(i, next, used + classes[i].first, len + 1);
            }
        };
    dfs(0, r.one(), 0, 0);
    return best;
}

} // namespace chrank
