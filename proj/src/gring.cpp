#include "chrank/gring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace chrank {

namespace {

int monomial_degree(const Exponents& mono, const std::vector<Generator>& gens) {
    if (mono.size() != gens.size())
        throw UnknownGenerator("monomial arity does not match the generator list");
    int d = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] < 0)
            throw UnknownGenerator("negative exponent");
        d += mono[i] * gens[i].degree;
    }
    return d;
}

int merge_sign(const Exponents& u, const Exponents& v,
               const std::vector<Generator>& gens) {
    return word_merge_sign(u, v, gens);
}

bool divides_monomial(const Exponents& lhs, const Exponents& mono) {
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] > mono[i]) return false;
    return true;
}

Exponents mono_sub(const Exponents& mono, const Exponents& lhs) {
    Exponents r(mono.size());
    for (std::size_t i = 0; i < mono.size(); ++i)
        r[i] = mono[i] - lhs[i];
    return r;
}

Exponents mono_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

void add_term(RingElement& e, const Exponents& mono, const Int& c) {
    if (c == 0) return;
    auto it = e.terms.find(mono);
    if (it == e.terms.end()) {
        e.terms.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0) e.terms.erase(it);
    }
}

// Monomials bucketed by exact total degree, 0..maxdeg.
std::vector<std::vector<Exponents>> enumerate_monomials(
    const std::vector<Generator>& gens, int maxdeg) {
    std::vector<std::vector<Exponents>> buckets(maxdeg + 1);
    Exponents cur(gens.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int used) {
        if (idx == gens.size()) {
            buckets[used].push_back(cur);
            return;
        }
        const int d = gens[idx].degree;
        for (int e = 0; used + e * d <= maxdeg; ++e) {
            cur[idx] = e;
            rec(idx + 1, used + e * d);
        }
        cur[idx] = 0;
    };
    if (maxdeg >= 0) rec(0, 0);
    return buckets;
}

} // namespace

std::size_t GradedRing::generator_index(const std::string& name) const {
    auto it = gen_index_.find(name);
    if (it == gen_index_.end())
        throw UnknownGenerator("unknown generator '" + name + "'");
    return it->second;
}

const TablePresentation& GradedRing::table() const {
    if (!table_) throw Error("ring is not table-backed");
    return tablepres_;
}

int GradedRing::degree_of(const Exponents& mono) const {
    return monomial_degree(mono, gens_);
}

const std::vector<Exponents>& GradedRing::basis(int degree) const {
    static const std::vector<Exponents> empty;
    if (degree < 0 || degree > maxdeg_) return empty;
    return pieces_[degree].basis;
}

const FGGroup& GradedRing::piece(int degree) const {
    static const FGGroup trivial;
    if (degree < 0 || degree > maxdeg_) return trivial;
    return pieces_[degree].grp;
}

RingElement GradedRing::one() const {
    RingElement e;
    e.terms.emplace(Exponents(gens_.size(), 0), Int(1));
    return normalize(e);
}

RingElement GradedRing::monomial_element(const Exponents& mono, const Int& coeff) const {
    RingElement e;
    if (coeff != 0) e.terms.emplace(mono, coeff);
    return normalize(e);
}

RingElement GradedRing::generator_element(const std::string& name) const {
    Exponents mono(gens_.size(), 0);
    mono[generator_index(name)] = 1;
    return monomial_element(mono);
}

// Fold the word of a monomial through the multiplication table.  Returns
// a single scaled basis class or zero.
RingElement GradedRing::table_reduce(const Exponents& mono) const {
    Int coeff = 1;
    int cls = -1; // -1 = unit so far
    for (std::size_t i = 0; i < mono.size(); ++i) {
        for (int rep = 0; rep < mono[i]; ++rep) {
            if (cls < 0) {
                cls = static_cast<int>(i);
                continue;
            }
            int a = cls, b = static_cast<int>(i);
            if (a > b) std::swap(a, b);
            auto it = tablepres_.products.find({a, b});
            if (it == tablepres_.products.end() || it->second.second < 0 ||
                it->second.first == 0)
                return {};
            coeff *= it->second.first;
            cls = it->second.second;
        }
    }
    RingElement e;
    Exponents out(gens_.size(), 0);
    if (cls >= 0) out[cls] = 1;
    e.terms.emplace(out, coeff);
    return e;
}

void GradedRing::reduce_coeffs(RingElement& e) const {
    for (auto it = e.terms.begin(); it != e.terms.end();) {
        Int modulus;
        if (modp_ > 0) {
            modulus = modp_;
        } else {
            const int d = degree_of(it->first);
            const Piece& p = pieces_[d];
            auto bi = p.index.find(it->first);
            if (bi == p.index.end())
                throw Error("internal: non-basis monomial after reduction");
            modulus = p.grp.orders[bi->second];
        }
        if (modulus != 0) {
            Int r;
            mpz_mod(r.get_mpz_t(), it->second.get_mpz_t(), modulus.get_mpz_t());
            it->second = r;
        }
        if (it->second == 0)
            it = e.terms.erase(it);
        else
            ++it;
    }
}

RingElement GradedRing::normalize(const RingElement& e) const {
    RingElement acc;
    for (const auto& [mono, c] : e.terms) {
        if (c == 0) continue;
        const int d = degree_of(mono);
        if (d > maxdeg_) continue; // truncated
        if (table_) {
            RingElement red = table_reduce(mono);
            for (const auto& [rm, rc] : red.terms)
                add_term(acc, rm, c * rc);
        } else {
            auto it = nf_.find(mono);
            if (it == nf_.end())
                throw Error("internal: monomial missing from normal form cache");
            for (const auto& [rm, rc] : it->second.terms)
                add_term(acc, rm, c * rc);
        }
    }
    reduce_coeffs(acc);
    return acc;
}

RingElement GradedRing::multiply(const RingElement& a, const RingElement& b) const {
    RingElement raw;
    for (const auto& [ma, ca] : a.terms) {
        const int da = degree_of(ma);
        for (const auto& [mb, cb] : b.terms) {
            if (da + degree_of(mb) > maxdeg_) continue;
            const int sign = merge_sign(ma, mb, gens_);
            add_term(raw, mono_add(ma, mb), sign < 0 ? Int(-ca * cb) : Int(ca * cb));
        }
    }
    return normalize(raw);
}

GroupElement GradedRing::coords(const RingElement& e, int degree) const {
    const Piece& p = pieces_.at(degree);
    GroupElement v(p.basis.size(), Int(0));
    for (const auto& [mono, c] : e.terms) {
        if (degree_of(mono) != degree)
            throw DegreeError("element is not homogeneous of degree " +
                              std::to_string(degree));
        auto it = p.index.find(mono);
        if (it == p.index.end())
            throw Error("internal: monomial not in basis");
        v[it->second] = c;
    }
    return v;
}

std::string GradedRing::monomial_string(const Exponents& mono) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!first) os << "*";
        os << gens_[i].name;
        if (mono[i] > 1) os << "^" << mono[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string GradedRing::to_string(const RingElement& e) const {
    if (e.terms.empty()) return "0";
    std::vector<std::pair<Exponents, Int>> terms(e.terms.begin(), e.terms.end());
    std::sort(terms.begin(), terms.end(),
              [&](const auto& x, const auto& y) {
                  return monomial_less(x.first, y.first, *this);
              });
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        Int a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit_mono =
            std::all_of(mono.begin(), mono.end(), [](int x) { return x == 0; });
        if (a == 1 && !unit_mono)
            os << monomial_string(mono);
        else if (unit_mono)
            os << a.get_str();
        else
            os << a.get_str() << "*" << monomial_string(mono);
        first = false;
    }
    return os.str();
}

bool monomial_less(const Exponents& a, const Exponents& b, const GradedRing& r) {
    const int da = r.degree_of(a), db = r.degree_of(b);
    if (da != db) return da < db;
    return a < b;
}

// Each odd-degree letter of u crossing an odd-degree letter of v with a
// smaller generator index contributes one anticommutation.
int word_merge_sign(const Exponents& u, const Exponents& v,
                    const std::vector<Generator>& gens) {
    long crossings = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!(gens[i].degree & 1) || u[i] == 0) continue;
        for (std::size_t j = 0; j < i; ++j)
            if ((gens[j].degree & 1) && v[j] != 0)
                crossings += static_cast<long>(u[i]) * v[j];
    }
    return (crossings & 1) ? -1 : 1;
}

namespace {

struct RewriteSystem {
    const std::vector<Generator>& gens;
    std::vector<const Relation*> rewrites; // coefficient-1 rules, declaration order
    std::map<Exponents, RingElement>& nf;

    // Expand one rewrite step of `rule` applied to `mono` into raw monomials.
    RingElement one_step(const Exponents& mono, const Relation& rule) const {
        Exponents rest = mono_sub(mono, rule.lhs);
        const int s0 = merge_sign(rule.lhs, rest, gens);
        RingElement out;
        for (const auto& [rm, rc] : rule.rhs.terms) {
            const int s1 = merge_sign(rm, rest, gens);
            add_term(out, mono_add(rm, rest),
                     (s0 * s1) < 0 ? Int(-rc) : rc);
        }
        return out;
    }

    const Relation* first_applicable(const Exponents& mono) const {
        for (const Relation* r : rewrites)
            if (divides_monomial(r->lhs, mono)) return r;
        return nullptr;
    }

    const RingElement& reduce(const Exponents& mono) {
        auto it = nf.find(mono);
        if (it != nf.end()) return it->second;
        RingElement result;
        const Relation* rule = first_applicable(mono);
        if (!rule) {
            result.terms.emplace(mono, Int(1));
        } else {
            RingElement step = one_step(mono, *rule);
            for (const auto& [m, c] : step.terms) {
                const RingElement& sub = reduce(m);
                for (const auto& [sm, sc] : sub.terms)
                    add_term(result, sm, c * sc);
            }
        }
        return nf.emplace(mono, std::move(result)).first->second;
    }
};

} // namespace

GradedRing compile(const RingPresentation& p) {
    GradedRing r;
    r.maxdeg_ = p.max_degree;
    r.modp_ = p.mod_p;
    r.table_ = false;
    r.gens_ = p.generators;
    if (p.max_degree < 0)
        throw NonAdmissiblePresentation("negative truncation degree");
    if (p.mod_p < 0 || p.mod_p == 1)
        throw NonAdmissiblePresentation("coefficient modulus must be 0 or >= 2");
    for (std::size_t i = 0; i < r.gens_.size(); ++i) {
        if (r.gens_[i].degree < 1)
            throw NonAdmissiblePresentation("generator '" + r.gens_[i].name +
                                            "' must have degree >= 1");
        if (r.gens_[i].name.empty())
            throw NonAdmissiblePresentation("generator with empty name");
        if (!r.gen_index_.emplace(r.gens_[i].name, i).second)
            throw NonAdmissiblePresentation("duplicate generator '" +
                                            r.gens_[i].name + "'");
    }

    // Admit relations: orient signs, check degree preservation and the
    // order-decreasing condition, restrict scaled relations to rhs = 0.
    for (Relation rel : p.relations) {
        if (rel.lhs.size() != r.gens_.size())
            throw NonAdmissiblePresentation("relation lhs arity mismatch");
        if (rel.lhs_coeff == 0)
            throw NonAdmissiblePresentation("relation with zero lhs coefficient");
        if (rel.lhs_coeff < 0) {
            rel.lhs_coeff = -rel.lhs_coeff;
            RingElement neg;
            for (const auto& [m, c] : rel.rhs.terms) neg.terms.emplace(m, -c);
            rel.rhs = std::move(neg);
        }
        const int ld = monomial_degree(rel.lhs, r.gens_);
        if (ld < 1)
            throw NonAdmissiblePresentation("relation lhs must have degree >= 1");
        for (const auto& [m, c] : rel.rhs.terms) {
            if (monomial_degree(m, r.gens_) != ld)
                throw NonAdmissiblePresentation(
                    "relation is not degree-preserving: " + r.monomial_string(m));
            if (!(m < rel.lhs))
                throw NonAdmissiblePresentation(
                    "order-increasing relation: rhs monomial " +
                    r.monomial_string(m) + " is not smaller than lhs " +
                    r.monomial_string(rel.lhs));
        }
        if (rel.lhs_coeff > 1) {
            if (r.modp_ > 0) {
                if (rel.lhs_coeff % r.modp_ == 0) continue; // vacuous mod p
                throw NonAdmissiblePresentation(
                    "scaled relation with coefficient prime to the modulus");
            }
            if (!rel.rhs.is_zero())
                throw NonAdmissiblePresentation(
                    "scaled relation with nonzero rhs is not supported");
        }
        r.relations_.push_back(std::move(rel));
    }

    // Odd-degree generators need a square rule; default x^2 = 0.
    for (std::size_t i = 0; i < r.gens_.size(); ++i) {
        if (!(r.gens_[i].degree & 1)) continue;
        Exponents sq(r.gens_.size(), 0);
        sq[i] = 2;
        bool have = false;
        for (const Relation& rel : r.relations_)
            if (rel.lhs_coeff == 1 && rel.lhs == sq) { have = true; break; }
        if (!have) {
            r.relations_.push_back(Relation{1, sq, {}});
            r.notes_.push_back("default square rule " + r.gens_[i].name +
                               "^2 = 0 applied to odd generator");
        }
    }

    auto buckets = enumerate_monomials(r.gens_, r.maxdeg_);

    RewriteSystem rs{r.gens_, {}, r.nf_};
    for (const Relation& rel : r.relations_)
        if (rel.lhs_coeff == 1) rs.rewrites.push_back(&rel);

    for (int d = 0; d <= r.maxdeg_; ++d)
        for (const Exponents& m : buckets[d])
            rs.reduce(m);

    // Brute-force confluence: every one-step choice, fully normalized, must
    // agree with the deterministic normal form.
    for (int d = 0; d <= r.maxdeg_; ++d)
        for (const Exponents& m : buckets[d]) {
            const RingElement& expect = r.nf_.at(m);
            for (const Relation* rule : rs.rewrites) {
                if (!divides_monomial(rule->lhs, m)) continue;
                RingElement step = rs.one_step(m, *rule);
                RingElement full;
                for (const auto& [sm, sc] : step.terms)
                    for (const auto& [nm, nc] : r.nf_.at(sm).terms)
                        add_term(full, nm, sc * nc);
                if (!(full == expect))
                    throw NonConfluent("normal form is not unique at monomial " +
                                           r.monomial_string(m),
                                       r.monomial_string(m));
            }
        }

    // Bases: normal monomials per degree, ascending in the monomial order.
    r.pieces_.resize(r.maxdeg_ + 1);
    for (int d = 0; d <= r.maxdeg_; ++d) {
        auto& piece = r.pieces_[d];
        for (const Exponents& m : buckets[d]) {
            const RingElement& nf = r.nf_.at(m);
            if (nf.terms.size() == 1 && nf.terms.begin()->first == m &&
                nf.terms.begin()->second == 1)
                piece.basis.push_back(m);
        }
        std::sort(piece.basis.begin(), piece.basis.end());
        for (std::size_t i = 0; i < piece.basis.size(); ++i)
            piece.index.emplace(piece.basis[i], i);
    }

    // Torsion: instantiate each scaled relation against every complementary
    // monomial; each instance must reduce to a single scaled basis monomial.
    std::map<Exponents, Int> torsion;
    for (const Relation& rel : r.relations_) {
        if (rel.lhs_coeff <= 1) continue;
        const int ld = monomial_degree(rel.lhs, r.gens_);
        if (ld > r.maxdeg_) continue;
        for (int d = 0; d + ld <= r.maxdeg_; ++d)
            for (const Exponents& u : buckets[d]) {
                const RingElement& v = r.nf_.at(mono_add(rel.lhs, u));
                if (v.is_zero()) continue;
                if (v.terms.size() != 1)
                    throw NonAdmissiblePresentation(
                        "torsion relation instance at " +
                        r.monomial_string(mono_add(rel.lhs, u)) +
                        " is not diagonal on the monomial basis");
                const auto& [bm, bc] = *v.terms.begin();
                Int contribution = abs(rel.lhs_coeff * bc);
                auto it = torsion.find(bm);
                if (it == torsion.end())
                    torsion.emplace(bm, contribution);
                else
                    it->second = gcd(it->second, contribution);
            }
    }

    for (int d = 0; d <= r.maxdeg_; ++d) {
        auto& piece = r.pieces_[d];
        piece.grp.orders.reserve(piece.basis.size());
        for (const Exponents& m : piece.basis) {
            Int order = 0;
            if (r.modp_ > 0) {
                order = r.modp_;
            } else {
                auto it = torsion.find(m);
                if (it != torsion.end()) order = it->second;
            }
            if (order == 1)
                throw NonAdmissiblePresentation(
                    "torsion forces basis monomial " + r.monomial_string(m) +
                    " to vanish; refine the presentation");
            piece.grp.orders.push_back(order);
        }
    }

    return r;
}

GradedRing compile(const TablePresentation& p) {
    GradedRing r;
    r.maxdeg_ = p.max_degree;
    r.modp_ = p.mod_p;
    r.table_ = true;
    if (p.max_degree < 0)
        throw NonAdmissiblePresentation("negative truncation degree");
    if (p.mod_p < 0 || p.mod_p == 1)
        throw NonAdmissiblePresentation("coefficient modulus must be 0 or >= 2");

    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        const TableClass& c = p.classes[i];
        if (c.degree < 1)
            throw NonAdmissiblePresentation("table class '" + c.name +
                                            "' must have degree >= 1");
        if (c.degree & 1)
            throw NonAdmissiblePresentation(
                "table form supports even-degree classes only");
        if (c.order < 0 || c.order == 1)
            throw NonAdmissiblePresentation("table class order must be 0 or >= 2");
        r.gens_.push_back(Generator{c.name, c.degree});
        if (!r.gen_index_.emplace(c.name, i).second)
            throw NonAdmissiblePresentation("duplicate table class '" + c.name + "'");
    }

    // Symmetrize and validate entries.
    r.tablepres_ = p;
    r.tablepres_.products.clear();
    const int n = static_cast<int>(p.classes.size());
    for (const auto& [key, val] : p.products) {
        auto [i, j] = key;
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n)
            throw NonAdmissiblePresentation("table entry out of range");
        if (val.first == 0 || val.second < 0) continue; // explicit zero
        if (val.second >= n)
            throw NonAdmissiblePresentation("table entry target out of range");
        const int dsum = p.classes[i].degree + p.classes[j].degree;
        if (dsum > p.max_degree)
            throw NonAdmissiblePresentation(
                "table entry exceeds the truncation degree");
        if (p.classes[val.second].degree != dsum)
            throw NonAdmissiblePresentation("table entry is not degree-additive");
        auto ins = r.tablepres_.products.emplace(std::make_pair(i, j), val);
        if (!ins.second && ins.first->second != val)
            throw NonAdmissiblePresentation("conflicting table entries");
    }

    // Order compatibility: order(u_i) * (u_i u_j) must vanish.
    for (const auto& [key, val] : r.tablepres_.products) {
        auto [i, j] = key;
        const Int& oi = p.classes[i].order;
        const Int& oj = p.classes[j].order;
        const Int& ot = p.classes[val.second].order;
        for (const Int& o : {oi, oj}) {
            if (o == 0) continue;
            if (ot == 0 || (o * val.first) % ot != 0)
                throw NonAdmissiblePresentation(
                    "table entry incompatible with class orders");
        }
    }

    // Bases and pieces.
    r.pieces_.resize(r.maxdeg_ + 1);
    {
        Exponents unit(r.gens_.size(), 0);
        r.pieces_[0].basis.push_back(unit);
        r.pieces_[0].index.emplace(unit, 0);
        r.pieces_[0].grp.orders.push_back(r.modp_ > 0 ? Int(r.modp_) : Int(0));
    }
    for (int i = 0; i < n; ++i) {
        const int d = p.classes[i].degree;
        if (d > r.maxdeg_)
            throw NonAdmissiblePresentation(
                "table class beyond the truncation degree");
        Exponents mono(r.gens_.size(), 0);
        mono[i] = 1;
        auto& piece = r.pieces_[d];
        piece.basis.push_back(mono);
    }
    for (int d = 1; d <= r.maxdeg_; ++d) {
        auto& piece = r.pieces_[d];
        std::sort(piece.basis.begin(), piece.basis.end());
        for (std::size_t i = 0; i < piece.basis.size(); ++i) {
            piece.index.emplace(piece.basis[i], i);
            int cls = 0;
            while (piece.basis[i][cls] == 0) ++cls;
            Int order = p.classes[cls].order;
            if (r.modp_ > 0) order = r.modp_;
            piece.grp.orders.push_back(order);
        }
    }

    // Exhaustive associativity check on class triples.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                const int dsum = p.classes[i].degree + p.classes[j].degree +
                                 p.classes[k].degree;
                if (dsum > r.maxdeg_) continue;
                Exponents mono(r.gens_.size(), 0);
                mono[i] += 1;
                mono[j] += 1;
                mono[k] += 1;
                RingElement uij = r.table_reduce([&] {
                    Exponents m(r.gens_.size(), 0);
                    m[i] += 1;
                    m[j] += 1;
                    return m;
                }());
                RingElement ujk = r.table_reduce([&] {
                    Exponents m(r.gens_.size(), 0);
                    m[j] += 1;
                    m[k] += 1;
                    return m;
                }());
                RingElement uk = r.monomial_element([&] {
                    Exponents m(r.gens_.size(), 0);
                    m[k] = 1;
                    return m;
                }());
                RingElement ui = r.monomial_element([&] {
                    Exponents m(r.gens_.size(), 0);
                    m[i] = 1;
                    return m;
                }());
                RingElement lhs = r.multiply(r.normalize(uij), uk);
                RingElement rhs = r.multiply(ui, r.normalize(ujk));
                if (!(lhs == rhs))
                    throw NonAdmissiblePresentation(
                        "multiplication table is not associative at (" +
                        p.classes[i].name + ", " + p.classes[j].name + ", " +
                        p.classes[k].name + ")");
            }

    return r;
}

RingElement normalize(const RingElement& e, const GradedRing& r) {
    return r.normalize(e);
}

RingElement multiply(const RingElement& a, const RingElement& b, const GradedRing& r) {
    return r.multiply(a, b);
}

RingElement add(const RingElement& a, const RingElement& b, const GradedRing& r) {
    RingElement raw = a;
    for (const auto& [m, c] : b.terms)
        add_term(raw, m, c);
    return r.normalize(raw);
}

RingElement scale(const Int& c, const RingElement& e, const GradedRing& r) {
    RingElement raw;
    for (const auto& [m, k] : e.terms)
        raw.terms.emplace(m, c * k);
    return r.normalize(raw);
}

int r_X(const GradedRing& r, int dim) {
    for (int i = 2; i <= dim; i += 2)
        if (!r.basis(i).empty()) return i;
    return (dim % 2 == 0) ? dim + 2 : dim + 1;
}

int k_X(const GradedRing& r, int dim) {
    int best = 0;
    for (int k = 1; 2 * k <= dim; ++k) {
        if (!is_cyclic(r, 2 * k)) break;
        best = 2 * k;
    }
    return best;
}

bool is_cyclic(const GradedRing& r, int degree) {
    if (degree > r.max_degree())
        throw Error("degree beyond the truncation bound");
    return r.basis(degree).size() <= 1;
}

bool ring_equal(const GradedRing& a, const GradedRing& b) {
    if (a.max_degree() != b.max_degree() || a.mod_p() != b.mod_p()) return false;
    if (a.generators().size() != b.generators().size()) return false;
    for (std::size_t i = 0; i < a.generators().size(); ++i)
        if (a.generators()[i].name != b.generators()[i].name ||
            a.generators()[i].degree != b.generators()[i].degree)
            return false;
    for (int d = 0; d <= a.max_degree(); ++d) {
        if (a.basis(d) != b.basis(d)) return false;
        if (a.piece(d).orders != b.piece(d).orders) return false;
    }
    // Same bases; products must agree as well.
    for (int d1 = 1; d1 <= a.max_degree(); ++d1)
        for (const Exponents& m1 : a.basis(d1))
            for (int d2 = d1; d1 + d2 <= a.max_degree(); ++d2)
                for (const Exponents& m2 : a.basis(d2)) {
                    RingElement p1 = a.multiply(a.monomial_element(m1),
                                                a.monomial_element(m2));
                    RingElement p2 = b.multiply(b.monomial_element(m1),
                                                b.monomial_element(m2));
                    if (!(p1 == p2)) return false;
                }
    return true;
}

} // namespace chrank
