#include "chrank/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chrank {

namespace {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind = End;
    std::string text;
    int col = 0;
};

std::vector<Token> tokenize(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break; // comment to end of line
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) ||
                    line[j] == '_'))
                ++j;
            out.push_back({Token::Ident, line.substr(i, j - i), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < line.size() &&
                   std::isdigit(static_cast<unsigned char>(line[j])))
                ++j;
            out.push_back({Token::Number, line.substr(i, j - i), col});
            i = j;
        } else if (std::string("+-*^()=,/").find(c) != std::string::npos) {
            out.push_back({Token::Symbol, std::string(1, c), col});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'",
                             lineno, col);
        }
    }
    out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
    return out;
}

using RawPoly = std::map<Exponents, Int>;

void raw_add(RawPoly& p, const Exponents& m, const Int& c) {
    if (c == 0) return;
    auto it = p.find(m);
    if (it == p.end())
        p.emplace(m, c);
    else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b,
                const std::vector<Generator>& gens) {
    RawPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Exponents m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            const int s = word_merge_sign(ma, mb, gens);
            raw_add(out, m, s < 0 ? Int(-ca * cb) : Int(ca * cb));
        }
    return out;
}

// Recursive-descent expression parser over one line's tokens.
struct ExprParser {
    const std::vector<Token>& toks;
    std::size_t pos;
    int lineno;
    const std::vector<Generator>& gens;
    const std::map<std::string, std::size_t>& index;

    const Token& peek() const { return toks[pos]; }
    Token next() { return toks[pos++]; }
    bool at_symbol(const char* s) const {
        return peek().kind == Token::Symbol && peek().text == s;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, lineno, peek().col);
    }

    RawPoly parse_expr() {
        bool neg = false;
        if (at_symbol("-")) {
            next();
            neg = true;
        }
        RawPoly acc = parse_term();
        if (neg) {
            RawPoly flipped;
            for (const auto& [m, c] : acc) flipped.emplace(m, -c);
            acc = std::move(flipped);
        }
        while (at_symbol("+") || at_symbol("-")) {
            const bool minus = next().text == "-";
            RawPoly t = parse_term();
            for (const auto& [m, c] : t) raw_add(acc, m, minus ? Int(-c) : c);
        }
        return acc;
    }

    RawPoly parse_term() {
        RawPoly acc = parse_factor();
        while (at_symbol("*")) {
            next();
            acc = raw_mul(acc, parse_factor(), gens);
        }
        return acc;
    }

    RawPoly parse_factor() {
        if (peek().kind == Token::Number) {
            Int v(next().text);
            RawPoly p;
            raw_add(p, Exponents(gens.size(), 0), v);
            return p;
        }
        if (peek().kind == Token::Ident) {
            const Token t = next();
            auto it = index.find(t.text);
            if (it == index.end())
                throw ParseError("unknown generator '" + t.text + "'", lineno,
                                 t.col);
            int exp = 1;
            if (at_symbol("^")) {
                next();
                if (peek().kind != Token::Number) fail("expected exponent");
                exp = std::stoi(next().text);
            }
            // x^e as an e-fold product of the single letter; no sign arises
            // from a repeated identical letter.
            RawPoly p;
            Exponents m(gens.size(), 0);
            m[it->second] = exp;
            raw_add(p, m, Int(1));
            return p;
        }
        if (at_symbol("(")) {
            next();
            RawPoly p = parse_expr();
            if (!at_symbol(")")) fail("expected ')'");
            next();
            return p;
        }
        fail("expected a number, generator or '('");
    }
};

int raw_degree(const Exponents& m, const std::vector<Generator>& gens) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens[i].degree;
    return d;
}

RingElement to_element(const RawPoly& p) {
    RingElement e;
    e.terms = p;
    return e;
}

} // namespace

DslDocument parse(const std::string& text) {
    DslDocument doc;
    bool have_space = false;
    bool have_gens = false, have_basis = false;
    std::vector<Generator> gens;
    std::map<std::string, std::size_t> gen_index;
    BundleDef* current_bundle = nullptr;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> toks = tokenize(line, lineno);
        if (toks.front().kind == Token::End) continue;
        const Token& head = toks.front();
        auto expect_kw = [&](std::size_t i, Token::Kind k,
                             const std::string& what) -> const Token& {
            if (i >= toks.size() || toks[i].kind != k)
                throw ParseError("expected " + what, lineno,
                                 i < toks.size() ? toks[i].col
                                                 : static_cast<int>(line.size()));
            return toks[i];
        };

        if (head.kind != Token::Ident)
            throw ParseError("expected a directive", lineno, head.col);

        if (head.text == "space") {
            if (have_space)
                throw ParseError("duplicate space line", lineno, head.col);
            have_space = true;
            // space NAME dim N [coeff Z|Z2]; NAME runs to the 'dim' keyword
            // and may contain ^, /, parentheses.
            std::size_t i = 1;
            std::string name;
            while (i < toks.size() &&
                   !(toks[i].kind == Token::Ident && toks[i].text == "dim")) {
                if (toks[i].kind == Token::End)
                    throw ParseError("expected 'dim'", lineno, toks[i].col);
                name += toks[i].text;
                ++i;
            }
            if (name.empty())
                throw ParseError("expected a space name", lineno, head.col);
            doc.name = name;
            expect_kw(i, Token::Ident, "'dim'");
            const Token& n = expect_kw(i + 1, Token::Number, "a dimension");
            doc.dim = std::stoi(n.text);
            i += 2;
            if (i < toks.size() && toks[i].kind == Token::Ident &&
                toks[i].text == "coeff") {
                const Token& c = expect_kw(i + 1, Token::Ident, "Z or Z2");
                if (c.text == "Z")
                    doc.mod_p = 0;
                else if (c.text == "Z2")
                    doc.mod_p = 2;
                else
                    throw ParseError("coefficients must be Z or Z2", lineno,
                                     c.col);
                i += 2;
            }
            if (toks[i].kind != Token::End)
                throw ParseError("trailing tokens after space line", lineno,
                                 toks[i].col);
            continue;
        }
        if (!have_space)
            throw ParseError("the file must start with a space line", lineno,
                             head.col);

        if (head.text == "gen") {
            if (have_basis)
                throw ParseError("cannot mix gen and basis lines", lineno,
                                 head.col);
            have_gens = true;
            const Token& id = expect_kw(1, Token::Ident, "a generator name");
            expect_kw(2, Token::Ident, "'deg'");
            if (toks[2].text != "deg")
                throw ParseError("expected 'deg'", lineno, toks[2].col);
            const Token& d = expect_kw(3, Token::Number, "a degree");
            if (gen_index.count(id.text))
                throw ParseError("duplicate generator '" + id.text + "'", lineno,
                                 id.col);
            gen_index[id.text] = gens.size();
            gens.push_back({id.text, std::stoi(d.text)});
            continue;
        }

        if (head.text == "basis") {
            if (have_gens)
                throw ParseError("cannot mix gen and basis lines", lineno,
                                 head.col);
            have_basis = true;
            doc.table_form = true;
            const Token& id = expect_kw(1, Token::Ident, "a class name");
            expect_kw(2, Token::Ident, "'deg'");
            if (toks[2].text != "deg")
                throw ParseError("expected 'deg'", lineno, toks[2].col);
            const Token& d = expect_kw(3, Token::Number, "a degree");
            Int order = 0;
            std::size_t i = 4;
            if (i < toks.size() && toks[i].kind == Token::Ident &&
                toks[i].text == "order") {
                const Token& o = expect_kw(i + 1, Token::Number, "an order");
                order = Int(o.text);
                i += 2;
            }
            if (toks[i].kind != Token::End)
                throw ParseError("trailing tokens after basis line", lineno,
                                 toks[i].col);
            if (gen_index.count(id.text))
                throw ParseError("duplicate class '" + id.text + "'", lineno,
                                 id.col);
            gen_index[id.text] = gens.size();
            gens.push_back({id.text, std::stoi(d.text)});
            doc.table.classes.push_back({id.text, std::stoi(d.text), order});
            continue;
        }

        if (head.text == "rel") {
            if (have_basis)
                throw ParseError("rel lines are not allowed in table form",
                                 lineno, head.col);
            // rel EXPR = EXPR
            std::size_t eq = 0;
            for (std::size_t i = 1; i < toks.size(); ++i)
                if (toks[i].kind == Token::Symbol && toks[i].text == "=") {
                    eq = i;
                    break;
                }
            if (eq == 0)
                throw ParseError("expected '=' in relation", lineno, head.col);
            std::vector<Token> lhs_toks(toks.begin() + 1, toks.begin() + eq);
            lhs_toks.push_back({Token::End, "", toks[eq].col});
            std::vector<Token> rhs_toks(toks.begin() + eq + 1, toks.end());
            ExprParser lp{lhs_toks, 0, lineno, gens, gen_index};
            RawPoly lhs = lp.parse_expr();
            if (lp.peek().kind != Token::End)
                throw ParseError("trailing tokens in relation", lineno,
                                 lp.peek().col);
            ExprParser rp{rhs_toks, 0, lineno, gens, gen_index};
            RawPoly rhs = rp.parse_expr();
            if (rp.peek().kind != Token::End)
                throw ParseError("trailing tokens in relation", lineno,
                                 rp.peek().col);

            RawPoly diff = lhs;
            for (const auto& [m, c] : rhs) raw_add(diff, m, -c);
            if (diff.empty()) continue; // vacuous
            int deg = -1;
            for (const auto& [m, c] : diff) {
                const int d = raw_degree(m, gens);
                if (deg == -1) deg = d;
                if (d != deg)
                    throw DegreeError("relation at line " +
                                      std::to_string(lineno) +
                                      " is not homogeneous");
            }
            // Orient against the largest monomial (degree-lex).
            auto leading = diff.begin();
            for (auto it = diff.begin(); it != diff.end(); ++it)
                if (it->first > leading->first) leading = it;
            Relation rel;
            rel.lhs = leading->first;
            rel.lhs_coeff = leading->second;
            RawPoly rest = diff;
            rest.erase(rel.lhs);
            if (abs(rel.lhs_coeff) == 1) {
                // c*m + rest = 0  =>  m = -rest/c
                RingElement rhs_elem;
                for (const auto& [m, c] : rest)
                    rhs_elem.terms.emplace(m, rel.lhs_coeff == 1 ? Int(-c) : c);
                rel.lhs_coeff = 1;
                rel.rhs = std::move(rhs_elem);
            } else if (!rest.empty()) {
                throw NonAdmissiblePresentation(
                    "line " + std::to_string(lineno) +
                    ": scaled relation with a nonzero remainder is not supported");
            }
            doc.pres.relations.push_back(std::move(rel));
            continue;
        }

        if (head.text == "table") {
            if (!have_basis)
                throw ParseError("table lines need basis lines first", lineno,
                                 head.col);
            // table IDENT * IDENT = 0 | [INT*]IDENT
            const Token& a = expect_kw(1, Token::Ident, "a class name");
            if (!(toks[2].kind == Token::Symbol && toks[2].text == "*"))
                throw ParseError("expected '*'", lineno, toks[2].col);
            const Token& b = expect_kw(3, Token::Ident, "a class name");
            if (!(toks[4].kind == Token::Symbol && toks[4].text == "="))
                throw ParseError("expected '='", lineno, toks[4].col);
            auto ia = gen_index.find(a.text), ib = gen_index.find(b.text);
            if (ia == gen_index.end())
                throw ParseError("unknown class '" + a.text + "'", lineno, a.col);
            if (ib == gen_index.end())
                throw ParseError("unknown class '" + b.text + "'", lineno, b.col);
            int i = static_cast<int>(ia->second), j = static_cast<int>(ib->second);
            if (i > j) std::swap(i, j);
            std::size_t ti = 5;
            Int coeff = 1;
            int target = -1;
            if (toks[ti].kind == Token::Number && toks[ti].text == "0" &&
                toks[ti + 1].kind == Token::End) {
                doc.table.products[{i, j}] = {Int(0), -1};
                continue;
            }
            if (toks[ti].kind == Token::Number) {
                coeff = Int(toks[ti].text);
                ++ti;
                if (!(toks[ti].kind == Token::Symbol && toks[ti].text == "*"))
                    throw ParseError("expected '*'", lineno, toks[ti].col);
                ++ti;
            }
            const Token& t = expect_kw(ti, Token::Ident, "a class name");
            auto it = gen_index.find(t.text);
            if (it == gen_index.end())
                throw ParseError("unknown class '" + t.text + "'", lineno, t.col);
            target = static_cast<int>(it->second);
            if (toks[ti + 1].kind != Token::End)
                throw ParseError("trailing tokens after table line", lineno,
                                 toks[ti + 1].col);
            doc.table.products[{i, j}] = {coeff, target};
            continue;
        }

        if (head.text == "bundle") {
            // The label runs to the end of the line and may contain symbols
            // (whitney sums are labelled like "v+w").
            std::string label;
            for (std::size_t i = 1; toks[i].kind != Token::End; ++i)
                label += toks[i].text;
            if (label.empty())
                throw ParseError("expected a bundle label", lineno, head.col);
            doc.bundles.push_back({label, {}});
            current_bundle = &doc.bundles.back();
            continue;
        }

        if (head.text == "flag") {
            const Token& key = expect_kw(1, Token::Ident, "a flag key");
            if (!(toks[2].kind == Token::Symbol && toks[2].text == "="))
                throw ParseError("expected '='", lineno, toks[2].col);
            auto bool_value = [&]() {
                const Token& v = expect_kw(3, Token::Ident, "true or false");
                if (v.text == "true") return true;
                if (v.text == "false") return false;
                throw ParseError("expected true or false", lineno, v.col);
            };
            if (key.text == "is_suspension")
                doc.meta.is_suspension = bool_value();
            else if (key.text == "k_reduced_trivial")
                doc.meta.k_reduced_trivial = bool_value();
            else if (key.text == "sw_obstruction")
                doc.meta.sw_obstruction = bool_value();
            else if (key.text == "product_k_trivial")
                doc.meta.product_k_trivial = bool_value();
            else if (key.text == "complex_dim")
                doc.meta.complex_dim =
                    std::stoi(expect_kw(3, Token::Number, "an integer").text);
            else if (key.text == "sphere_retract_dims") {
                std::size_t i = 3;
                for (;;) {
                    const Token& v = expect_kw(i, Token::Number, "an integer");
                    doc.meta.sphere_retract_dims.push_back(std::stoi(v.text));
                    ++i;
                    if (toks[i].kind == Token::Symbol && toks[i].text == ",") {
                        ++i;
                        continue;
                    }
                    break;
                }
            } else {
                throw ParseError("unknown flag '" + key.text + "'", lineno,
                                 key.col);
            }
            continue;
        }

        // c<i> = EXPR inside a bundle block
        if (head.text.size() >= 2 && head.text[0] == 'c' &&
            std::all_of(head.text.begin() + 1, head.text.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            })) {
            if (!current_bundle)
                throw ParseError("chern class line outside a bundle block",
                                 lineno, head.col);
            const int i = std::stoi(head.text.substr(1));
            if (i < 1)
                throw ParseError("chern class index must be >= 1", lineno,
                                 head.col);
            if (!(toks[1].kind == Token::Symbol && toks[1].text == "="))
                throw ParseError("expected '='", lineno, toks[1].col);
            std::vector<Token> rhs_toks(toks.begin() + 2, toks.end());
            ExprParser ep{rhs_toks, 0, lineno, gens, gen_index};
            RawPoly p = ep.parse_expr();
            if (ep.peek().kind != Token::End)
                throw ParseError("trailing tokens in chern class line", lineno,
                                 ep.peek().col);
            for (const auto& [m, c] : p)
                if (raw_degree(m, gens) != 2 * i)
                    throw DegreeError("line " + std::to_string(lineno) + ": c" +
                                      std::to_string(i) +
                                      " must have degree " + std::to_string(2 * i));
            current_bundle->classes.emplace_back(i, to_element(p));
            continue;
        }

        throw ParseError("unknown directive '" + head.text + "'", lineno,
                         head.col);
    }

    if (!have_space)
        throw ParseError("empty file: expected a space line", 1, 1);

    doc.pres.generators = gens;
    doc.pres.mod_p = doc.mod_p;
    doc.pres.max_degree = doc.dim;
    doc.table.mod_p = doc.mod_p;
    doc.table.max_degree = doc.dim;
    doc.meta.dim = doc.dim;
    return doc;
}

CompiledDoc compile_document(const DslDocument& doc) {
    CompiledDoc out;
    out.name = doc.name;
    out.dim = doc.dim;
    out.meta = doc.meta;
    out.ring = doc.table_form
                   ? std::make_shared<const GradedRing>(compile(doc.table))
                   : std::make_shared<const GradedRing>(compile(doc.pres));
    for (const BundleDef& bd : doc.bundles) {
        int top = 0;
        for (const auto& [i, elem] : bd.classes) top = std::max(top, i);
        std::vector<RingElement> classes(top);
        for (const auto& [i, elem] : bd.classes) classes[i - 1] = elem;
        out.bundles.push_back(
            make_bundle(bd.label, std::move(classes), *out.ring, "from file"));
    }
    return out;
}

std::string export_dsl(const SpaceEntry& e) {
    std::ostringstream os;
    const GradedRing& ring = *e.ring;
    os << "# " << e.name << "\n";
    os << "space " << e.name << " dim " << e.dim;
    os << " coeff " << (ring.mod_p() == 0 ? "Z" : "Z2") << "\n";

    if (std::holds_alternative<RingPresentation>(e.presentation)) {
        const auto& p = std::get<RingPresentation>(e.presentation);
        for (const Generator& g : p.generators)
            os << "gen " << g.name << " deg " << g.degree << "\n";
        for (const Relation& rel : p.relations) {
            os << "rel ";
            if (rel.lhs_coeff != 1) os << rel.lhs_coeff.get_str() << "*";
            os << ring.monomial_string(rel.lhs) << " = "
               << ring.to_string(rel.rhs) << "\n";
        }
    } else {
        const auto& p = std::get<TablePresentation>(e.presentation);
        for (const TableClass& c : p.classes) {
            os << "basis " << c.name << " deg " << c.degree;
            if (c.order != 0) os << " order " << c.order.get_str();
            os << "\n";
        }
        for (const auto& [key, val] : p.products) {
            os << "table " << p.classes[key.first].name << " * "
               << p.classes[key.second].name << " = ";
            if (val.second < 0 || val.first == 0) {
                os << "0";
            } else {
                if (val.first != 1) os << val.first.get_str() << "*";
                os << p.classes[val.second].name;
            }
            os << "\n";
        }
    }

    if (e.meta.is_suspension) os << "flag is_suspension = true\n";
    if (e.meta.k_reduced_trivial) os << "flag k_reduced_trivial = true\n";
    if (e.meta.sw_obstruction) os << "flag sw_obstruction = true\n";
    if (e.meta.product_k_trivial) os << "flag product_k_trivial = true\n";
    if (e.meta.complex_dim)
        os << "flag complex_dim = " << *e.meta.complex_dim << "\n";
    if (!e.meta.sphere_retract_dims.empty()) {
        os << "flag sphere_retract_dims = ";
        for (std::size_t i = 0; i < e.meta.sphere_retract_dims.size(); ++i)
            os << (i ? "," : "") << e.meta.sphere_retract_dims[i];
        os << "\n";
    }

    for (const Bundle& b : e.candidates) {
        os << "bundle " << b.label << "\n";
        for (std::size_t i = 0; i < b.classes.size(); ++i)
            if (!b.classes[i].is_zero())
                os << "c" << (i + 1) << " = " << ring.to_string(b.classes[i])
                   << "\n";
    }
    return os.str();
}

} // namespace chrank
