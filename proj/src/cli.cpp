#include "chrank/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chrank/dsl.hpp"

namespace chrank {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file '" + path + "'", 0, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CompiledDoc load(const std::string& path) {
    return compile_document(parse(slurp(path)));
}

const Bundle& find_bundle(const CompiledDoc& doc, const std::string& label) {
    for (const Bundle& b : doc.bundles)
        if (b.label == label) return b;
    throw ParseError("no bundle '" + label + "' in the file", 0, 0);
}

void emit(std::ostream& out, const json& j, bool as_json) {
    if (as_json) {
        out << j.dump(2) << "\n";
        return;
    }
    // One key=value line per scalar result, then a small aligned table.
    std::vector<std::pair<std::string, std::string>> rows;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_structured()) continue;
        std::string v = it->is_string() ? it->get<std::string>() : it->dump();
        out << it.key() << "=" << v << "\n";
        rows.emplace_back(it.key(), v);
    }
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    out << "\n";
    for (const auto& [k, v] : rows)
        out << "  " << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

std::string trace_string(const std::vector<RuleFire>& trace) {
    std::string s;
    for (const RuleFire& f : trace) {
        if (!s.empty()) s += "; ";
        s += f.rule + ":" + std::to_string(f.bound);
    }
    return s;
}

int cmd_chernrank(const std::string& file, const std::string& label,
                  bool as_json, std::ostream& out) {
    CompiledDoc doc = load(file);
    const Bundle& b = find_bundle(doc, label);
    json j;
    j["space"] = doc.name;
    j["bundle"] = label;
    j["chernrank"] = chernrank(b, *doc.ring, doc.dim);
    j["rx"] = r_X(*doc.ring, doc.dim);
    emit(out, j, as_json);
    return 0;
}

int cmd_cuplength(const std::string& file, bool as_json, std::ostream& out) {
    CompiledDoc doc = load(file);
    CupReport rep = even_cup_length(*doc.ring, doc.dim);
    json j;
    j["space"] = doc.name;
    j["cup_e"] = rep.length;
    std::string w;
    for (const Exponents& m : rep.witness) {
        if (!w.empty()) w += ",";
        w += doc.ring->monomial_string(m);
    }
    j["witness"] = w;
    emit(out, j, as_json);
    return 0;
}

int cmd_uchrank(const std::string& file, bool as_json, std::ostream& out) {
    CompiledDoc doc = load(file);
    const int lower = uchrank_lower(doc.bundles, *doc.ring, doc.dim);
    UpperBound ub = uchrank_upper(*doc.ring, doc.meta);
    RankReport rep = combine(lower, ub);
    json j;
    j["space"] = doc.name;
    j["rx"] = r_X(*doc.ring, doc.dim);
    j["kx"] = k_X(*doc.ring, doc.dim);
    j["lower"] = rep.lower;
    j["upper"] = rep.upper;
    j["determined"] = rep.determined;
    j["trace"] = trace_string(rep.trace);
    emit(out, j, as_json);
    return 0;
}

int cmd_monolen(const std::string& file, const std::string& label, bool as_json,
                std::ostream& out) {
    CompiledDoc doc = load(file);
    const Bundle& b = find_bundle(doc, label);
    json j;
    j["space"] = doc.name;
    j["bundle"] = label;
    j["monolen"] = chern_monomial_length(b, *doc.ring, doc.dim);
    emit(out, j, as_json);
    return 0;
}

std::string rational_string(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

int cmd_bound_thm12(int d, int k, int rx, bool as_json, std::ostream& out) {
    json j;
    j["d"] = d;
    j["k"] = k;
    j["rx"] = rx;
    j["bound"] = rational_string(thm12_bound(d, k, rx));
    emit(out, j, as_json);
    return 0;
}

int cmd_bound_check(const std::string& file, const std::string& label, int k,
                    bool as_json, std::ostream& out) {
    CompiledDoc doc = load(file);
    const Bundle& b = find_bundle(doc, label);
    if (!doc.meta.complex_dim)
        throw ParseError("the file needs 'flag complex_dim = d'", 0, 0);
    const int d = *doc.meta.complex_dim;
    json j;
    j["space"] = doc.name;
    j["bundle"] = label;
    j["k"] = k;
    const bool hyp = thm12_hypothesis(b, k, *doc.ring, d);
    j["hypothesis"] = hyp;
    int rc = 0;
    if (hyp) {
        mpq_class bound = thm12_bound(d, k, r_X(*doc.ring, doc.dim));
        const int cup = even_cup_length(*doc.ring, doc.dim).length;
        j["bound"] = rational_string(bound);
        j["cup_e"] = cup;
        const bool holds = mpq_class(cup) <= bound;
        j["bound_holds"] = holds;
        if (!holds) rc = 1;
    }
    emit(out, j, as_json);
    return rc;
}

int cmd_catalog_list(bool as_json, std::ostream& out) {
    json j;
    json fams = json::array();
    VerifyBounds b;
    auto fam = [&](const std::string& name, const std::string& params) {
        json f;
        f["family"] = name;
        f["params"] = params;
        fams.push_back(f);
    };
    fam("CP^n", "1 <= n <= " + std::to_string(b.cp_max));
    fam("HP^n", "1 <= n <= " + std::to_string(b.hp_max));
    fam("S^n", "odd n <= " + std::to_string(b.sphere_odd_max) +
                   "; even n = 2,4 and 6..2*" +
                   std::to_string(b.sphere_even_half_max));
    fam("S^mxS^n", "m, n <= " + std::to_string(b.product_max) + " where defined");
    fam("S^m1vS^m2", "m1, m2 <= " + std::to_string(b.wedge_max) +
                         " with an even summand");
    fam("RP^n", "1 <= n <= " + std::to_string(b.rp_max));
    fam("S^2mxRP^n", "m <= " + std::to_string(b.sxrp_m_max) + ", n <= " +
                         std::to_string(b.sxrp_n_max));
    fam("S^2mxCP^n", "m <= " + std::to_string(b.sxcp_m_max) + ", n <= " +
                         std::to_string(b.sxcp_n_max));
    fam("V_k(C^n)", "1 < k < n <= " + std::to_string(b.stiefel_n_max) +
                        ", n-k even or not 2^t-1");
    fam("CP^n/CP^m", "1 <= m <= " + std::to_string(b.stunted_m_max) +
                         ", m+2 <= n <= " + std::to_string(b.stunted_n_max));
    j["families"] = fams;
    j["entries"] = static_cast<int>(build_catalog(b).size());
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "entries=" << j["entries"] << "\n\n";
        for (const auto& f : fams)
            out << "  " << f["family"].get<std::string>() << "  ("
                << f["params"].get<std::string>() << ")\n";
    }
    return 0;
}

int cmd_catalog_show(const std::string& name, std::ostream& out) {
    SpaceEntry e = space_by_name(name);
    out << export_dsl(e);
    return 0;
}

int cmd_catalog_verify(int max, const std::string& inject, bool as_json,
                       std::ostream& out) {
    VerifyBounds bounds;
    if (max > 0) bounds = bounds.clamped(max);
    std::vector<SpaceEntry> entries = build_catalog(bounds);
    if (!inject.empty()) {
        bool found = false;
        for (SpaceEntry& e : entries)
            if (e.name == inject) {
                e.expected_uchrank += 1; // deliberately corrupt
                found = true;
            }
        if (!found)
            throw ParseError("no catalog entry named '" + inject + "'", 0, 0);
    }
    VerifyReport rep = verify_entries(entries);

    json j;
    json rows = json::array();
    int determined = 0;
    for (const Verdict& v : rep.verdicts) {
        json r;
        r["entry"] = v.name;
        r["expected"] = v.expected;
        r["lower"] = v.lower;
        r["upper"] = v.upper;
        r["status"] = v.status;
        r["verdict"] = v.pass ? "PASS" : "FAIL";
        r["why"] = v.expected_why;
        r["trace"] = trace_string(v.trace);
        if (!v.checks.empty()) r["checks"] = v.checks;
        rows.push_back(r);
        if (v.status == "DETERMINED") ++determined;
    }
    j["results"] = rows;
    j["entries"] = rep.entries;
    j["determined"] = determined;
    j["failures"] = rep.failures;

    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        for (const Verdict& v : rep.verdicts) {
            out << "entry=" << v.name << " expected=" << v.expected
                << " lower=" << v.lower << " upper=" << v.upper
                << " status=" << v.status
                << " verdict=" << (v.pass ? "PASS" : "FAIL") << "\n";
            if (!v.pass)
                for (const std::string& c : v.checks)
                    out << "  # " << c << "\n";
        }
        out << "entries=" << rep.entries << "\n";
        out << "determined=" << determined << "\n";
        out << "failures=" << rep.failures << "\n";
    }
    return rep.failures == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact chern rank / cup length workbench"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object instead of key=value");

    std::string file, bundle, name, inject;
    int d = 0, k = 0, rx = 0, max = 0;

    auto* c_rank = app.add_subcommand("chernrank", "chern rank of a bundle");
    c_rank->add_option("file", file)->required();
    c_rank->add_option("--bundle", bundle)->required();

    auto* c_cup = app.add_subcommand("cuplength", "even cup length of a space");
    c_cup->add_option("file", file)->required();

    auto* c_uch = app.add_subcommand("uchrank", "bounds on the maximal chern rank");
    c_uch->add_option("file", file)->required();

    auto* c_mono = app.add_subcommand("monolen", "maximal nonzero chern monomial length");
    c_mono->add_option("file", file)->required();
    c_mono->add_option("--bundle", bundle)->required();

    auto* c_bound = app.add_subcommand("bound", "cup length bounds");
    c_bound->require_subcommand(1);
    auto* c_b12 = c_bound->add_subcommand("thm12", "evaluate the bound formula");
    c_b12->add_option("--d", d)->required();
    c_b12->add_option("--k", k)->required();
    c_b12->add_option("--rx", rx)->required();
    auto* c_b12c = c_bound->add_subcommand("thm12-check",
                                           "hypothesis check plus the bound");
    c_b12c->add_option("file", file)->required();
    c_b12c->add_option("--bundle", bundle)->required();
    c_b12c->add_option("--k", k)->required();

    auto* c_cat = app.add_subcommand("catalog", "built-in space catalog");
    c_cat->require_subcommand(1);
    auto* c_list = c_cat->add_subcommand("list", "families and ranges");
    auto* c_show = c_cat->add_subcommand("show", "print an entry as DSL text");
    c_show->add_option("name", name)->required();
    auto* c_verify = c_cat->add_subcommand("verify", "re-derive every expected value");
    c_verify->add_option("--max", max, "clamp every family parameter");
    c_verify->add_option("--inject-failure", inject,
                         "corrupt one expected value (harness self-test)");

    try {
        std::vector<const char*> argv;
        argv.push_back("chrank");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*c_rank) return cmd_chernrank(file, bundle, as_json, out);
        if (*c_cup) return cmd_cuplength(file, as_json, out);
        if (*c_uch) return cmd_uchrank(file, as_json, out);
        if (*c_mono) return cmd_monolen(file, bundle, as_json, out);
        if (*c_bound) {
            if (*c_b12) return cmd_bound_thm12(d, k, rx, as_json, out);
            if (*c_b12c) return cmd_bound_check(file, bundle, k, as_json, out);
        }
        if (*c_cat) {
            if (*c_list) return cmd_catalog_list(as_json, out);
            if (*c_show) return cmd_catalog_show(name, out);
            if (*c_verify) return cmd_catalog_verify(max, inject, as_json, out);
        }
        err << "error: no command\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << (file.empty() ? std::string("input") : file) << ":"
            << e.line << ":" << e.col << ": parse error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeError& e) {
        err << "degree error: " << e.what() << "\n";
        return 2;
    } catch (const NonConfluent& e) {
        err << "non-confluent presentation: " << e.what() << "\n";
        return 3;
    } catch (const NonAdmissiblePresentation& e) {
        err << "inadmissible presentation: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedParams& e) {
        err << "unsupported parameters: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace chrank
