#ifndef CHRANK_DSL_HPP
#define CHRANK_DSL_HPP

// Line-oriented text format for ring/bundle descriptions:
//
//   # comment
//   space NAME dim N [coeff Z|Z2]
//   gen IDENT deg D
//   rel EXPR = EXPR
//   basis IDENT deg D [order N]        (table form)
//   table IDENT * IDENT = 0 | [INT*]IDENT
//   bundle LABEL
//   c<i> = EXPR
//   flag KEY = VALUE
//
// EXPR is an integer-coefficient polynomial in the generators with `*`,
// `^`, `+`, `-` and parentheses.  A file describes exactly one space and
// any number of bundles over it.

#include <memory>
#include <string>
#include <vector>

#include "chrank/catalog.hpp"

namespace chrank {

struct BundleDef {
    std::string label;
    std::vector<std::pair<int, RingElement>> classes; // (i, raw c_i)
};

struct DslDocument {
    std::string name;
    int dim = 0;
    int mod_p = 0;
    bool table_form = false;
    RingPresentation pres;   // when !table_form
    TablePresentation table; // when table_form
    std::vector<BundleDef> bundles;
    SpaceMeta meta;
};

// Throws ParseError (syntax), DegreeError (inhomogeneous relation, c_i of
// the wrong degree) and NonAdmissiblePresentation (scaled relation with a
// nonzero right-hand side).
DslDocument parse(const std::string& text);

struct CompiledDoc {
    std::string name;
    std::shared_ptr<const GradedRing> ring;
    int dim = 0;
    SpaceMeta meta;
    std::vector<Bundle> bundles;
};

CompiledDoc compile_document(const DslDocument& doc);

// Text form of a catalog entry; parsing it back compiles to an equal ring.
std::string export_dsl(const SpaceEntry& e);

} // namespace chrank

#endif
