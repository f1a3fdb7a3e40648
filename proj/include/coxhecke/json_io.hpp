#ifndef COXHECKE_JSON_IO_HPP
#define COXHECKE_JSON_IO_HPP

/*
  JSON and DOT renderings of the library types, plus the inverse parsers
  the batch driver needs.  Everything here is deterministic: element maps
  already iterate in ShortLex order and monomial maps in their fixed
  term order, so equal inputs give byte-identical output.

  Words serialize as arrays of generator indices.  A polynomial is a
  list of [exponents, coefficient] pairs; coefficients that fit in 64
  bits are JSON integers, anything larger becomes a decimal string.
*/

#include <string>
#include <vector>

#include <json.hpp>

#include "coxhecke/centralizer.hpp"
#include "coxhecke/class_poly.hpp"
#include "coxhecke/conjugacy.hpp"
#include "coxhecke/coxeter.hpp"
#include "coxhecke/hecke.hpp"
#include "coxhecke/param_poly.hpp"

namespace coxhecke {

using Json = nlohmann::ordered_json;

Json int_json(const Int& v);
Int int_from_json(const Json& j);

Json word_json(const Word& w);
Word word_from_json(const Json& j);
inline Json element_json(const Element& w) { return word_json(w.word()); }

Json generator_set_json(const GeneratorSet& J);

// [[exponent vector, coefficient], ...]; slot 2c is the a_c exponent,
// slot 2c+1 the b_c exponent.
Json param_poly_json(const ParamPoly& p);
ParamPoly param_poly_from_json(const Json& j, int n_classes);

// [[exponent, coefficient], ...]
Json uni_laurent_json(const UniLaurent& p);

// [{"word": [...], "coeff": ...}, ...] in ShortLex order of the words.
Json hecke_element_json(const HeckeElement& h);
HeckeElement hecke_element_from_json(const CoxeterSystem& sys, const Json& j);

Json specialized_element_json(const SpecializedElement& h);

Json shift_arrow_json(const ShiftArrow& a);
Json certificate_json(const ComponentCertificate& c);

// {"verdict": ..., "certificate": ..., "orbit": ..., "max": ..., "min": ...}
Json class_decision_json(const ClassDecision& d);

// {"class_rep": ..., "entries": [{"word": ..., "poly": ...}, ...]}
Json class_poly_table_json(const ClassPolyTable& t);

Json decomposition_json(const DecompositionReport& r);

// Node labels join the generator names of the word with spaces; the
// identity is labeled "e".  Edge labels are generator indices.
std::string element_label(const Element& w, const std::vector<std::string>& names);
std::string dot_shift_graph(const std::vector<Element>& nodes,
                            const std::vector<ShiftArrow>& edges,
                            const std::vector<std::string>& names);

}  // namespace coxhecke

#endif
