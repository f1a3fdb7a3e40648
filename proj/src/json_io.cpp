#include "coxhecke/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>

namespace coxhecke {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw CoxError(ErrorCode::BadConfig, what);
}

}  // namespace

Json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      bad("malformed integer string: " + j.get<std::string>());
    }
  }
  bad("expected an integer or a decimal string");
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (Gen g : w) out.push_back(g);
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) bad("a word must be an array of generator indices");
  Word out;
  out.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_integer()) bad("a word must be an array of generator indices");
    out.push_back(v.get<Gen>());
  }
  return out;
}

Json generator_set_json(const GeneratorSet& J) {
  Json out = Json::array();
  for (Gen g : J) out.push_back(g);
  return out;
}

Json param_poly_json(const ParamPoly& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json exps = Json::array();
    for (int e : mono) exps.push_back(e);
    out.push_back(Json::array({exps, int_json(c)}));
  }
  return out;
}

ParamPoly param_poly_from_json(const Json& j, int n_classes) {
  if (!j.is_array()) bad("a polynomial must be a list of [exponents, coefficient] pairs");
  ParamPoly out(n_classes);
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2)
      bad("a polynomial term must be an [exponents, coefficient] pair");
    const Json& exps = term[0];
    if (!exps.is_array() || exps.size() != static_cast<std::size_t>(2 * n_classes))
      bad("exponent vector needs two slots per parameter class");
    ParamPoly mono = ParamPoly::constant(n_classes, int_from_json(term[1]));
    for (int cls = 0; cls < n_classes; ++cls) {
      const int ae = exps[2 * static_cast<std::size_t>(cls)].get<int>();
      const int be = exps[2 * static_cast<std::size_t>(cls) + 1].get<int>();
      if (ae < 0) bad("negative exponent on an a parameter");
      for (int k = 0; k < ae; ++k) mono *= ParamPoly::a(n_classes, cls);
      if (be != 0) mono *= ParamPoly::b(n_classes, cls, be);
    }
    out += mono;
  }
  return out;
}

Json uni_laurent_json(const UniLaurent& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(Json::array({e, int_json(c)}));
  return out;
}

Json hecke_element_json(const HeckeElement& h) {
  Json out = Json::array();
  for (const auto& [w, c] : h.terms) {
    Json row = Json::object();
    row["word"] = element_json(w);
    row["coeff"] = param_poly_json(c);
    out.push_back(std::move(row));
  }
  return out;
}

HeckeElement hecke_element_from_json(const CoxeterSystem& sys, const Json& j) {
  if (!j.is_array()) bad("an algebra element must be a list of {word, coeff} rows");
  const int n = sys.generator_class_count();
  HeckeElement out;
  for (const Json& row : j) {
    if (!row.is_object() || !row.contains("word") || !row.contains("coeff"))
      bad("an algebra element row needs \"word\" and \"coeff\"");
    const Element w = sys.normalize(word_from_json(row["word"]));
    ParamPoly c = param_poly_from_json(row["coeff"], n);
    if (c.is_zero()) continue;
    auto [it, fresh] = out.terms.emplace(w, std::move(c));
    if (!fresh) bad("duplicate word in an algebra element");
  }
  return out;
}

Json specialized_element_json(const SpecializedElement& h) {
  Json out = Json::array();
  for (const auto& [w, c] : h.terms) {
    Json row = Json::object();
    row["word"] = element_json(w);
    row["coeff"] = uni_laurent_json(c);
    out.push_back(std::move(row));
  }
  return out;
}

Json shift_arrow_json(const ShiftArrow& a) {
  Json out = Json::object();
  out["source"] = element_json(a.source);
  out["generator"] = a.generator;
  out["target"] = element_json(a.target);
  return out;
}

Json certificate_json(const ComponentCertificate& c) {
  Json out = Json::object();
  out["component"] = generator_set_json(c.component);
  out["type"] = subset_type_name(c.type);
  out["kind"] = certificate_kind_name(c.kind);
  out["finite"] = c.finite;
  if (c.perp_part) out["perp_part"] = element_json(*c.perp_part);
  if (c.component_part) out["component_part"] = element_json(*c.component_part);
  if (c.witness) out["witness"] = shift_arrow_json(*c.witness);
  if (c.closure_size > 0) out["closure_size"] = c.closure_size;
  return out;
}

Json class_decision_json(const ClassDecision& d) {
  Json cert = Json::object();
  cert["finite"] = d.finite;
  Json comps = Json::array();
  for (const ComponentCertificate& c : d.certificates)
    comps.push_back(certificate_json(c));
  cert["components"] = std::move(comps);

  Json out = Json::object();
  out["verdict"] = d.finite ? "finite" : "infinite";
  out["certificate"] = std::move(cert);
  Json orbit = Json::array();
  for (const Element& w : d.orbit) orbit.push_back(element_json(w));
  out["orbit"] = std::move(orbit);
  Json max = Json::array();
  for (const Element& w : d.maximal) max.push_back(element_json(w));
  out["max"] = std::move(max);
  Json min = Json::array();
  for (const Element& w : d.minimal) min.push_back(element_json(w));
  out["min"] = std::move(min);
  return out;
}

Json class_poly_table_json(const ClassPolyTable& t) {
  Json out = Json::object();
  out["class_rep"] = element_json(t.rep);
  Json entries = Json::array();
  for (const auto& [w, p] : t.f) {
    Json row = Json::object();
    row["word"] = element_json(w);
    row["poly"] = param_poly_json(p);
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json decomposition_json(const DecompositionReport& r) {
  Json out = Json::object();
  out["complete"] = r.complete;
  out["disjoint"] = r.disjoint;
  Json pieces = Json::array();
  for (const DecompositionPiece& piece : r.pieces) {
    Json p = Json::object();
    p["v"] = element_json(piece.v);
    p["K"] = generator_set_json(piece.K);
    Json members = Json::array();
    for (const Element& w : piece.members) members.push_back(element_json(w));
    p["members"] = std::move(members);
    Json orbits = Json::array();
    for (const PieceOrbit& orb : piece.orbits) {
      Json o = Json::object();
      Json om = Json::array();
      for (const Element& w : orb.members) om.push_back(element_json(w));
      o["members"] = std::move(om);
      o["k"] = element_json(orb.k);
      o["twisted_class_size"] = orb.twisted_class_size;
      o["counting_ok"] = orb.counting_ok;
      orbits.push_back(std::move(o));
    }
    p["orbits"] = std::move(orbits);
    pieces.push_back(std::move(p));
  }
  out["pieces"] = std::move(pieces);
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string element_label(const Element& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.word().size(); ++i) {
    if (i > 0) out.push_back(' ');
    const auto s = static_cast<std::size_t>(w.word()[i]);
    out += s < names.size() ? names[s] : "s" + std::to_string(w.word()[i]);
  }
  return out;
}

std::string dot_shift_graph(const std::vector<Element>& nodes,
                            const std::vector<ShiftArrow>& edges,
                            const std::vector<std::string>& names) {
  std::map<Element, std::size_t> index;
  std::ostringstream out;
  out << "digraph shifts {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (const Element& w : nodes) {
    const std::size_t id = index.size();
    if (!index.emplace(w, id).second) continue;
    out << "  n" << id << " [label=\"" << dot_escape(element_label(w, names))
        << "\"];\n";
  }
  for (const ShiftArrow& a : edges) {
    const auto src = index.find(a.source);
    const auto dst = index.find(a.target);
    if (src == index.end() || dst == index.end()) continue;
    out << "  n" << src->second << " -> n" << dst->second << " [label=\""
        << a.generator << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coxhecke
