#ifndef COXHECKE_CLASS_POLY_HPP
#define COXHECKE_CLASS_POLY_HPP

/*
  Class polynomial tables, in two variants.

  The min variant lives in a finite group with the full generating set.
  Modulo the span of commutators, T_w collapses to a combination over
  conjugacy classes, each class contributing through a fixed minimal
  length representative.  The coefficients follow the cyclic-shift
  chain of w: constant across an equal-length conjugation, and across
  an arrow that drops the length by two they satisfy

      f_w = b_s f_{sws} + a_s f_{sw}.

  The max variant attaches a table to one finite W_J-orbit O for an
  irreducible J.  Values are anchored at elements that are of maximal
  length within their own orbit (1 on O, 0 elsewhere) and everything
  below is solved strictly downward, inverting the same relation:

      f_u = b_s^-1 (f_{sus} - a_s f_{su})      l(sus) = l(u) + 2.

  Equal-length conjugates share a value, so an element with no direct
  ascent borrows from a neighbour in its plateau that has one.  Every
  admissible route has to produce the same polynomial; a disagreement
  throws InconsistentRecursion and means a bug in this file, not bad
  input.
*/

#include <cstdint>
#include <map>

#include "coxhecke/conjugacy.hpp"
#include "coxhecke/coxeter.hpp"
#include "coxhecke/param_poly.hpp"

namespace coxhecke {

// Coefficient row attached to one finite W_J-orbit.  Zero entries are
// not stored; value() fills them back in.
struct ClassPolyTable {
  GeneratorSet J;
  // ShortLex-least element of maximal length in the orbit.
  Element rep;
  int param_rank = 0;
  std::map<Element, ParamPoly> f;

  ParamPoly value(const Element& w) const {
    auto it = f.find(w);
    return it == f.end() ? ParamPoly(param_rank) : it->second;
  }
};

// Coefficients of T_w over the conjugacy classes of a finite group,
// keyed by the ShortLex-least minimal-length element of each class.
// Throws NotFinite when the group is infinite.
std::map<Element, ParamPoly> class_poly_min(
    const CoxeterSystem& sys, const Element& w,
    std::uint64_t node_budget = kDefaultNodeBudget);

// Max-variant table for a finite W_J-orbit, solved over the double
// coset of the representative (spherical J) or over the downward
// closure of the orbit (affine and indefinite J, where finite orbits
// have constant length).  The orbit argument must come from
// decide_finite(sys, w, J).  Throws NotIrreducible for reducible J and
// NotFinite for an infinite orbit.
ClassPolyTable class_poly_max(const CoxeterSystem& sys, const GeneratorSet& J,
                              const ClassDecision& orbit,
                              std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace coxhecke

#endif
