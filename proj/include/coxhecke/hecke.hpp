#ifndef COXHECKE_HECKE_HPP
#define COXHECKE_HECKE_HPP

/*
  The Hecke algebra of a Coxeter system over ParamPoly coefficients, in
  the T basis.  The defining rule for a generator s against a basis
  element T_w is

      T_s T_w = T_{sw}                    when length goes up,
      T_s T_w = a_s T_w + b_s T_{sw}      when length goes down,

  and the mirror image on the right.  General products peel one reduced
  word letter at a time.
*/

#include <map>

#include "coxhecke/coxeter.hpp"
#include "coxhecke/param_poly.hpp"

namespace coxhecke {

struct HeckeElement {
  std::map<Element, ParamPoly> terms;

  bool is_zero() const { return terms.empty(); }
  const ParamPoly* coeff(const Element& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? nullptr : &it->second;
  }
  bool operator==(const HeckeElement& o) const = default;
};

struct SpecializedElement {
  std::map<Element, UniLaurent> terms;

  bool is_zero() const { return terms.empty(); }
  const UniLaurent* coeff(const Element& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? nullptr : &it->second;
  }
  bool operator==(const SpecializedElement& o) const = default;
};

class HeckeAlgebra {
public:
  explicit HeckeAlgebra(const CoxeterSystem& sys)
      : sys_(&sys), n_(sys.generator_class_count()) {}

  const CoxeterSystem& system() const { return *sys_; }
  int n_classes() const { return n_; }

  ParamPoly a_of(Gen s) const;
  ParamPoly b_of(Gen s) const;

  HeckeElement zero() const { return {}; }
  HeckeElement unit() const { return t_basis(Element()); }
  HeckeElement t_basis(const Element& w) const;
  HeckeElement t_basis(const Element& w, ParamPoly c) const;
  // b_s^-1 T_s - b_s^-1 a_s T_e
  HeckeElement t_inverse_gen(Gen s) const;

  HeckeElement add(const HeckeElement& x, const HeckeElement& y) const;
  HeckeElement sub(const HeckeElement& x, const HeckeElement& y) const;
  HeckeElement scale(const HeckeElement& x, const ParamPoly& c) const;
  HeckeElement mul_gen_left(Gen s, const HeckeElement& x) const;
  HeckeElement mul_gen_right(const HeckeElement& x, Gen s) const;
  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const;
  HeckeElement commutator(const HeckeElement& x, const HeckeElement& y) const;

  // Product of b_s over any reduced word of w; well defined because
  // braid moves permute letters within a conjugacy class.
  ParamPoly b_elem(const Element& w) const;

private:
  void add_term(HeckeElement& out, const Element& w, ParamPoly c) const;

  const CoxeterSystem* sys_;
  int n_;
};

SpecializedElement specialize(const HeckeElement& x, const Specialization& sp);
SpecializedElement group_algebra_mul(const CoxeterSystem& sys,
                                     const SpecializedElement& x,
                                     const SpecializedElement& y);

}  // namespace coxhecke

#endif
