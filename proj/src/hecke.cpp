#include "coxhecke/hecke.hpp"

namespace coxhecke {

ParamPoly HeckeAlgebra::a_of(Gen s) const {
  return ParamPoly::a(n_, sys_->generator_class(s));
}

ParamPoly HeckeAlgebra::b_of(Gen s) const {
  return ParamPoly::b(n_, sys_->generator_class(s));
}

HeckeElement HeckeAlgebra::t_basis(const Element& w) const {
  return t_basis(w, ParamPoly::one(n_));
}

HeckeElement HeckeAlgebra::t_basis(const Element& w, ParamPoly c) const {
  HeckeElement x;
  if (!c.is_zero()) x.terms.emplace(w, std::move(c));
  return x;
}

HeckeElement HeckeAlgebra::t_inverse_gen(Gen s) const {
  const ParamPoly binv = b_of(s).inverse_monomial();
  HeckeElement x;
  x.terms.emplace(sys_->generator(s), binv);
  x.terms.emplace(Element(), -(binv * a_of(s)));
  return x;
}

void HeckeAlgebra::add_term(HeckeElement& out, const Element& w, ParamPoly c) const {
  if (c.is_zero()) return;
  auto [it, inserted] = out.terms.try_emplace(w, std::move(c));
  if (!inserted) {
    it->second += c;  // try_emplace leaves c alone when the key exists
    if (it->second.is_zero()) out.terms.erase(it);
  }
}

HeckeElement HeckeAlgebra::add(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement out = x;
  for (const auto& [w, c] : y.terms) {
    auto [it, inserted] = out.terms.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::sub(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement out = x;
  for (const auto& [w, c] : y.terms) {
    auto it = out.terms.find(w);
    if (it == out.terms.end()) {
      out.terms.emplace(w, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::scale(const HeckeElement& x, const ParamPoly& c) const {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, cw] : x.terms) {
    ParamPoly p = cw * c;
    if (!p.is_zero()) out.terms.emplace(w, std::move(p));
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_gen_left(Gen s, const HeckeElement& x) const {
  sys_->check_generator(s);
  HeckeElement out;
  for (const auto& [w, c] : x.terms) {
    const Element sw = sys_->mul_left(s, w);
    if (sw.length() > w.length()) {
      add_term(out, sw, c);
    } else {
      add_term(out, w, a_of(s) * c);
      add_term(out, sw, b_of(s) * c);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_gen_right(const HeckeElement& x, Gen s) const {
  sys_->check_generator(s);
  HeckeElement out;
  for (const auto& [w, c] : x.terms) {
    const Element ws = sys_->mul_right(w, s);
    if (ws.length() > w.length()) {
      add_term(out, ws, c);
    } else {
      add_term(out, w, c * a_of(s));
      add_term(out, ws, c * b_of(s));
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement out;
  for (const auto& [u, cu] : x.terms) {
    HeckeElement acc = scale(y, cu);
    const Word& w = u.word();
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      acc = mul_gen_left(*it, acc);
    out = add(out, acc);
  }
  return out;
}

HeckeElement HeckeAlgebra::commutator(const HeckeElement& x, const HeckeElement& y) const {
  return sub(mul(x, y), mul(y, x));
}

ParamPoly HeckeAlgebra::b_elem(const Element& w) const {
  ParamPoly r = ParamPoly::one(n_);
  for (Gen s : w.word()) r *= b_of(s);
  return r;
}

SpecializedElement specialize(const HeckeElement& x, const Specialization& sp) {
  SpecializedElement out;
  for (const auto& [w, c] : x.terms) {
    UniLaurent v = sp.apply(c);
    if (!v.is_zero()) out.terms.emplace(w, std::move(v));
  }
  return out;
}

SpecializedElement group_algebra_mul(const CoxeterSystem& sys,
                                     const SpecializedElement& x,
                                     const SpecializedElement& y) {
  SpecializedElement out;
  for (const auto& [u, cu] : x.terms) {
    for (const auto& [v, cv] : y.terms) {
      const Element uv = sys.multiply(u, v);
      auto [it, inserted] = out.terms.emplace(uv, cu * cv);
      if (!inserted) it->second += cu * cv;
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second.is_zero())
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

}  // namespace coxhecke
