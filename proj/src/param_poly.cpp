#include "coxhecke/param_poly.hpp"

#include <numeric>
#include <sstream>

namespace coxhecke {

bool ParamPoly::MonoLess::operator()(const Mono& x, const Mono& y) const {
  const long gx = std::accumulate(x.begin(), x.end(), 0L);
  const long gy = std::accumulate(y.begin(), y.end(), 0L);
  if (gx != gy) return gx < gy;
  return x < y;
}

ParamPoly::ParamPoly(int n_classes) : n_(n_classes) {
  if (n_classes < 0) throw CoxError(ErrorCode::BadConfig, "negative class count");
}

ParamPoly ParamPoly::constant(int n_classes, Int c) {
  ParamPoly p(n_classes);
  if (c != 0) p.terms_[Mono(static_cast<std::size_t>(2 * n_classes), 0)] = std::move(c);
  return p;
}

ParamPoly ParamPoly::a(int n_classes, int cls) {
  ParamPoly p(n_classes);
  if (cls < 0 || cls >= n_classes)
    throw CoxError(ErrorCode::IndexOutOfRange, "parameter class out of range");
  Mono m(static_cast<std::size_t>(2 * n_classes), 0);
  m[static_cast<std::size_t>(2 * cls)] = 1;
  p.terms_[std::move(m)] = 1;
  return p;
}

ParamPoly ParamPoly::b(int n_classes, int cls, int exp) {
  ParamPoly p(n_classes);
  if (cls < 0 || cls >= n_classes)
    throw CoxError(ErrorCode::IndexOutOfRange, "parameter class out of range");
  Mono m(static_cast<std::size_t>(2 * n_classes), 0);
  m[static_cast<std::size_t>(2 * cls + 1)] = exp;
  p.terms_[std::move(m)] = 1;
  return p;
}

bool ParamPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  if (c != 1) return false;
  for (int e : m)
    if (e != 0) return false;
  return true;
}

void ParamPoly::trim() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

void ParamPoly::check_compatible(const ParamPoly& o) const {
  if (n_ != o.n_)
    throw CoxError(ErrorCode::BadConfig, "mixing polynomials over different class counts");
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) terms_[m] -= c;
  trim();
  return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r(*this);
  r += o;
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  ParamPoly r(*this);
  r -= o;
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  check_compatible(o);
  ParamPoly r(n_);
  for (const auto& [mx, cx] : terms_) {
    for (const auto& [my, cy] : o.terms_) {
      Mono m(mx.size());
      for (std::size_t i = 0; i < mx.size(); ++i) m[i] = mx[i] + my[i];
      r.terms_[std::move(m)] += cx * cy;
    }
  }
  r.trim();
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly ParamPoly::times(const Int& c) const {
  ParamPoly r(*this);
  if (c == 0) {
    r.terms_.clear();
    return r;
  }
  for (auto& [m, cc] : r.terms_) cc *= c;
  return r;
}

ParamPoly ParamPoly::inverse_monomial() const {
  if (terms_.size() != 1)
    throw CoxError(ErrorCode::NonInvertibleB, "not a monomial: " + to_string());
  const auto& [m, c] = *terms_.begin();
  if (c != 1 && c != -1)
    throw CoxError(ErrorCode::NonInvertibleB, "coefficient not a unit: " + to_string());
  Mono inv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i % 2 == 0 && m[i] != 0)
      throw CoxError(ErrorCode::NonInvertibleB, "a factors are not invertible: " + to_string());
    inv[i] = -m[i];
  }
  ParamPoly r(n_);
  r.terms_[std::move(inv)] = c;
  return r;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      std::ostringstream f;
      f << (i % 2 == 0 ? 'a' : 'b') << i / 2;
      if (m[i] != 1) f << '^' << m[i];
      factors.push_back(f.str());
    }
    if (factors.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out << '*';
        out << factors[i];
      }
    }
  }
  return out.str();
}

UniLaurent UniLaurent::constant(Int c) {
  UniLaurent r;
  if (c != 0) r.terms_[0] = std::move(c);
  return r;
}

UniLaurent UniLaurent::q(int exp) {
  UniLaurent r;
  r.terms_[exp] = 1;
  return r;
}

bool UniLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool UniLaurent::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

void UniLaurent::trim() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

UniLaurent UniLaurent::operator-() const {
  UniLaurent r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

UniLaurent& UniLaurent::operator+=(const UniLaurent& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  trim();
  return *this;
}

UniLaurent& UniLaurent::operator-=(const UniLaurent& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  trim();
  return *this;
}

UniLaurent UniLaurent::operator+(const UniLaurent& o) const {
  UniLaurent r(*this);
  r += o;
  return r;
}

UniLaurent UniLaurent::operator-(const UniLaurent& o) const {
  UniLaurent r(*this);
  r -= o;
  return r;
}

UniLaurent UniLaurent::operator*(const UniLaurent& o) const {
  UniLaurent r;
  for (const auto& [ex, cx] : terms_)
    for (const auto& [ey, cy] : o.terms_) r.terms_[ex + ey] += cx * cy;
  r.trim();
  return r;
}

UniLaurent& UniLaurent::operator*=(const UniLaurent& o) {
  *this = *this * o;
  return *this;
}

UniLaurent UniLaurent::pow(int e) const {
  if (e < 0) throw CoxError(ErrorCode::BadConfig, "negative power of a non-unit");
  UniLaurent r = one();
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

UniLaurent UniLaurent::unit_inverse() const {
  if (!is_unit_monomial())
    throw CoxError(ErrorCode::NonInvertibleB, "specialized b is not a unit: " + to_string());
  const auto& [e, c] = *terms_.begin();
  UniLaurent r;
  r.terms_[-e] = c;
  return r;
}

std::string UniLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << 'q';
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

Specialization Specialization::group_algebra(int n_classes) {
  Specialization sp;
  sp.alpha.assign(static_cast<std::size_t>(n_classes), UniLaurent());
  sp.beta.assign(static_cast<std::size_t>(n_classes), UniLaurent::one());
  return sp;
}

Specialization Specialization::iwahori(int n_classes) {
  Specialization sp;
  sp.alpha.assign(static_cast<std::size_t>(n_classes),
                  UniLaurent::q() - UniLaurent::one());
  sp.beta.assign(static_cast<std::size_t>(n_classes), UniLaurent::q());
  return sp;
}

UniLaurent Specialization::apply(const ParamPoly& p) const {
  if (static_cast<int>(alpha.size()) != p.param_rank() ||
      static_cast<int>(beta.size()) != p.param_rank())
    throw CoxError(ErrorCode::BadConfig, "specialization rank mismatch");
  UniLaurent out;
  for (const auto& [m, c] : p.terms()) {
    UniLaurent term = UniLaurent::constant(c);
    for (std::size_t cls = 0; 2 * cls + 1 < m.size(); ++cls) {
      const int ea = m[2 * cls];
      const int eb = m[2 * cls + 1];
      if (ea > 0) term *= alpha[cls].pow(ea);
      if (eb > 0)
        term *= beta[cls].pow(eb);
      else if (eb < 0)
        term *= beta[cls].unit_inverse().pow(-eb);
    }
    out += term;
  }
  return out;
}

}  // namespace coxhecke
