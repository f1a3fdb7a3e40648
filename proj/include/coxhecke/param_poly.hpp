#ifndef COXHECKE_PARAM_POLY_HPP
#define COXHECKE_PARAM_POLY_HPP

/*
  Coefficient rings.  ParamPoly is the ring Z[a_c, b_c, b_c^-1] with one
  parameter pair per generator conjugacy class; exponents of the a
  variables never go negative.  UniLaurent is Z[q, q^-1], the target of
  specializations.
*/

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxhecke/coxeter.hpp"

namespace coxhecke {

using Int = boost::multiprecision::cpp_int;

class ParamPoly {
public:
  // Flat exponent layout per class c: slot 2c holds the a_c exponent,
  // slot 2c+1 the b_c exponent.
  using Mono = std::vector<int>;

  struct MonoLess {
    bool operator()(const Mono& x, const Mono& y) const;
  };
  using TermMap = std::map<Mono, Int, MonoLess>;

  explicit ParamPoly(int n_classes);
  static ParamPoly constant(int n_classes, Int c);
  static ParamPoly one(int n_classes) { return constant(n_classes, 1); }
  static ParamPoly a(int n_classes, int cls);
  static ParamPoly b(int n_classes, int cls, int exp = 1);

  int param_rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const TermMap& terms() const { return terms_; }

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly times(const Int& c) const;

  // Inverse of a one-term unit: coefficient +-1, no a factors.
  ParamPoly inverse_monomial() const;

  bool operator==(const ParamPoly& o) const = default;

  std::string to_string() const;

private:
  void trim();
  void check_compatible(const ParamPoly& o) const;

  int n_ = 0;
  TermMap terms_;
};

class UniLaurent {
public:
  UniLaurent() = default;  // zero
  static UniLaurent constant(Int c);
  static UniLaurent one() { return constant(1); }
  static UniLaurent q(int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // +-q^k
  bool is_unit_monomial() const;
  const std::map<int, Int>& terms() const { return terms_; }

  UniLaurent operator-() const;
  UniLaurent operator+(const UniLaurent& o) const;
  UniLaurent operator-(const UniLaurent& o) const;
  UniLaurent operator*(const UniLaurent& o) const;
  UniLaurent& operator+=(const UniLaurent& o);
  UniLaurent& operator-=(const UniLaurent& o);
  UniLaurent& operator*=(const UniLaurent& o);

  UniLaurent pow(int e) const;            // e >= 0
  UniLaurent unit_inverse() const;        // requires a unit monomial

  bool operator==(const UniLaurent& o) const = default;

  std::string to_string() const;

private:
  void trim();

  std::map<int, Int> terms_;
};

// Values (alpha_c, beta_c) substituted for (a_c, b_c); every beta must
// be a unit so that negative b exponents land in the ring.
struct Specialization {
  std::vector<UniLaurent> alpha;
  std::vector<UniLaurent> beta;

  // a = 0, b = 1: the group algebra Z[W].
  static Specialization group_algebra(int n_classes);
  // a = q - 1, b = q.
  static Specialization iwahori(int n_classes);

  UniLaurent apply(const ParamPoly& p) const;
};

}  // namespace coxhecke

#endif
