#include "coxhecke/centralizer.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <utility>
#include <vector>

namespace coxhecke {

CentralizerBasisElement build_z(const CoxeterSystem& sys,
                                const GeneratorSet& J,
                                const ClassDecision& orbit,
                                std::uint64_t node_budget) {
  ClassPolyTable table = class_poly_max(sys, J, orbit, node_budget);
  HeckeAlgebra alg(sys);
  HeckeElement z;
  for (const auto& [w, poly] : table.f)
    z.terms.emplace(sys.inverse(w), alg.b_elem(w).inverse_monomial() * poly);
  return {table.rep, std::move(z), std::move(table)};
}

MembershipReport check_membership_coeffs(const CoxeterSystem& sys,
                                         const GeneratorSet& J,
                                         const HeckeElement& h) {
  sys.check_subset(J);
  HeckeAlgebra alg(sys);
  const int n = alg.n_classes();
  auto coeff = [&](const Element& w) {
    const ParamPoly* p = h.coeff(w);
    return p ? *p : ParamPoly(n);
  };

  // Anchors of every equation that touches the support: the support
  // itself, one conjugation step out, and one left letter out.
  std::set<Element> anchors;
  for (const auto& [w, poly] : h.terms) {
    anchors.insert(w);
    for (Gen s : J) {
      anchors.insert(sys.conjugate_gen(s, w));
      anchors.insert(sys.mul_left(s, w));
    }
  }

  MembershipReport out;
  for (const Element& w : anchors) {
    for (Gen s : J) {
      Element sws = sys.conjugate_gen(s, w);
      if (sws.length() == w.length() && w < sws) {
        if (coeff(w) != coeff(sws))
          out.violations.push_back({CoeffCondition::EqualLengthEdge, w, s});
      } else if (sws.length() == w.length() - 2) {
        ParamPoly expect = alg.b_of(s) * coeff(w) -
                           alg.a_of(s) * coeff(sys.mul_left(s, w));
        if (coeff(sws) != expect)
          out.violations.push_back({CoeffCondition::StrictArrow, w, s});
      }
    }
  }
  out.pass = out.violations.empty();
  return out;
}

CommutationReport check_commutation(const CoxeterSystem& sys,
                                    const GeneratorSet& J,
                                    const HeckeElement& h) {
  sys.check_subset(J);
  HeckeAlgebra alg(sys);
  for (Gen s : J) {
    if (!alg.commutator(alg.t_basis(sys.generator(s)), h).is_zero())
      return {false, s};
  }
  return {true, std::nullopt};
}

BasisEnumeration enumerate_basis(const CoxeterSystem& sys,
                                 const GeneratorSet& J, int length_cap,
                                 int threads,
                                 std::uint64_t node_budget) {
  sys.check_subset(J);
  if (!sys.is_irreducible(J))
    throw CoxError(ErrorCode::NotIrreducible,
                   "basis enumeration needs an irreducible subset");

  std::vector<ClassDecision> classes;
  std::set<Element> claimed;
  for (const Element& w : sys.ball(length_cap, node_budget)) {
    if (claimed.contains(w)) continue;
    ClassDecision dec = decide_finite(sys, w, J, node_budget);
    if (!dec.finite) {
      claimed.insert(w);
      continue;
    }
    for (const Element& u : dec.orbit) claimed.insert(u);
    classes.push_back(std::move(dec));
  }

  BasisEnumeration out;
  out.length_cap = length_cap;
  const GeneratorSet full = GeneratorSet::full(sys.rank());
  out.complete = sys.is_spherical(full) &&
                 length_cap >= sys.longest_element(full).length();

  out.basis.resize(classes.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      out.basis[i] = build_z(sys, J, classes[i], node_budget);
  } else {
    for (std::size_t base = 0; base < classes.size();
         base += static_cast<std::size_t>(threads)) {
      const std::size_t stop = std::min(
          classes.size(), base + static_cast<std::size_t>(threads));
      std::vector<std::future<CentralizerBasisElement>> wave;
      for (std::size_t i = base; i < stop; ++i)
        wave.push_back(std::async(std::launch::async, [&, i] {
          return build_z(sys, J, classes[i], node_budget);
        }));
      for (std::size_t i = base; i < stop; ++i)
        out.basis[i] = wave[i - base].get();
    }
  }

  // Orbits are disjoint by construction, so the top-length supports of
  // the emitted elements cannot collide; a collision is a bug.
  std::set<Element> reps;
  for (const CentralizerBasisElement& b : out.basis)
    if (!reps.insert(b.rep).second)
      throw CoxError(ErrorCode::InconsistentRecursion,
                     "duplicate orbit representative in basis scan");
  return out;
}

}  // namespace coxhecke
