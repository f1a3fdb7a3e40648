#ifndef COXHECKE_CENTRALIZER_HPP
#define COXHECKE_CENTRALIZER_HPP

/*
  Elements commuting with a parabolic subalgebra.  Each finite
  W_J-orbit O contributes one basis element

      z_O = sum over w of  b_w^-1 f_w T_{w^-1}

  built from the max-variant class polynomial table of O.  Membership
  of an arbitrary element in the centralizer is decided two independent
  ways: by the coefficient criterion (coefficients constant along
  equal-length conjugation edges and compatible across arrows that drop
  the length by two) and by direct commutators against the T_s, s in J.
  The criteria agree; the test suite exercises both directions.
*/

#include <cstdint>
#include <optional>
#include <vector>

#include "coxhecke/class_poly.hpp"
#include "coxhecke/conjugacy.hpp"
#include "coxhecke/coxeter.hpp"
#include "coxhecke/hecke.hpp"

namespace coxhecke {

struct CentralizerBasisElement {
  // ShortLex-least element of maximal length in the orbit.
  Element rep;
  HeckeElement z;
  ClassPolyTable table;
};

// Assembles z_O from the class polynomial table of the orbit.  Throws
// NotIrreducible for reducible J and NotFinite for an infinite orbit.
CentralizerBasisElement build_z(const CoxeterSystem& sys,
                                const GeneratorSet& J,
                                const ClassDecision& orbit,
                                std::uint64_t node_budget = kDefaultNodeBudget);

enum class CoeffCondition {
  EqualLengthEdge,  // x_w == x_{sws} when lengths agree
  StrictArrow,      // x_{sws} == b_s x_w - a_s x_{sw} when l drops by 2
};

struct CoeffViolation {
  CoeffCondition condition = CoeffCondition::EqualLengthEdge;
  // The equation is anchored at w and conjugates by s; for a strict
  // arrow w is the longer endpoint.
  Element w;
  Gen s = 0;
};

struct MembershipReport {
  bool pass = false;
  std::vector<CoeffViolation> violations;
};

// Coefficient criterion over the support of h together with every
// element one conjugation or one left letter away; coefficients off
// that closure are zero and the equations hold there trivially.
MembershipReport check_membership_coeffs(const CoxeterSystem& sys,
                                         const GeneratorSet& J,
                                         const HeckeElement& h);

struct CommutationReport {
  bool pass = false;
  std::optional<Gen> witness;  // generator with [T_s, h] != 0
};

// Exact commutators against every generator of J.
CommutationReport check_commutation(const CoxeterSystem& sys,
                                    const GeneratorSet& J,
                                    const HeckeElement& h);

struct BasisEnumeration {
  std::vector<CentralizerBasisElement> basis;
  int length_cap = 0;
  // True when the scan provably saw every orbit: the whole group is
  // finite and the cap reaches its longest element.  Otherwise orbits
  // seeded beyond the cap may be missing.
  bool complete = false;
};

// Scans the length ball for finite W_J-orbits, deduplicates, and
// builds one z per orbit, in ShortLex order of the seeds.  threads > 1
// builds the tables in parallel waves; the output order is the same.
BasisEnumeration enumerate_basis(const CoxeterSystem& sys,
                                 const GeneratorSet& J, int length_cap,
                                 int threads = 1,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace coxhecke

#endif
