#ifndef COXHECKE_CONJUGACY_HPP
#define COXHECKE_CONJUGACY_HPP

/*
  Conjugation by a standard parabolic subgroup W_J, organized around the
  shift graph: arrows w -> s w s (or delta(s) w s under a diagram twist)
  that do not increase length.  Equal-length arrows connect plateaus,
  strict arrows drop by two.

  decide_finite settles whether the W_J orbit of an element is finite and
  says why, one certificate per irreducible component of J.  The workhorse
  fact: an orbit under a non-spherical irreducible component is finite
  exactly when conjugation never changes the length, and a constant-length
  sweep always terminates because only finitely many words of each length
  exist.
*/

#include <cstdint>
#include <optional>
#include <vector>

#include "coxhecke/coxeter.hpp"

namespace coxhecke {

// A permutation of the generators preserving the Coxeter matrix.
struct Twist {
  std::vector<Gen> image;

  static Twist identity(int rank);
  static Twist from_image(const CoxeterSystem& sys, std::vector<Gen> image);

  Gen operator()(Gen s) const { return image[static_cast<std::size_t>(s)]; }
  bool is_identity() const;
  void validate(const CoxeterMatrix& m) const;
};

struct ShiftArrow {
  Element source;
  Gen generator = 0;
  Element target;

  bool operator==(const ShiftArrow& o) const = default;
};

// Non-increasing arrows out of w, by ascending generator; self-loops
// are dropped.
std::vector<ShiftArrow> shift_neighbors(const CoxeterSystem& sys, const Element& w,
                                        const GeneratorSet& J,
                                        const Twist* twist = nullptr);

enum class CertificateKind {
  SphericalComponent,
  PerpSupport,
  AffineTranslation,
  ConstantLengthClosure,
  LengthChangeWitness,
};

const char* certificate_kind_name(CertificateKind k);

struct ComponentCertificate {
  GeneratorSet component;
  SubsetType type = SubsetType::Spherical;
  CertificateKind kind = CertificateKind::SphericalComponent;
  bool finite = true;
  // When support(w) splits over the component and its perp: w = w1 w2
  // with w1 in the perp part and w2 in the component.
  std::optional<Element> perp_part;
  std::optional<Element> component_part;
  // For a length-change verdict: the arrow that left the level.
  std::optional<ShiftArrow> witness;
  std::uint64_t closure_size = 0;
};

struct ClassDecision {
  bool finite = false;
  std::vector<ComponentCertificate> certificates;
  // Only filled when finite.
  std::vector<Element> orbit;
  std::vector<Element> minimal;
  std::vector<Element> maximal;
};

ClassDecision decide_finite(const CoxeterSystem& sys, const Element& w,
                            const GeneratorSet& J,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// Elements from which w is reachable along non-increasing arrows, explored
// below a length cap.  The cap is l(w) + 2 l(w0(J)) + slack when J is
// spherical and l(w) + slack otherwise; the set is complete exactly when
// no candidate ever poked above the cap.
struct UPlusResult {
  std::vector<Element> elements;
  bool saturated = false;
  int cap = 0;
};

UPlusResult u_plus(const CoxeterSystem& sys, const Element& w, const GeneratorSet& J,
                   int slack = 2, std::uint64_t node_budget = kDefaultNodeBudget);

struct ShiftChain {
  Element result;
  std::vector<ShiftArrow> arrows;  // from the input down to result
};

// Walk plateaus looking for a strict descent until none exists; the end
// element has minimal length in its (possibly twisted) class.
ShiftChain reduce_to_min(const CoxeterSystem& sys, const Element& w,
                         const GeneratorSet& J, const Twist* twist = nullptr,
                         std::uint64_t node_budget = kDefaultNodeBudget);

// Mirror image; only meaningful when the class is finite, otherwise
// nothing is returned.
std::optional<ShiftChain> reduce_to_max(const CoxeterSystem& sys, const Element& w,
                                        const GeneratorSet& J,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

enum class StrongMode {
  LengthAdditive,     // l(xw) or l(wx^-1) equal to l(x) + l(w)
  LengthSubtractive,  // l(xw) or l(wx^-1) equal to l(w) - l(x)
};

struct StrongMove {
  Element x;
  Element from;
  Element to;
};

struct StrongConjugacy {
  bool related = false;
  std::vector<StrongMove> path;
};

// Search for a chain of length-preserving elementary conjugations by
// elements of W_J up to the cap (defaults to l(w0(J)) when J is spherical
// and 8 otherwise).  Both endpoints must have the same length.
StrongConjugacy strongly_conjugate(const CoxeterSystem& sys, const Element& from,
                                   const Element& to, const GeneratorSet& J,
                                   StrongMode mode, int search_cap = -1,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

struct PieceOrbit {
  std::vector<Element> members;  // one W_J conjugation orbit
  Element k;                     // v^-1 u' for a member u' of the piece core
  std::uint64_t twisted_class_size = 0;
  bool counting_ok = true;
};

struct DecompositionPiece {
  Element v;
  GeneratorSet K;
  std::vector<Element> members;
  std::vector<PieceOrbit> orbits;  // filled when J is spherical
};

struct DecompositionReport {
  bool complete = true;  // every element found a piece
  bool disjoint = true;  // and only one
  std::vector<DecompositionPiece> pieces;
};

// Assign each element of the universe to the piece of a minimal-for-J
// element v (no left descent in J): u belongs to v when some W_J
// conjugate u' of u has v^-1 u' inside W_{K_v}, K_v being the largest
// subset of J normalized by v.  For spherical J the conjugate search is
// exhaustive; otherwise it stops above a length ceiling and an element
// whose only matches lie beyond it is reported as uncovered.
DecompositionReport partial_decomposition(const CoxeterSystem& sys,
                                          const GeneratorSet& J,
                                          const std::vector<Element>& universe,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace coxhecke

#endif
