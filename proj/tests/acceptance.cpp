// Acceptance suite.  Each criterion prints exactly one PASS or FAIL
// line; the process exits nonzero if any fail.  The checks lean on
// independent witnesses where possible: permutation oracles for finite
// groups, brute-force closures for finiteness, and hand-computed
// values for the worked examples.

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxhecke/centralizer.hpp"
#include "coxhecke/class_poly.hpp"
#include "coxhecke/conjugacy.hpp"
#include "coxhecke/coxeter.hpp"
#include "coxhecke/hecke.hpp"
#include "coxhecke/param_poly.hpp"
#include "oracles.hpp"

using namespace coxhecke;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

CoxeterMatrix dihedral_matrix(int m) {
  CoxeterMatrix mat(2);
  mat.set_order(0, 1, m);
  return mat;
}

CoxeterMatrix path_matrix(int rank, int label = 3) {
  CoxeterMatrix m(rank);
  for (Gen i = 0; i + 1 < rank; ++i) m.set_order(i, i + 1, label);
  return m;
}

// Two infinite edges over one triangle vertex pair of order three.
CoxeterMatrix loose_triangle_matrix() {
  CoxeterMatrix m(3);
  m.set_order(0, 1, 3);
  m.set_order(0, 2, 0);
  m.set_order(1, 2, 0);
  return m;
}

std::vector<CoxeterMatrix> sweep_matrices() {
  return {path_matrix(2), dihedral_matrix(4), path_matrix(3),
          dihedral_matrix(0), loose_triangle_matrix()};
}

std::vector<GeneratorSet> irreducible_subsets(const CoxeterSystem& sys) {
  std::vector<GeneratorSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << sys.rank()); ++mask) {
    std::vector<Gen> gens;
    for (Gen s = 0; s < sys.rank(); ++s)
      if (mask & (1ull << s)) gens.push_back(s);
    GeneratorSet J(std::move(gens));
    if (sys.is_irreducible(J)) out.push_back(std::move(J));
  }
  return out;
}

// Conjugation closure by generators of J.  The closure is a subset of
// the full conjugation orbit, so when the cap is hit every collected
// element sits in an infinite orbit.
struct BruteClosure {
  bool finite = false;
  std::set<Element> seen;
};

BruteClosure brute_force_closure(const CoxeterSystem& sys, const Element& w,
                                 const GeneratorSet& J, std::size_t cap) {
  BruteClosure out;
  out.seen.insert(w);
  std::vector<Element> frontier{w};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& u : frontier) {
      for (Gen s : J) {
        Element v = sys.conjugate_gen(s, u);
        if (out.seen.insert(v).second) {
          if (out.seen.size() > cap) return out;
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  out.finite = true;
  return out;
}

// Every finite orbit met by the length-6 sweep, one entry per orbit.
struct SweepOrbit {
  GeneratorSet J;
  ClassDecision decision;
};

std::vector<SweepOrbit> finite_sweep_orbits(const CoxeterSystem& sys) {
  std::vector<SweepOrbit> out;
  for (const GeneratorSet& J : irreducible_subsets(sys)) {
    std::set<Element> seen;
    for (const Element& w : sys.ball(6)) {
      if (seen.count(w)) continue;
      ClassDecision dec = decide_finite(sys, w, J);
      if (!dec.finite) continue;
      seen.insert(dec.orbit.begin(), dec.orbit.end());
      out.push_back({J, std::move(dec)});
    }
  }
  return out;
}

int oracle_class_count(const oracle::PermGroup& pg) {
  const int order = static_cast<int>(pg.order());
  std::set<int> assigned;
  int classes = 0;
  for (int x = 0; x < order; ++x) {
    if (assigned.count(x)) continue;
    ++classes;
    for (int g = 0; g < order; ++g)
      assigned.insert(pg.mult(pg.mult(g, x), pg.inverse(g)));
  }
  return classes;
}

void words_agree_with_oracles() {
  struct Pairing {
    CoxeterMatrix m;
    oracle::PermGroup pg;
  };
  const std::vector<Pairing> pairings = {
      {path_matrix(2), oracle::symmetric_group(3)},
      {dihedral_matrix(4), oracle::dihedral(4)},
      {path_matrix(3), oracle::symmetric_group(4)},
  };
  for (const Pairing& pairing : pairings) {
    const CoxeterSystem sys(pairing.m);
    const oracle::PermGroup& pg = pairing.pg;
    const int order = static_cast<int>(pg.order());
    std::vector<int> gen_idx;
    for (Gen s = 0; s < sys.rank(); ++s) gen_idx.push_back(pg.eval({s}));

    std::vector<Element> el;
    for (int i = 0; i < order; ++i) {
      el.push_back(sys.normalize(pg.words[static_cast<std::size_t>(i)]));
      require(el.back().word() == pg.words[static_cast<std::size_t>(i)],
              "canonical word differs from the oracle word");
      require(el.back().length() == pg.length(i), "length mismatch");
      for (Gen s = 0; s < sys.rank(); ++s) {
        const bool oracle_left =
            pg.length(pg.mult(gen_idx[static_cast<std::size_t>(s)], i)) < pg.length(i);
        const bool oracle_right =
            pg.length(pg.mult(i, gen_idx[static_cast<std::size_t>(s)])) < pg.length(i);
        require(sys.descents(el.back(), Side::Left).contains(s) == oracle_left,
                "left descent mismatch");
        require(sys.descents(el.back(), Side::Right).contains(s) == oracle_right,
                "right descent mismatch");
      }
    }
    for (int i = 0; i < order; ++i) {
      require(sys.inverse(el[static_cast<std::size_t>(i)]) ==
                  el[static_cast<std::size_t>(pg.inverse(i))],
              "inverse mismatch");
      for (int j = 0; j < order; ++j)
        require(sys.multiply(el[static_cast<std::size_t>(i)],
                             el[static_cast<std::size_t>(j)]) ==
                    el[static_cast<std::size_t>(pg.mult(i, j))],
                "product mismatch");
    }
  }
}

void verdicts_agree_with_brute_force() {
  for (const CoxeterMatrix& m : sweep_matrices()) {
    const CoxeterSystem sys(m);
    for (const GeneratorSet& J : irreducible_subsets(sys)) {
      std::map<Element, bool> brute_verdict;
      for (const Element& w : sys.ball(6)) {
        if (!brute_verdict.count(w)) {
          const BruteClosure closure = brute_force_closure(sys, w, J, 1000);
          for (const Element& u : closure.seen)
            if (u.length() <= 6) brute_verdict[u] = closure.finite;
        }
        require(decide_finite(sys, w, J).finite == brute_verdict.at(w),
                "verdict disagrees with brute-force closure");
      }
    }
  }

  // In the doubly infinite dihedral group the finite classes met by the
  // sweep are the identity and the paired powers of the rotation.
  const CoxeterSystem sys(dihedral_matrix(0));
  const GeneratorSet full{0, 1};
  std::set<Element> got;
  for (const Element& w : sys.ball(6))
    if (decide_finite(sys, w, full).finite) got.insert(w);
  std::set<Element> expected{sys.identity()};
  for (const Word& w : std::vector<Word>{{0, 1}, {1, 0}, {0, 1, 0, 1},
                                         {1, 0, 1, 0}, {0, 1, 0, 1, 0, 1},
                                         {1, 0, 1, 0, 1, 0}})
    expected.insert(sys.normalize(w));
  require(got == expected, "finite classes are not the rotation pairs");
}

void verdicts_agree_with_up_sets() {
  for (const CoxeterMatrix& m : sweep_matrices()) {
    const CoxeterSystem sys(m);
    for (const GeneratorSet& J : irreducible_subsets(sys))
      for (const Element& w : sys.ball(6)) {
        const bool finite = decide_finite(sys, w, J).finite;
        const UPlusResult up = u_plus(sys, w, J);
        require(finite == up.saturated,
                "finiteness disagrees with up-set saturation");
      }
  }
}

void finite_orbits_climb_to_connected_tops() {
  for (const CoxeterMatrix& m : sweep_matrices()) {
    const CoxeterSystem sys(m);
    for (const GeneratorSet& J : irreducible_subsets(sys)) {
      std::set<Element> seen;
      for (const Element& w : sys.ball(6)) {
        const ClassDecision dec = decide_finite(sys, w, J);
        if (!dec.finite) {
          require(!reduce_to_max(sys, w, J).has_value(),
                  "an infinite class produced a top element");
          continue;
        }
        if (seen.count(w)) continue;
        seen.insert(dec.orbit.begin(), dec.orbit.end());
        for (const Element& u : dec.orbit) {
          const auto chain = reduce_to_max(sys, u, J);
          require(chain.has_value(), "a finite class member failed to climb");
          require(std::binary_search(dec.maximal.begin(), dec.maximal.end(),
                                     chain->result),
                  "climbing ended below the top layer");
        }
        for (std::size_t i = 0; i + 1 < dec.maximal.size(); ++i)
          require(strongly_conjugate(sys, dec.maximal[i], dec.maximal[i + 1], J,
                                     StrongMode::LengthSubtractive)
                      .related,
                  "top layer is not connected");
      }
    }
  }
}

void tables_build_without_route_conflicts() {
  for (const CoxeterMatrix& m : sweep_matrices()) {
    const CoxeterSystem sys(m);
    for (const SweepOrbit& orbit : finite_sweep_orbits(sys)) {
      const ClassPolyTable table = class_poly_max(sys, orbit.J, orbit.decision);
      require(table.rep == orbit.decision.maximal.front(),
              "table anchored off the canonical representative");
    }
  }
}

void built_elements_pass_both_checks() {
  for (const CoxeterMatrix& m : sweep_matrices()) {
    const CoxeterSystem sys(m);
    for (const SweepOrbit& orbit : finite_sweep_orbits(sys)) {
      const CentralizerBasisElement zb = build_z(sys, orbit.J, orbit.decision);
      require(check_membership_coeffs(sys, orbit.J, zb.z).pass,
              "coefficient criterion failed");
      require(check_commutation(sys, orbit.J, zb.z).pass,
              "commutator criterion failed");
    }
  }

  // Worked example: conjugating the reflection class of t by {s} in the
  // order-three dihedral group.
  const CoxeterSystem sys(path_matrix(2));
  const HeckeAlgebra alg(sys);
  const GeneratorSet J{0};
  const CentralizerBasisElement zb =
      build_z(sys, J, decide_finite(sys, sys.normalize({1}), J));
  HeckeElement expected;
  expected.terms.emplace(sys.normalize({1}), ParamPoly::b(1, 0, -2));
  expected.terms.emplace(sys.normalize({0, 1, 0}), ParamPoly::b(1, 0, -3));
  require(zb.z == expected, "hand-computed element differs");
  require(alg.commutator(alg.t_basis(sys.generator(0)), zb.z).is_zero(),
          "hand-computed element fails to commute");
}

void basis_sizes_equal_class_counts() {
  struct Case {
    CoxeterMatrix m;
    GeneratorSet J;
    int cap;
    int expected;
  };
  const std::vector<Case> cases = {
      {path_matrix(2), GeneratorSet{0, 1}, 3, oracle_class_count(oracle::symmetric_group(3))},
      {dihedral_matrix(4), GeneratorSet{0, 1}, 4, oracle_class_count(oracle::dihedral(4))},
      {path_matrix(3), GeneratorSet{0, 1, 2}, 6, oracle_class_count(oracle::symmetric_group(4))},
      {path_matrix(2), GeneratorSet{0}, 3, 4},
  };
  require(cases[0].expected == 3, "oracle class count for the order-three group");
  require(cases[1].expected == 5, "oracle class count for the order-four group");
  require(cases[2].expected == 5, "oracle class count for the rank-three group");
  for (const Case& c : cases) {
    const CoxeterSystem sys(c.m);
    const BasisEnumeration e = enumerate_basis(sys, c.J, c.cap);
    require(e.complete, "enumeration unexpectedly incomplete");
    require(static_cast<int>(e.basis.size()) == c.expected,
            "basis size differs from the class count");
  }
}

void pieces_cover_disjointly_with_exact_counts() {
  struct Setup {
    CoxeterMatrix m;
    int radius;
  };
  const std::vector<Setup> setups = {
      {path_matrix(2), 3}, {dihedral_matrix(4), 4}, {path_matrix(3), 6},
      {dihedral_matrix(0), 6},
  };
  for (const Setup& setup : setups) {
    const CoxeterSystem sys(setup.m);
    const std::vector<Element> universe = sys.ball(setup.radius);
    for (std::uint64_t mask = 1; mask < (1ull << sys.rank()); ++mask) {
      std::vector<Gen> gens;
      for (Gen s = 0; s < sys.rank(); ++s)
        if (mask & (1ull << s)) gens.push_back(s);
      const GeneratorSet J(std::move(gens));
      const DecompositionReport rep = partial_decomposition(sys, J, universe);
      require(rep.complete, "an element found no piece");
      require(rep.disjoint, "an element found two pieces");
      std::size_t covered = 0;
      for (const DecompositionPiece& piece : rep.pieces) {
        covered += piece.members.size();
        for (const PieceOrbit& orbit : piece.orbits)
          require(orbit.counting_ok, "cardinality identity failed");
      }
      require(covered == universe.size(), "pieces do not add up to the ball");
    }
  }
}

void letter_weights_constant_over_reduced_words() {
  for (const CoxeterMatrix& m : sweep_matrices()) {
    const CoxeterSystem sys(m);
    const HeckeAlgebra alg(sys);
    const int n = sys.generator_class_count();
    for (const Element& w : sys.ball(7)) {
      const std::vector<Word> words = sys.reduced_words(w);
      require(!words.empty(), "an element with no reduced word");
      std::vector<int> ref;
      for (const Word& word : words) {
        std::vector<int> counts(static_cast<std::size_t>(n), 0);
        for (Gen s : word)
          ++counts[static_cast<std::size_t>(sys.generator_class(s))];
        if (ref.empty()) ref = counts;
        require(counts == ref, "letter weights differ between reduced words");
      }
      ParamPoly expected = ParamPoly::one(n);
      for (int cls = 0; cls < n; ++cls)
        if (ref[static_cast<std::size_t>(cls)] > 0)
          expected *= ParamPoly::b(n, cls, ref[static_cast<std::size_t>(cls)]);
      require(alg.b_elem(w) == expected, "algebra weight differs from letters");
    }
  }
}

void specializations_behave() {
  for (const CoxeterMatrix& m : sweep_matrices()) {
    const CoxeterSystem sys(m);
    const HeckeAlgebra alg(sys);
    const int n = sys.generator_class_count();
    const Specialization zero_one = Specialization::group_algebra(n);
    const Specialization deformed = Specialization::iwahori(n);

    // The quadratic relation lands on the deformed form.
    for (Gen s = 0; s < sys.rank(); ++s) {
      require(deformed.apply(alg.a_of(s)) == UniLaurent::q() - UniLaurent::one(),
              "a parameter misses q - 1");
      require(deformed.apply(alg.b_of(s)) == UniLaurent::q(),
              "b parameter misses q");
      const HeckeElement square =
          alg.mul(alg.t_basis(sys.generator(s)), alg.t_basis(sys.generator(s)));
      SpecializedElement expected;
      expected.terms.emplace(sys.generator(s),
                             UniLaurent::q() - UniLaurent::one());
      expected.terms.emplace(sys.identity(), UniLaurent::q());
      require(specialize(square, deformed) == expected,
              "squared generator misses the deformed relation");
    }

    for (const SweepOrbit& orbit : finite_sweep_orbits(sys)) {
      const CentralizerBasisElement zb = build_z(sys, orbit.J, orbit.decision);
      const SpecializedElement zs = specialize(zb.z, zero_one);
      require(zs.terms.size() == orbit.decision.orbit.size(),
              "specialized support differs from the orbit");
      for (const Element& u : orbit.decision.orbit) {
        const UniLaurent* c = zs.coeff(sys.inverse(u));
        require(c != nullptr && *c == UniLaurent::one(),
                "specialized value differs from the indicator");
      }
      for (const Element& x : sys.subgroup_ball(orbit.J, 4)) {
        SpecializedElement tx, txi;
        tx.terms.emplace(x, UniLaurent::one());
        txi.terms.emplace(sys.inverse(x), UniLaurent::one());
        require(group_algebra_mul(sys, group_algebra_mul(sys, tx, zs), txi) == zs,
                "specialized element moves under conjugation");
      }
    }
  }
}

struct Criterion {
  const char* label;
  void (*body)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"word operations agree with the permutation oracles", words_agree_with_oracles},
      {"orbit finiteness verdicts agree with brute-force closure", verdicts_agree_with_brute_force},
      {"finiteness verdicts agree with up-set saturation", verdicts_agree_with_up_sets},
      {"finite orbits climb to a connected top layer", finite_orbits_climb_to_connected_tops},
      {"polynomial tables build without route conflicts", tables_build_without_route_conflicts},
      {"centralizer elements pass both verification criteria", built_elements_pass_both_checks},
      {"basis sizes equal the oracle class counts", basis_sizes_equal_class_counts},
      {"conjugation pieces cover the group disjointly with exact counts", pieces_cover_disjointly_with_exact_counts},
      {"letter weights are constant across all reduced words", letter_weights_constant_over_reduced_words},
      {"group-algebra and deformed specializations behave", specializations_behave},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string verdict = "PASS";
    std::string note;
    try {
      criteria[i].body();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      note = std::string(" (") + e.what() + ")";
      all = false;
    }
    std::printf("%s %2zu  %s%s\n", verdict.c_str(), i + 1, criteria[i].label,
                note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
