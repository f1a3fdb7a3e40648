#include "coxhecke/class_poly.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "coxhecke/hecke.hpp"

namespace coxhecke {
namespace {

using Row = std::map<Element, ParamPoly>;

void add_scaled(Row& dst, const Row& src, const ParamPoly& c) {
  for (const auto& [rep, poly] : src) {
    ParamPoly add = poly * c;
    if (add.is_zero()) continue;
    auto [it, fresh] = dst.try_emplace(rep, add);
    if (!fresh) {
      it->second += add;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

// Memoized walk along cyclic-shift chains down to minimal elements.
class MinSolver {
public:
  MinSolver(const CoxeterSystem& sys, std::uint64_t budget)
      : sys_(sys), alg_(sys), full_(GeneratorSet::full(sys.rank())),
        budget_(budget) {}

  const Row& row(const Element& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;

    ShiftChain chain = reduce_to_min(sys_, w, full_, nullptr, budget_);
    if (chain.arrows.empty()) {
      // w has minimal length in its class: a unit row at the class key.
      Row unit;
      unit.emplace(class_key(w), ParamPoly::one(alg_.n_classes()));
      return memo_.emplace(w, std::move(unit)).first->second;
    }

    Row cur = row(chain.result);
    for (auto a = chain.arrows.rbegin(); a != chain.arrows.rend(); ++a) {
      if (a->source.length() != a->target.length()) {
        // source = s * target * s two letters up; the side term walks
        // into a strictly shorter element, so the recursion grounds.
        Row lifted;
        add_scaled(lifted, cur, alg_.b_of(a->generator));
        add_scaled(lifted, row(sys_.mul_left(a->generator, a->source)),
                   alg_.a_of(a->generator));
        cur = std::move(lifted);
      }
      memo_.insert_or_assign(a->source, cur);
    }
    return memo_.find(w)->second;
  }

private:
  Element class_key(const Element& w) {
    ClassDecision dec = decide_finite(sys_, w, full_, budget_);
    return dec.minimal.front();
  }

  const CoxeterSystem& sys_;
  HeckeAlgebra alg_;
  GeneratorSet full_;
  std::uint64_t budget_;
  std::map<Element, Row> memo_;
};

class BudgetCounter {
public:
  explicit BudgetCounter(std::uint64_t budget) : budget_(budget) {}
  void bump(const char* where) {
    if (++used_ > budget_)
      throw CoxError(ErrorCode::ResourceLimit, where);
  }

private:
  std::uint64_t used_ = 0;
  std::uint64_t budget_;
};

// Full double coset W_J rep W_J; finite because J is spherical.
std::set<Element> double_coset(const CoxeterSystem& sys, const GeneratorSet& J,
                               const Element& rep, BudgetCounter& counter) {
  std::set<Element> out{rep};
  std::deque<Element> queue{rep};
  while (!queue.empty()) {
    Element u = queue.front();
    queue.pop_front();
    for (Gen s : J) {
      for (Element v : {sys.mul_left(s, u), sys.mul_right(u, s)}) {
        if (out.insert(v).second) {
          counter.bump("class polynomial double coset");
          queue.push_back(std::move(v));
        }
      }
    }
  }
  return out;
}

// Downward closure of the orbit under the moves the solve can reach:
// equal-length conjugation, conjugation dropping the length by two,
// and a left letter that drops it by one.  Everything with a nonzero
// value lives here, so lookups outside the set read as zero.
std::set<Element> flow_closure(const CoxeterSystem& sys, const GeneratorSet& J,
                               const std::vector<Element>& orbit,
                               BudgetCounter& counter) {
  std::set<Element> out(orbit.begin(), orbit.end());
  std::deque<Element> queue(orbit.begin(), orbit.end());
  while (!queue.empty()) {
    Element u = queue.front();
    queue.pop_front();
    std::vector<Element> next;
    for (Gen s : J) {
      Element conj = sys.conjugate_gen(s, u);
      if (conj.length() <= u.length()) next.push_back(std::move(conj));
      Element left = sys.mul_left(s, u);
      if (left.length() < u.length()) next.push_back(std::move(left));
    }
    for (Element& v : next) {
      if (out.insert(v).second) {
        counter.bump("class polynomial flow closure");
        queue.push_back(std::move(v));
      }
    }
  }
  return out;
}

}  // namespace

std::map<Element, ParamPoly> class_poly_min(const CoxeterSystem& sys,
                                            const Element& w,
                                            std::uint64_t node_budget) {
  if (!sys.is_spherical(GeneratorSet::full(sys.rank())))
    throw CoxError(ErrorCode::NotFinite,
                   "class_poly_min needs a finite group");
  MinSolver solver(sys, node_budget);
  return solver.row(w);
}

ClassPolyTable class_poly_max(const CoxeterSystem& sys, const GeneratorSet& J,
                              const ClassDecision& orbit,
                              std::uint64_t node_budget) {
  sys.check_subset(J);
  if (!sys.is_irreducible(J))
    throw CoxError(ErrorCode::NotIrreducible,
                   "class polynomial tables need an irreducible subset");
  if (!orbit.finite || orbit.orbit.empty())
    throw CoxError(ErrorCode::NotFinite,
                   "class polynomial tables need a finite orbit");
  for (const Element& u : orbit.orbit)
    for (Gen s : J)
      if (!std::binary_search(orbit.orbit.begin(), orbit.orbit.end(),
                              sys.conjugate_gen(s, u)))
        throw CoxError(ErrorCode::BadConfig,
                       "orbit data does not match the conjugating set");

  HeckeAlgebra alg(sys);
  const int n = alg.n_classes();
  BudgetCounter counter(node_budget);

  ClassPolyTable table;
  table.J = J;
  table.param_rank = n;
  table.rep = orbit.maximal.front();

  const std::set<Element> domain =
      sys.is_spherical(J) ? double_coset(sys, J, table.rep, counter)
                          : flow_closure(sys, J, orbit.orbit, counter);

  std::map<Element, ParamPoly> val;
  auto value_of = [&](const Element& u) {
    auto it = val.find(u);
    return it == val.end() ? ParamPoly(n) : it->second;
  };
  auto in_orbit = [&](const Element& u) {
    return std::binary_search(orbit.orbit.begin(), orbit.orbit.end(), u);
  };

  std::map<int, std::vector<Element>, std::greater<int>> levels;
  for (const Element& u : domain) levels[u.length()].push_back(u);

  for (auto& [len, elems] : levels) {
    std::set<Element> pending(elems.begin(), elems.end());
    while (!pending.empty()) {
      // Plateau component: connected by equal-length conjugations.
      std::vector<Element> comp;
      std::deque<Element> queue{*pending.begin()};
      pending.erase(pending.begin());
      while (!queue.empty()) {
        Element u = queue.front();
        queue.pop_front();
        comp.push_back(u);
        for (Gen s : J) {
          Element v = sys.conjugate_gen(s, u);
          if (v.length() != len || v == u) continue;
          auto it = pending.find(v);
          if (it != pending.end()) {
            pending.erase(it);
            queue.push_back(std::move(v));
          }
        }
      }
      std::sort(comp.begin(), comp.end());

      std::vector<std::pair<Element, Gen>> ascents;
      std::set<Element> can_ascend;
      for (const Element& u : comp) {
        for (Gen s : J) {
          if (sys.conjugate_gen(s, u).length() == len + 2) {
            ascents.emplace_back(u, s);
            can_ascend.insert(u);
            break;
          }
        }
      }

      if (ascents.empty()) {
        // No way up anywhere in the plateau: these are the elements of
        // maximal length in their own orbit, the anchors of the solve.
        for (const Element& u : comp)
          val.emplace(u, in_orbit(u) ? ParamPoly::one(n) : ParamPoly(n));
      } else {
        for (const auto& [u, s] : ascents) {
          ParamPoly rhs = value_of(sys.conjugate_gen(s, u)) -
                          alg.a_of(s) * value_of(sys.mul_left(s, u));
          val.emplace(u, alg.b_of(s).inverse_monomial() * rhs);
        }
        const ParamPoly& model = val.find(ascents.front().first)->second;
        for (const Element& u : comp)
          if (!can_ascend.contains(u)) val.emplace(u, model);
      }
    }
  }

  // Every admissible route has to agree with the stored values,
  // including arrows that poke above the solved region, whose upper
  // endpoint reads as zero.
  for (const Element& u : domain) {
    const ParamPoly fu = value_of(u);
    for (Gen s : J) {
      Element v = sys.conjugate_gen(s, u);
      if (v == u) continue;
      if (v.length() == u.length()) {
        if (value_of(v) != fu)
          throw CoxError(ErrorCode::InconsistentRecursion,
                         "equal-length conjugates disagree");
      } else if (v.length() == u.length() + 2) {
        ParamPoly expect =
            alg.b_of(s) * fu + alg.a_of(s) * value_of(sys.mul_left(s, u));
        if (value_of(v) != expect)
          throw CoxError(ErrorCode::InconsistentRecursion,
                         "ascent routes disagree");
      }
    }
  }
  if (sys.is_spherical(J)) {
    // Strong pairs: conjugation by x in W_J that meets the length drop
    // condition on one side preserves the value.
    const int cap = sys.longest_element(J).length();
    for (const Element& x : sys.subgroup_ball(J, cap, node_budget)) {
      if (x.is_identity()) continue;
      const Element xi = sys.inverse(x);
      for (const Element& u : domain) {
        Element xu = sys.multiply(x, u);
        Element v = sys.multiply(xu, xi);
        if (v.length() != u.length()) continue;
        const bool drop_left = xu.length() == u.length() - x.length();
        const bool drop_right =
            sys.multiply(u, xi).length() == u.length() - x.length();
        if (!drop_left && !drop_right) continue;
        if (value_of(v) != value_of(u))
          throw CoxError(ErrorCode::InconsistentRecursion,
                         "strong pair disagrees");
      }
    }
  }

  for (auto& [u, poly] : val)
    if (!poly.is_zero()) table.f.emplace(u, std::move(poly));
  return table;
}

}  // namespace coxhecke
