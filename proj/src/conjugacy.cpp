#include "coxhecke/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace coxhecke {

namespace {

Element twisted_conjugate(const CoxeterSystem& sys, const Twist* twist, Gen s,
                          const Element& u) {
  if (twist == nullptr) return sys.conjugate_gen(s, u);
  return sys.mul_left((*twist)(s), sys.mul_right(u, s));
}

void bump(std::uint64_t& used, std::uint64_t budget, const char* where) {
  if (++used > budget)
    throw CoxError(ErrorCode::ResourceLimit,
                   std::string(where) + ": node budget exhausted");
}

// Conjugation orbit of w under the parabolic W_J.
std::vector<Element> orbit_bfs(const CoxeterSystem& sys, const Element& w,
                               const GeneratorSet& J, std::uint64_t budget,
                               std::uint64_t& used) {
  std::set<Element> seen{w};
  std::vector<Element> queue{w};
  bump(used, budget, "orbit");
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (Gen s : J) {
      Element v = sys.conjugate_gen(s, u);
      if (seen.insert(v).second) {
        bump(used, budget, "orbit");
        queue.push_back(v);
      }
    }
  }
  return std::vector<Element>(seen.begin(), seen.end());
}

struct BoundedOrbit {
  bool closed = false;  // no conjugate above the length ceiling was cut off
  std::vector<Element> elements;
};

// Same closure restricted to conjugates of length at most max_len.  For
// an infinite orbit the unrestricted walk would only stop at the node
// budget, on words of unbounded length.
BoundedOrbit orbit_bfs_bounded(const CoxeterSystem& sys, const Element& w,
                               const GeneratorSet& J, int max_len,
                               std::uint64_t budget, std::uint64_t& used) {
  BoundedOrbit out;
  out.closed = true;
  std::set<Element> seen{w};
  std::vector<Element> queue{w};
  bump(used, budget, "orbit");
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (Gen s : J) {
      Element v = sys.conjugate_gen(s, u);
      if (!seen.insert(v).second) continue;
      if (v.length() > max_len) {
        out.closed = false;
        continue;
      }
      bump(used, budget, "orbit");
      queue.push_back(std::move(v));
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  // Ceiling casualties stayed in the dedup set; drop them here.
  out.elements.erase(
      std::remove_if(out.elements.begin(), out.elements.end(),
                     [&](const Element& v) { return v.length() > max_len; }),
      out.elements.end());
  return out;
}

struct LevelSweep {
  bool closed = false;
  ShiftArrow witness;
  std::uint64_t size = 0;
};

// Explore the conjugation closure of w by generators of comp while every
// element keeps the length of w.  Stops at the first arrow leaving the
// level.  Terminates: there are finitely many elements of each length.
LevelSweep constant_length_sweep(const CoxeterSystem& sys, const Element& w,
                                 const GeneratorSet& comp, std::uint64_t budget,
                                 std::uint64_t& used) {
  LevelSweep out;
  std::set<Element> seen{w};
  std::vector<Element> queue{w};
  bump(used, budget, "level sweep");
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (Gen s : comp) {
      Element v = sys.conjugate_gen(s, u);
      if (v == u) continue;
      if (v.length() != w.length()) {
        out.closed = false;
        out.witness = ShiftArrow{u, s, v};
        out.size = seen.size();
        return out;
      }
      if (seen.insert(v).second) {
        bump(used, budget, "level sweep");
        queue.push_back(v);
      }
    }
  }
  out.closed = true;
  out.size = seen.size();
  return out;
}

// w = w1 w2 with letters split between cperp and comp; possible exactly
// when the support avoids everything else, since the two halves commute.
bool split_support(const CoxeterSystem& sys, const Element& w,
                   const GeneratorSet& comp, const GeneratorSet& cperp,
                   Element* w1, Element* w2) {
  Word a, b;
  for (Gen s : w.word()) {
    if (comp.contains(s))
      b.push_back(s);
    else if (cperp.contains(s))
      a.push_back(s);
    else
      return false;
  }
  *w1 = sys.normalize(a);
  *w2 = sys.normalize(b);
  return true;
}

}  // namespace

Twist Twist::identity(int rank) {
  Twist t;
  t.image.resize(static_cast<std::size_t>(rank));
  std::iota(t.image.begin(), t.image.end(), 0);
  return t;
}

Twist Twist::from_image(const CoxeterSystem& sys, std::vector<Gen> image) {
  Twist t;
  t.image = std::move(image);
  t.validate(sys.matrix());
  return t;
}

bool Twist::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<Gen>(i)) return false;
  return true;
}

void Twist::validate(const CoxeterMatrix& m) const {
  const int n = m.rank();
  if (static_cast<int>(image.size()) != n)
    throw CoxError(ErrorCode::BadConfig, "twist: image size does not match rank");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Gen g : image) {
    if (g < 0 || g >= n)
      throw CoxError(ErrorCode::BadConfig, "twist: image entry out of range");
    hit[static_cast<std::size_t>(g)] = 1;
  }
  for (char h : hit)
    if (!h) throw CoxError(ErrorCode::BadConfig, "twist: image is not a permutation");
  for (Gen i = 0; i < n; ++i)
    for (Gen j = 0; j < n; ++j)
      if (m.order(i, j) != m.order(image[static_cast<std::size_t>(i)],
                                   image[static_cast<std::size_t>(j)]))
        throw CoxError(ErrorCode::BadConfig, "twist: edge orders not preserved");
}

std::vector<ShiftArrow> shift_neighbors(const CoxeterSystem& sys, const Element& w,
                                        const GeneratorSet& J, const Twist* twist) {
  sys.check_subset(J);
  if (twist != nullptr) twist->validate(sys.matrix());
  std::vector<ShiftArrow> out;
  for (Gen s : J) {
    Element v = twisted_conjugate(sys, twist, s, w);
    if (v == w) continue;
    if (v.length() <= w.length()) out.push_back(ShiftArrow{w, s, v});
  }
  return out;
}

const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::SphericalComponent: return "spherical-component";
    case CertificateKind::PerpSupport: return "perp-support";
    case CertificateKind::AffineTranslation: return "affine-translation";
    case CertificateKind::ConstantLengthClosure: return "constant-length-closure";
    case CertificateKind::LengthChangeWitness: return "length-change-witness";
  }
  return "unknown";
}

ClassDecision decide_finite(const CoxeterSystem& sys, const Element& w,
                            const GeneratorSet& J, std::uint64_t node_budget) {
  sys.check_subset(J);
  ClassDecision out;
  out.finite = true;
  std::uint64_t used = 0;
  const GeneratorSet supp = sys.support(w);

  for (const auto& [comp, type] : sys.classify_subset(J)) {
    ComponentCertificate cert;
    cert.component = comp;
    cert.type = type;
    if (type == SubsetType::Spherical) {
      cert.kind = CertificateKind::SphericalComponent;
      cert.finite = true;
      out.certificates.push_back(std::move(cert));
      continue;
    }

    const GeneratorSet cperp = sys.perp(comp);
    if (supp.subset_of(cperp)) {
      // Every generator of the component commutes with w, so the orbit
      // under this component is just {w}.
      cert.kind = CertificateKind::PerpSupport;
      cert.finite = true;
      cert.closure_size = 1;
      out.certificates.push_back(std::move(cert));
      continue;
    }

    Element w1, w2;
    const bool split = split_support(sys, w, comp, cperp, &w1, &w2);

    LevelSweep sweep = constant_length_sweep(sys, w, comp, node_budget, used);
    cert.closure_size = sweep.size;
    if (sweep.closed) {
      cert.finite = true;
      if (split) {
        cert.perp_part = w1;
        cert.component_part = w2;
      }
      cert.kind = (split && type == SubsetType::Affine && !w1.is_identity())
                      ? CertificateKind::AffineTranslation
                      : CertificateKind::ConstantLengthClosure;
    } else {
      cert.finite = false;
      cert.kind = CertificateKind::LengthChangeWitness;
      cert.witness = sweep.witness;
      out.finite = false;
    }
    out.certificates.push_back(std::move(cert));
  }

  if (out.finite) {
    out.orbit = orbit_bfs(sys, w, J, node_budget, used);
    int lo = out.orbit.front().length();
    int hi = lo;
    for (const Element& u : out.orbit) {
      lo = std::min(lo, u.length());
      hi = std::max(hi, u.length());
    }
    for (const Element& u : out.orbit) {
      if (u.length() == lo) out.minimal.push_back(u);
      if (u.length() == hi) out.maximal.push_back(u);
    }
  }
  return out;
}

UPlusResult u_plus(const CoxeterSystem& sys, const Element& w, const GeneratorSet& J,
                   int slack, std::uint64_t node_budget) {
  sys.check_subset(J);
  UPlusResult out;
  out.cap = w.length() + slack;
  if (sys.is_spherical(J)) out.cap += 2 * sys.longest_element(J).length();
  out.saturated = true;

  std::uint64_t used = 0;
  std::set<Element> seen{w};
  std::vector<Element> queue{w};
  bump(used, node_budget, "u_plus");
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (Gen s : J) {
      Element v = sys.conjugate_gen(s, u);
      if (v == u) continue;
      // v -> u is an arrow of the shift graph only when it does not
      // climb, i.e. l(v) >= l(u).
      if (v.length() < u.length()) continue;
      if (v.length() > out.cap) {
        out.saturated = false;
        continue;
      }
      if (seen.insert(v).second) {
        bump(used, node_budget, "u_plus");
        queue.push_back(v);
      }
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

namespace {

// One plateau pass: breadth-first over equal-length (possibly twisted)
// conjugates of start, looking for an arrow that strictly crosses the
// level in the wanted direction.  On success the chain through the
// plateau plus the crossing arrow is appended to `chain`.
bool plateau_step(const CoxeterSystem& sys, const GeneratorSet& J,
                  const Twist* twist, bool descend, Element& cur,
                  std::vector<ShiftArrow>& chain, std::uint64_t budget,
                  std::uint64_t& used) {
  const Element start = cur;
  std::map<Element, ShiftArrow> parent;
  std::set<Element> seen{start};
  std::vector<Element> queue{start};
  bump(used, budget, "plateau");
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (Gen s : J) {
      Element v = twisted_conjugate(sys, twist, s, u);
      if (v == u) continue;
      const bool crosses = descend ? v.length() < u.length() : v.length() > u.length();
      if (crosses) {
        std::vector<ShiftArrow> path{ShiftArrow{u, s, v}};
        Element at = u;
        while (!(at == start)) {
          auto it = parent.find(at);
          path.push_back(it->second);
          at = it->second.source;
        }
        chain.insert(chain.end(), path.rbegin(), path.rend());
        cur = v;
        return true;
      }
      if (v.length() == u.length() && seen.insert(v).second) {
        bump(used, budget, "plateau");
        parent.emplace(v, ShiftArrow{u, s, v});
        queue.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace

ShiftChain reduce_to_min(const CoxeterSystem& sys, const Element& w,
                         const GeneratorSet& J, const Twist* twist,
                         std::uint64_t node_budget) {
  sys.check_subset(J);
  if (twist != nullptr) twist->validate(sys.matrix());
  ShiftChain out;
  out.result = w;
  std::uint64_t used = 0;
  while (plateau_step(sys, J, twist, /*descend=*/true, out.result, out.arrows,
                      node_budget, used)) {
  }
  return out;
}

std::optional<ShiftChain> reduce_to_max(const CoxeterSystem& sys, const Element& w,
                                        const GeneratorSet& J,
                                        std::uint64_t node_budget) {
  ClassDecision dec = decide_finite(sys, w, J, node_budget);
  if (!dec.finite) return std::nullopt;
  ShiftChain out;
  out.result = w;
  std::uint64_t used = 0;
  while (plateau_step(sys, J, nullptr, /*descend=*/false, out.result, out.arrows,
                      node_budget, used)) {
  }
  return out;
}

StrongConjugacy strongly_conjugate(const CoxeterSystem& sys, const Element& from,
                                   const Element& to, const GeneratorSet& J,
                                   StrongMode mode, int search_cap,
                                   std::uint64_t node_budget) {
  sys.check_subset(J);
  if (from.length() != to.length())
    throw CoxError(ErrorCode::LengthMismatch,
                   "strongly_conjugate: endpoints differ in length");

  StrongConjugacy out;
  if (from == to) {
    out.related = true;
    return out;
  }

  int cap = search_cap;
  if (cap < 0) cap = sys.is_spherical(J) ? sys.longest_element(J).length() : 8;
  const std::vector<Element> moves = sys.subgroup_ball(J, cap, node_budget);

  std::uint64_t used = 0;
  std::map<Element, StrongMove> parent;
  std::set<Element> seen{from};
  std::vector<Element> queue{from};
  bump(used, node_budget, "strong conjugacy");
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (const Element& x : moves) {
      if (x.is_identity()) continue;
      const int lx = x.length();
      const int lu = u.length();
      const Element xu = sys.multiply(x, u);
      const Element xinv = sys.inverse(x);
      const Element uxinv = sys.multiply(u, xinv);
      bool ok = false;
      if (mode == StrongMode::LengthAdditive)
        ok = xu.length() == lx + lu || uxinv.length() == lx + lu;
      else
        ok = xu.length() == lu - lx || uxinv.length() == lu - lx;
      if (!ok) continue;
      Element v = sys.multiply(xu, xinv);
      if (v.length() != lu) continue;
      if (v == u || !seen.insert(v).second) continue;
      bump(used, node_budget, "strong conjugacy");
      parent.emplace(v, StrongMove{x, u, v});
      if (v == to) {
        Element at = v;
        std::vector<StrongMove> path;
        while (!(at == from)) {
          auto it = parent.find(at);
          path.push_back(it->second);
          at = it->second.from;
        }
        out.related = true;
        out.path.assign(path.rbegin(), path.rend());
        return out;
      }
      queue.push_back(v);
    }
  }
  return out;
}

DecompositionReport partial_decomposition(const CoxeterSystem& sys,
                                          const GeneratorSet& J,
                                          const std::vector<Element>& universe,
                                          std::uint64_t node_budget) {
  sys.check_subset(J);
  DecompositionReport report;

  std::vector<Element> elems = universe;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  // Piece labels: elements with no left descent in J.
  std::vector<Element> vs;
  std::map<Element, GeneratorSet> k_of_v;
  for (const Element& u : elems) {
    const GeneratorSet d = sys.descents(u, Side::Left);
    bool clean = true;
    for (Gen s : d)
      if (J.contains(s)) {
        clean = false;
        break;
      }
    if (clean) {
      vs.push_back(u);
      k_of_v.emplace(u, sys.K_of(J, u));
    }
  }

  auto matches_piece = [&](const Element& v, const Element& u) {
    const Element k = sys.multiply(sys.inverse(v), u);
    return sys.support(k).subset_of(k_of_v.at(v));
  };

  // For spherical J every orbit closes after at most |W_J| nodes, so the
  // assignment scan is exact.  Otherwise orbits may be infinite and the
  // scan is cut off above a length ceiling; a match beyond the ceiling
  // is reported as incompleteness, never as a wrong assignment.
  const bool spherical = sys.is_spherical(J);

  std::uint64_t used = 0;
  std::map<Element, std::vector<Element>> members_by_v;
  for (const Element& u : elems) {
    std::vector<Element> orbit;
    if (spherical) {
      orbit = orbit_bfs(sys, u, J, node_budget, used);
    } else {
      orbit = orbit_bfs_bounded(sys, u, J, u.length() + 16, node_budget, used)
                  .elements;
    }
    std::set<Element> found;
    for (const Element& y : orbit)
      for (const Element& v : vs)
        if (matches_piece(v, y)) found.insert(v);
    if (found.empty()) {
      report.complete = false;
      continue;
    }
    if (found.size() > 1) report.disjoint = false;
    members_by_v[*found.begin()].push_back(u);
  }
  std::size_t wj_size = 0;
  if (spherical) wj_size = sys.parabolic_group(J, node_budget).size();

  for (auto& [v, members] : members_by_v) {
    DecompositionPiece piece;
    piece.v = v;
    piece.K = k_of_v.at(v);
    piece.members = members;  // already ascending: elems was sorted

    if (spherical) {
      const std::size_t wk_size = sys.parabolic_group(piece.K, node_budget).size();
      const Element vinv = sys.inverse(v);
      // Conjugation by v permutes the generators of K; record the images.
      std::map<Gen, Gen> delta;
      for (Gen s : piece.K) {
        Element img = sys.multiply(sys.multiply(v, sys.generator(s)), vinv);
        delta[s] = img.word().front();
      }

      std::set<Element> claimed;
      for (const Element& u : piece.members) {
        if (claimed.count(u)) continue;
        std::vector<Element> orbit = orbit_bfs(sys, u, J, node_budget, used);
        PieceOrbit po;
        for (const Element& y : orbit)
          if (std::binary_search(piece.members.begin(), piece.members.end(), y)) {
            po.members.push_back(y);
            claimed.insert(y);
          }

        bool have_k = false;
        for (const Element& y : orbit)
          if (matches_piece(v, y)) {
            po.k = sys.multiply(vinv, y);
            have_k = true;
            break;
          }
        if (!have_k) {
          po.counting_ok = false;
          piece.orbits.push_back(std::move(po));
          continue;
        }

        // Twisted class of k inside W_K: x -> delta(s) x s.
        std::set<Element> tw{po.k};
        std::vector<Element> tq{po.k};
        for (std::size_t head = 0; head < tq.size(); ++head) {
          const Element x = tq[head];
          for (Gen s : piece.K) {
            Element y = sys.mul_left(delta[s], sys.mul_right(x, s));
            if (tw.insert(y).second) {
              bump(used, node_budget, "twisted class");
              tq.push_back(y);
            }
          }
        }
        po.twisted_class_size = tw.size();
        po.counting_ok =
            orbit.size() * wk_size == wj_size * po.twisted_class_size;
        piece.orbits.push_back(std::move(po));
      }
    }
    report.pieces.push_back(std::move(piece));
  }
  return report;
}

}  // namespace coxhecke
