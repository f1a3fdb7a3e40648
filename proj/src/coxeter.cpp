#include "coxhecke/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace coxhecke {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Asymmetric: return "Asymmetric";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InconsistentRecursion: return "InconsistentRecursion";
    case ErrorCode::NonInvertibleB: return "NonInvertibleB";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank) {
  if (rank < 1)
    throw CoxError(ErrorCode::BadConfig, "rank must be at least 1");
  m_.assign(static_cast<std::size_t>(rank) * rank, 2);
  for (int i = 0; i < rank; ++i) m_[static_cast<std::size_t>(i) * rank + i] = 1;
}

CoxeterMatrix CoxeterMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty())
    throw CoxError(ErrorCode::BadConfig, "empty Coxeter matrix");
  const int rank = static_cast<int>(rows.size());
  CoxeterMatrix m(rank);
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(rows[i].size()) != rank)
      throw CoxError(ErrorCode::BadConfig,
                     "Coxeter matrix row " + std::to_string(i) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " +
                         std::to_string(rank));
    for (int j = 0; j < rank; ++j)
      m.m_[static_cast<std::size_t>(i) * rank + j] = rows[i][j];
  }
  m.validate();
  return m;
}

int CoxeterMatrix::order(Gen i, Gen j) const {
  if (i < 0 || i >= rank_ || j < 0 || j >= rank_)
    throw CoxError(ErrorCode::IndexOutOfRange,
                   "generator index out of range: (" + std::to_string(i) + "," +
                       std::to_string(j) + ") with rank " + std::to_string(rank_));
  return m_[static_cast<std::size_t>(i) * rank_ + j];
}

void CoxeterMatrix::set_order(Gen i, Gen j, int m) {
  if (i < 0 || i >= rank_ || j < 0 || j >= rank_)
    throw CoxError(ErrorCode::IndexOutOfRange,
                   "generator index out of range: (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
  if (i == j)
    throw CoxError(ErrorCode::BadDiagonal, "cannot set diagonal entry");
  if (m != 0 && m < 2)
    throw CoxError(ErrorCode::BadOrder,
                   "order m(" + std::to_string(i) + "," + std::to_string(j) +
                       ") = " + std::to_string(m) + " must be >= 2 or 0 for infinity");
  m_[static_cast<std::size_t>(i) * rank_ + j] = m;
  m_[static_cast<std::size_t>(j) * rank_ + i] = m;
}

void CoxeterMatrix::validate() const {
  for (int i = 0; i < rank_; ++i) {
    if (m_[static_cast<std::size_t>(i) * rank_ + i] != 1)
      throw CoxError(ErrorCode::BadDiagonal,
                     "diagonal entry m(" + std::to_string(i) + "," +
                         std::to_string(i) + ") must be 1");
    for (int j = 0; j < rank_; ++j) {
      const int mij = m_[static_cast<std::size_t>(i) * rank_ + j];
      const int mji = m_[static_cast<std::size_t>(j) * rank_ + i];
      if (mij != mji)
        throw CoxError(ErrorCode::Asymmetric,
                       "matrix not symmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + "): " + std::to_string(mij) +
                           " vs " + std::to_string(mji));
      if (i != j && mij != 0 && mij < 2)
        throw CoxError(ErrorCode::BadOrder,
                       "order m(" + std::to_string(i) + "," + std::to_string(j) +
                           ") = " + std::to_string(mij) +
                           " must be >= 2 or 0 for infinity");
    }
  }
}

std::uint64_t CoxeterMatrix::content_hash() const {
  // FNV-1a over rank and entries.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(rank_));
  for (int v : m_) mix(static_cast<std::uint64_t>(v));
  return h;
}

GeneratorSet::GeneratorSet(std::initializer_list<Gen> gens)
    : GeneratorSet(std::vector<Gen>(gens)) {}

GeneratorSet::GeneratorSet(std::vector<Gen> gens) : members_(std::move(gens)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0)
    throw CoxError(ErrorCode::IndexOutOfRange, "negative generator index");
}

GeneratorSet GeneratorSet::full(int rank) {
  std::vector<Gen> all(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) all[static_cast<std::size_t>(i)] = i;
  return GeneratorSet(std::move(all));
}

bool GeneratorSet::contains(Gen s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

GeneratorSet GeneratorSet::with(Gen s) const {
  std::vector<Gen> v = members_;
  v.push_back(s);
  return GeneratorSet(std::move(v));
}

GeneratorSet GeneratorSet::without(Gen s) const {
  std::vector<Gen> v;
  v.reserve(members_.size());
  for (Gen g : members_)
    if (g != s) v.push_back(g);
  return GeneratorSet(std::move(v));
}

bool GeneratorSet::subset_of(const GeneratorSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::uint64_t GeneratorSet::mask() const {
  std::uint64_t m = 0;
  for (Gen g : members_) {
    if (g >= 64)
      throw CoxError(ErrorCode::IndexOutOfRange, "generator index >= 64");
    m |= (1ull << g);
  }
  return m;
}

std::size_t ElementHash::operator()(const Element& e) const {
  std::size_t h = 1469598103934665603ull;
  for (Gen g : e.word()) {
    h ^= static_cast<std::size_t>(g) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t CoxeterSystem::WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (Gen g : w) {
    h ^= static_cast<std::size_t>(g) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {
  matrix_.validate();
  // Generator classes: connected components of the odd-order edge graph.
  const int n = matrix_.rank();
  class_of_.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (class_of_[static_cast<std::size_t>(i)] != -1) continue;
    std::deque<int> queue{i};
    class_of_[static_cast<std::size_t>(i)] = next;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        const int m = matrix_.order(u, v);
        if (u != v && m != 0 && m % 2 == 1 &&
            class_of_[static_cast<std::size_t>(v)] == -1) {
          class_of_[static_cast<std::size_t>(v)] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  n_classes_ = next;
}

int CoxeterSystem::generator_class(Gen s) const {
  check_generator(s);
  return class_of_[static_cast<std::size_t>(s)];
}

void CoxeterSystem::check_generator(Gen s) const {
  if (s < 0 || s >= rank())
    throw CoxError(ErrorCode::IndexOutOfRange,
                   "generator index " + std::to_string(s) + " out of range for rank " +
                       std::to_string(rank()));
}

void CoxeterSystem::check_subset(const GeneratorSet& J) const {
  for (Gen s : J) check_generator(s);
}

Element CoxeterSystem::generator(Gen s) const {
  check_generator(s);
  return Element(Word{s}, Element::CanonicalTag{});
}

bool CoxeterSystem::cache_lookup(const Word& key, Word* value) const {
  std::shared_lock lock(cache_mutex_);
  auto it = cache_.find(key);
  if (it == cache_.end()) return false;
  *value = it->second;
  return true;
}

void CoxeterSystem::cache_store(const Word& key, const Word& value) const {
  std::unique_lock lock(cache_mutex_);
  if (cache_cap_ != 0 && cache_.size() >= cache_cap_) cache_.clear();
  cache_.emplace(key, value);
}

void CoxeterSystem::set_cache_cap(std::size_t cap) {
  std::unique_lock lock(cache_mutex_);
  cache_cap_ = cap;
}

std::size_t CoxeterSystem::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

void CoxeterSystem::clear_cache() const {
  std::unique_lock lock(cache_mutex_);
  cache_.clear();
}

std::vector<std::pair<Word, Word>> CoxeterSystem::export_cache() const {
  std::shared_lock lock(cache_mutex_);
  std::vector<std::pair<Word, Word>> out(cache_.begin(), cache_.end());
  lock.unlock();
  std::sort(out.begin(), out.end());
  return out;
}

void CoxeterSystem::import_cache(const std::vector<std::pair<Word, Word>>& entries) const {
  for (const auto& [k, v] : entries) {
    for (Gen g : k)
      if (g < 0 || g >= rank())
        throw CoxError(ErrorCode::BadConfig, "cache entry index out of range");
    for (Gen g : v)
      if (g < 0 || g >= rank())
        throw CoxError(ErrorCode::BadConfig, "cache entry index out of range");
    if (v.size() > k.size())
      throw CoxError(ErrorCode::BadConfig, "cache entry canonical longer than key");
  }
  std::unique_lock lock(cache_mutex_);
  for (const auto& [k, v] : entries) cache_.emplace(k, v);
}

namespace {

// Scan for an adjacent equal pair; on hit, remove it and report true.
bool delete_once(Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      return true;
    }
  }
  return false;
}

}  // namespace

// Tits rewriting: close the word under braid moves, restarting from a
// shorter word whenever an ss pair appears anywhere in the closure.  Once
// no deletion is possible the closure is exactly the set of reduced words
// of the element, and the ShortLex-least one is the canonical form.
Word CoxeterSystem::canonical_uncached(Word word, std::vector<Word>* closure_out) const {
  for (;;) {
    while (delete_once(word)) {}
    std::set<Word> closure{word};
    std::deque<Word> queue{word};
    bool restarted = false;
    while (!queue.empty()) {
      Word u = std::move(queue.front());
      queue.pop_front();
      bool deleted = false;
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == u[i + 1]) {
          u.erase(u.begin() + static_cast<std::ptrdiff_t>(i), u.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          word = std::move(u);
          deleted = true;
          break;
        }
      }
      if (deleted) {
        restarted = true;
        break;
      }
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t h = i + 1; h < u.size(); ++h) {
          // u[i..h] must alternate between u[i] and u[i+1].
          if (u[h] != ((h - i) % 2 == 0 ? u[i] : u[i + 1])) break;
          if (h == i + 1 && u[i] == u[h]) break;
          const int span = static_cast<int>(h - i + 1);
          if (span < 2) continue;
          const int m = matrix_.order(u[i], u[i + 1]);
          if (m != 0 && span == m) {
            Word v = u;
            for (std::size_t p = i; p <= h; ++p)
              v[p] = ((p - i) % 2 == 0 ? u[i + 1] : u[i]);
            if (closure.insert(v).second) queue.push_back(std::move(v));
          }
        }
      }
    }
    if (restarted) continue;
    if (closure_out)
      closure_out->assign(closure.begin(), closure.end());
    return *closure.begin();
  }
}

Word CoxeterSystem::canonical_word(const Word& input) const {
  Word hit;
  if (cache_lookup(input, &hit)) return hit;
  std::vector<Word> closure;
  Word canon = canonical_uncached(input, &closure);
  cache_store(input, canon);
  for (const Word& w : closure)
    if (w != input) cache_store(w, canon);
  return canon;
}

Element CoxeterSystem::normalize(const Word& word) const {
  for (Gen g : word) check_generator(g);
  return Element(canonical_word(word), Element::CanonicalTag{});
}

Element CoxeterSystem::multiply(const Element& u, const Element& v) const {
  Word w = u.word();
  w.insert(w.end(), v.word().begin(), v.word().end());
  return Element(canonical_word(w), Element::CanonicalTag{});
}

Element CoxeterSystem::mul_right(const Element& u, Gen s) const {
  check_generator(s);
  Word w = u.word();
  w.push_back(s);
  return Element(canonical_word(w), Element::CanonicalTag{});
}

Element CoxeterSystem::mul_left(Gen s, const Element& u) const {
  check_generator(s);
  Word w;
  w.reserve(u.word().size() + 1);
  w.push_back(s);
  w.insert(w.end(), u.word().begin(), u.word().end());
  return Element(canonical_word(w), Element::CanonicalTag{});
}

Element CoxeterSystem::inverse(const Element& u) const {
  Word w(u.word().rbegin(), u.word().rend());
  return Element(canonical_word(w), Element::CanonicalTag{});
}

Element CoxeterSystem::conjugate_gen(Gen s, const Element& u) const {
  check_generator(s);
  Word w;
  w.reserve(u.word().size() + 2);
  w.push_back(s);
  w.insert(w.end(), u.word().begin(), u.word().end());
  w.push_back(s);
  return Element(canonical_word(w), Element::CanonicalTag{});
}

GeneratorSet CoxeterSystem::descents(const Element& u, Side side) const {
  std::vector<Gen> out;
  for (Gen s = 0; s < rank(); ++s) {
    const Element v = (side == Side::Left) ? mul_left(s, u) : mul_right(u, s);
    if (v.length() < u.length()) out.push_back(s);
  }
  return GeneratorSet(std::move(out));
}

GeneratorSet CoxeterSystem::support(const Element& u) const {
  std::vector<Gen> out(u.word().begin(), u.word().end());
  return GeneratorSet(std::move(out));
}

std::vector<Word> CoxeterSystem::reduced_words(const Element& u) const {
  std::vector<Word> closure;
  canonical_uncached(u.word(), &closure);
  return closure;
}

Element CoxeterSystem::min_coset_rep(const GeneratorSet& J, const Element& w,
                                     CosetSide side) const {
  check_subset(J);
  Element x = w;
  for (;;) {
    bool changed = false;
    if (side == CosetSide::Left || side == CosetSide::Double) {
      for (Gen s : J) {
        Element y = mul_left(s, x);
        if (y.length() < x.length()) {
          x = y;
          changed = true;
          break;
        }
      }
    }
    if (!changed && (side == CosetSide::Right || side == CosetSide::Double)) {
      for (Gen s : J) {
        Element y = mul_right(x, s);
        if (y.length() < x.length()) {
          x = y;
          changed = true;
          break;
        }
      }
    }
    if (!changed) return x;
  }
}

std::vector<GeneratorSet> CoxeterSystem::irreducible_components(
    const GeneratorSet& J) const {
  check_subset(J);
  std::vector<GeneratorSet> out;
  std::set<Gen> left(J.begin(), J.end());
  while (!left.empty()) {
    Gen seed = *left.begin();
    std::vector<Gen> comp;
    std::deque<Gen> queue{seed};
    left.erase(seed);
    while (!queue.empty()) {
      Gen u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (auto it = left.begin(); it != left.end();) {
        const int m = matrix_.order(u, *it);
        if (m == 0 || m >= 3) {
          queue.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorSet CoxeterSystem::perp(const GeneratorSet& J) const {
  check_subset(J);
  std::vector<Gen> out;
  for (Gen s = 0; s < rank(); ++s) {
    if (J.contains(s)) continue;
    bool commutes = true;
    for (Gen j : J) {
      if (matrix_.order(s, j) != 2) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(s);
  }
  return GeneratorSet(std::move(out));
}

std::vector<std::pair<GeneratorSet, SubsetType>> CoxeterSystem::classify_subset(
    const GeneratorSet& J) const {
  check_subset(J);
  const std::uint64_t key = J.mask();
  {
    std::shared_lock lock(classify_mutex_);
    auto it = classify_memo_.find(key);
    if (it != classify_memo_.end()) return it->second;
  }
  std::vector<std::pair<GeneratorSet, SubsetType>> out;
  for (const GeneratorSet& comp : irreducible_components(J))
    out.emplace_back(comp, classify_connected_diagram(matrix_, comp.members()));
  std::unique_lock lock(classify_mutex_);
  classify_memo_.emplace(key, out);
  return out;
}

bool CoxeterSystem::is_spherical(const GeneratorSet& J) const {
  for (const auto& [comp, type] : classify_subset(J))
    if (type != SubsetType::Spherical) return false;
  return true;
}

bool CoxeterSystem::is_irreducible(const GeneratorSet& J) const {
  return irreducible_components(J).size() <= 1;
}

Element CoxeterSystem::longest_element(const GeneratorSet& J) const {
  if (!is_spherical(J))
    throw CoxError(ErrorCode::NotSpherical,
                   "longest element requires a spherical subset");
  Element x;
  for (;;) {
    bool moved = false;
    for (Gen s : J) {
      Element y = mul_right(x, s);
      if (y.length() > x.length()) {
        x = y;
        moved = true;
        break;
      }
    }
    if (!moved) return x;
  }
}

GeneratorSet CoxeterSystem::K_of(const GeneratorSet& J, const Element& w) const {
  check_subset(J);
  const Element winv = inverse(w);
  GeneratorSet K = J;
  for (;;) {
    std::vector<Gen> kept;
    for (Gen s : K) {
      const Element c = multiply(multiply(w, generator(s)), winv);
      if (c.length() == 1 && K.contains(c.word()[0])) kept.push_back(s);
    }
    GeneratorSet next(std::move(kept));
    if (next == K) return K;
    K = next;
  }
}

CoxeterSystem CoxeterSystem::extend_with_infinite_generator(
    const GeneratorSet& J) const {
  check_subset(J);
  const int n = rank();
  CoxeterMatrix m(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set_order(i, j, matrix_.order(i, j));
  for (int i = 0; i < n; ++i) m.set_order(i, n, J.contains(i) ? 2 : 0);
  return CoxeterSystem(std::move(m));
}

std::vector<Element> CoxeterSystem::ball(int radius, std::uint64_t node_budget) const {
  return subgroup_ball(GeneratorSet::full(rank()), radius, node_budget);
}

std::vector<Element> CoxeterSystem::subgroup_ball(const GeneratorSet& J, int radius,
                                                  std::uint64_t node_budget) const {
  check_subset(J);
  std::set<Element> seen{identity()};
  std::vector<Element> stratum{identity()};
  for (int len = 0; len < radius; ++len) {
    std::vector<Element> next;
    for (const Element& u : stratum) {
      for (Gen s : J) {
        Element v = mul_right(u, s);
        if (v.length() == len + 1 && seen.insert(v).second) {
          next.push_back(v);
          if (seen.size() > node_budget)
            throw CoxError(ErrorCode::ResourceLimit,
                           "node budget exceeded during ball enumeration");
        }
      }
    }
    if (next.empty()) break;
    stratum = std::move(next);
  }
  return std::vector<Element>(seen.begin(), seen.end());
}

std::vector<Element> CoxeterSystem::parabolic_group(const GeneratorSet& J,
                                                    std::uint64_t node_budget) const {
  if (!is_spherical(J))
    throw CoxError(ErrorCode::NotSpherical,
                   "full parabolic enumeration requires a spherical subset");
  return subgroup_ball(J, longest_element(J).length(), node_budget);
}

}  // namespace coxhecke
