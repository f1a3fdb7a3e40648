#ifndef COXHECKE_COXETER_HPP
#define COXHECKE_COXETER_HPP

/*
  Core Coxeter machinery: matrices, generator subsets, elements in
  ShortLex-least reduced normal form, and the system object that owns the
  word-problem cache and diagram classification.

  Words are sequences of generator indices.  The entry m[i][j] of a Coxeter
  matrix is the order of s_i s_j, with 0 standing for infinity.  An Element
  always stores the ShortLex-least reduced word of the group element it
  represents, so equality and ordering are plain word comparisons.
*/

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coxhecke {

using Gen = int;
using Word = std::vector<Gen>;

constexpr std::uint64_t kDefaultNodeBudget = 200000;

enum class ErrorCode {
  Asymmetric,
  BadDiagonal,
  BadOrder,
  IndexOutOfRange,
  NotSpherical,
  NotFinite,
  NotIrreducible,
  LengthMismatch,
  InconsistentRecursion,
  NonInvertibleB,
  ResourceLimit,
  BadConfig,
  IoError,
};

class CoxError : public std::runtime_error {
public:
  CoxError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

class CoxeterMatrix {
public:
  explicit CoxeterMatrix(int rank);
  static CoxeterMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rank() const { return rank_; }
  // 0 encodes infinity.
  int order(Gen i, Gen j) const;
  void set_order(Gen i, Gen j, int m);
  void validate() const;
  std::uint64_t content_hash() const;

  bool operator==(const CoxeterMatrix& other) const = default;

private:
  int rank_;
  std::vector<int> m_;
};

// An ordered set of generator indices, kept sorted ascending.
class GeneratorSet {
public:
  GeneratorSet() = default;
  GeneratorSet(std::initializer_list<Gen> gens);
  explicit GeneratorSet(std::vector<Gen> gens);
  static GeneratorSet full(int rank);

  bool contains(Gen s) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Gen>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  GeneratorSet with(Gen s) const;
  GeneratorSet without(Gen s) const;
  bool subset_of(const GeneratorSet& other) const;
  std::uint64_t mask() const;

  bool operator==(const GeneratorSet& other) const = default;
  auto operator<=>(const GeneratorSet& other) const = default;

private:
  std::vector<Gen> members_;
};

class CoxeterSystem;

class Element {
public:
  Element() = default;  // identity

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  // ShortLex: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.word_.size() != b.word_.size())
      return a.word_.size() <=> b.word_.size();
    return a.word_ <=> b.word_;
  }
  friend bool operator==(const Element& a, const Element& b) = default;

private:
  friend class CoxeterSystem;
  struct CanonicalTag {};
  Element(Word word, CanonicalTag) : word_(std::move(word)) {}

  Word word_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

enum class Side { Left, Right };
enum class CosetSide { Left, Right, Double };
enum class SubsetType { Spherical, Affine, Indefinite };

const char* subset_type_name(SubsetType t);

// Classification of one connected diagram component, by structural
// recognition of the finite and affine type lists.
SubsetType classify_connected_diagram(const CoxeterMatrix& m,
                                      const std::vector<Gen>& component);

class CoxeterSystem {
public:
  explicit CoxeterSystem(CoxeterMatrix matrix);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }

  // Generators s,t lie in the same class when joined by a path of
  // odd-order edges; parameters a_c, b_c are indexed by these classes.
  int generator_class(Gen s) const;
  int generator_class_count() const { return n_classes_; }

  Element identity() const { return Element(); }
  Element generator(Gen s) const;
  Element normalize(const Word& word) const;
  Element multiply(const Element& u, const Element& v) const;
  Element mul_right(const Element& u, Gen s) const;
  Element mul_left(Gen s, const Element& u) const;
  Element inverse(const Element& u) const;
  // s u s (conjugation by a generator).
  Element conjugate_gen(Gen s, const Element& u) const;

  GeneratorSet descents(const Element& u, Side side) const;
  GeneratorSet support(const Element& u) const;

  // All reduced words of u (the braid-move closure).
  std::vector<Word> reduced_words(const Element& u) const;

  Element min_coset_rep(const GeneratorSet& J, const Element& w,
                        CosetSide side) const;

  std::vector<GeneratorSet> irreducible_components(const GeneratorSet& J) const;
  GeneratorSet perp(const GeneratorSet& J) const;
  std::vector<std::pair<GeneratorSet, SubsetType>> classify_subset(
      const GeneratorSet& J) const;
  bool is_spherical(const GeneratorSet& J) const;
  bool is_irreducible(const GeneratorSet& J) const;

  Element longest_element(const GeneratorSet& J) const;

  // Largest K inside J with w K w^-1 = K, elementwise on generators.
  GeneratorSet K_of(const GeneratorSet& J, const Element& w) const;

  // New system of rank+1 whose extra generator commutes with J and has
  // infinite order against everything else.
  CoxeterSystem extend_with_infinite_generator(const GeneratorSet& J) const;

  std::vector<Element> ball(int radius,
                            std::uint64_t node_budget = kDefaultNodeBudget) const;
  // Elements of the standard parabolic W_J with length <= radius.
  std::vector<Element> subgroup_ball(const GeneratorSet& J, int radius,
                                     std::uint64_t node_budget = kDefaultNodeBudget) const;
  // All of W_J; requires J spherical.
  std::vector<Element> parabolic_group(const GeneratorSet& J,
                                       std::uint64_t node_budget = kDefaultNodeBudget) const;

  void check_generator(Gen s) const;
  void check_subset(const GeneratorSet& J) const;

  // Word-problem cache control.  Entries map queried words to canonical
  // forms; eviction clears the whole table.
  void set_cache_cap(std::size_t cap);
  std::size_t cache_size() const;
  void clear_cache() const;
  std::vector<std::pair<Word, Word>> export_cache() const;
  void import_cache(const std::vector<std::pair<Word, Word>>& entries) const;

private:
  Word canonical_word(const Word& input) const;
  Word canonical_uncached(Word word, std::vector<Word>* closure_out) const;
  void cache_store(const Word& key, const Word& value) const;
  bool cache_lookup(const Word& key, Word* value) const;

  CoxeterMatrix matrix_;
  std::vector<int> class_of_;
  int n_classes_ = 0;

  struct WordHash {
    std::size_t operator()(const Word& w) const;
  };
  mutable std::unordered_map<Word, Word, WordHash> cache_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::size_t cache_cap_ = 0;  // 0 = unbounded
  mutable std::map<std::uint64_t, std::vector<std::pair<GeneratorSet, SubsetType>>>
      classify_memo_;
  mutable std::shared_mutex classify_mutex_;
};

}  // namespace coxhecke

#endif
