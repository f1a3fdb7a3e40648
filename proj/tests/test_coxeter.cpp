#include <doctest.h>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "coxhecke/coxeter.hpp"
#include "oracles.hpp"

using namespace coxhecke;

namespace {

// Path diagram: rank = labels.size() + 1, consecutive generators joined
// by the given orders.
CoxeterMatrix path_matrix(const std::vector<int>& labels) {
  CoxeterMatrix m(static_cast<int>(labels.size()) + 1);
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    m.set_order(i, i + 1, labels[static_cast<std::size_t>(i)]);
  return m;
}

CoxeterMatrix cycle_matrix(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  CoxeterMatrix m(n);
  for (int i = 0; i < n; ++i)
    m.set_order(i, (i + 1) % n, labels[static_cast<std::size_t>(i)]);
  return m;
}

CoxeterMatrix tree_matrix(int rank, const std::vector<std::array<int, 3>>& edges) {
  CoxeterMatrix m(rank);
  for (const auto& e : edges) m.set_order(e[0], e[1], e[2]);
  return m;
}

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const CoxError& e) {
    return e.code();
  }
  return std::nullopt;
}

Word random_word(std::mt19937& rng, int rank, int len) {
  Word w;
  for (int i = 0; i < len; ++i)
    w.push_back(static_cast<Gen>(rng() % static_cast<unsigned>(rank)));
  return w;
}

}  // namespace

TEST_CASE("matrix validation") {
  CoxeterMatrix m(3);
  CHECK(m.rank() == 3);
  CHECK(m.order(0, 1) == 2);
  CHECK(m.order(0, 0) == 1);
  m.set_order(0, 1, 3);
  CHECK(m.order(1, 0) == 3);
  m.set_order(1, 2, 0);
  CHECK(m.order(1, 2) == 0);
  m.validate();

  CHECK(code_of([] { CoxeterMatrix bad(0); }) == ErrorCode::BadConfig);
  CHECK(code_of([&] { m.set_order(0, 1, 1); }) == ErrorCode::BadOrder);
  CHECK(code_of([&] { m.set_order(0, 1, -2); }) == ErrorCode::BadOrder);
  CHECK(code_of([&] { m.set_order(0, 0, 3); }) == ErrorCode::BadDiagonal);
  CHECK(code_of([&] { m.set_order(0, 3, 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { (void)m.order(-1, 0); }) == ErrorCode::IndexOutOfRange);

  CHECK(code_of([] {
          CoxeterMatrix::from_rows({{1, 3}, {4, 1}});
        }) == ErrorCode::Asymmetric);
  CHECK(code_of([] {
          CoxeterMatrix::from_rows({{2, 3}, {3, 1}});
        }) == ErrorCode::BadDiagonal);
  CHECK(code_of([] {
          CoxeterMatrix::from_rows({{1, 3}, {3, 1}, {2, 2}});
        }) == ErrorCode::BadConfig);

  const CoxeterMatrix a2 = CoxeterMatrix::from_rows({{1, 3}, {3, 1}});
  const CoxeterMatrix b2 = CoxeterMatrix::from_rows({{1, 4}, {4, 1}});
  CHECK(a2 == path_matrix({3}));
  CHECK(a2.content_hash() != b2.content_hash());
  CHECK(a2.content_hash() == path_matrix({3}).content_hash());
}

TEST_CASE("generator sets") {
  GeneratorSet j{2, 0};
  CHECK(j.members() == std::vector<Gen>{0, 2});
  CHECK(j.contains(0));
  CHECK(!j.contains(1));
  CHECK(j.with(1).members() == std::vector<Gen>{0, 1, 2});
  CHECK(j.without(0).members() == std::vector<Gen>{2});
  CHECK(j.subset_of(GeneratorSet::full(3)));
  CHECK(!GeneratorSet::full(3).subset_of(j));
  CHECK(j.mask() == 5);
  CHECK(GeneratorSet{}.empty());
  CHECK(code_of([] { GeneratorSet bad{-1}; }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("normal forms in rank 2") {
  CoxeterSystem a2(path_matrix({3}));

  CHECK(a2.normalize({}).is_identity());
  CHECK(a2.normalize({0, 0}).is_identity());
  CHECK(a2.normalize({0, 1, 0, 1}).word() == Word{1, 0});
  CHECK(a2.normalize({0, 1, 0}) == a2.normalize({1, 0, 1}));
  CHECK(a2.normalize({0, 1, 0, 1, 0, 1}).is_identity());

  const Element st = a2.multiply(a2.generator(0), a2.generator(1));
  CHECK(st.word() == Word{0, 1});
  CHECK(a2.multiply(st, st).word() == Word{1, 0});
  CHECK(a2.inverse(st).word() == Word{1, 0});
  CHECK(a2.mul_left(0, st).word() == Word{1});
  CHECK(a2.mul_right(st, 1).word() == Word{0});
  CHECK(a2.conjugate_gen(0, a2.generator(1)).word() == Word{0, 1, 0});
  CHECK(a2.conjugate_gen(1, a2.normalize({0, 1, 0})).word() == Word{0});

  const Element w0 = a2.normalize({0, 1, 0});
  auto words = a2.reduced_words(w0);
  CHECK(words == std::vector<Word>{{0, 1, 0}, {1, 0, 1}});

  CHECK(a2.descents(st, Side::Left).members() == std::vector<Gen>{0});
  CHECK(a2.descents(st, Side::Right).members() == std::vector<Gen>{1});
  CHECK(a2.descents(w0, Side::Left).members() == std::vector<Gen>{0, 1});
  CHECK(a2.support(st).members() == std::vector<Gen>{0, 1});
  CHECK(a2.support(a2.identity()).empty());

  CHECK(code_of([&] { (void)a2.normalize({0, 2}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("element ordering is ShortLex") {
  CoxeterSystem a2(path_matrix({3}));
  const Element e = a2.identity();
  const Element s = a2.generator(0);
  const Element t = a2.generator(1);
  const Element st = a2.multiply(s, t);
  CHECK(e < s);
  CHECK(s < t);
  CHECK(t < st);
  CHECK(st < a2.normalize({1, 0}));
}

TEST_CASE("symmetric group cross-check, rank 3") {
  CoxeterSystem w(path_matrix({3, 3}));
  oracle::PermGroup g = oracle::symmetric_group(4);
  REQUIRE(g.order() == 24);
  REQUIRE(g.product_order(0, 1) == 3);
  REQUIRE(g.product_order(0, 2) == 2);

  auto all = w.ball(6);
  REQUIRE(all.size() == 24);
  for (const Element& e : all) {
    const int gi = g.eval(e.word());
    CHECK(g.words[static_cast<std::size_t>(gi)] == e.word());
    CHECK(oracle::inversion_count(g.elements[static_cast<std::size_t>(gi)]) ==
          e.length());
  }

  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    const Element& x = all[rng() % all.size()];
    const Element& y = all[rng() % all.size()];
    const int gx = g.eval(x.word());
    const int gy = g.eval(y.word());
    CHECK(g.eval(w.multiply(x, y).word()) == g.mult(gx, gy));
    CHECK(g.eval(w.inverse(x).word()) == g.inverse(gx));
    const Gen s = static_cast<Gen>(rng() % 3);
    CHECK(g.eval(w.mul_left(s, x).word()) == g.mult(g.eval({s}), gx));
    CHECK(g.eval(w.mul_right(x, s).word()) == g.mult(gx, g.eval({s})));
    CHECK(g.eval(w.conjugate_gen(s, x).word()) ==
          g.mult(g.mult(g.eval({s}), gx), g.eval({s})));
  }

  CHECK(w.ball(3).size() == 15);
  CHECK(w.longest_element(GeneratorSet::full(3)).word() == Word{0, 1, 0, 2, 1, 0});
  CHECK(w.reduced_words(w.longest_element(GeneratorSet::full(3))).size() == 16);
}

TEST_CASE("symmetric group cross-check, rank 4") {
  CoxeterSystem w(path_matrix({3, 3, 3}));
  oracle::PermGroup g = oracle::symmetric_group(5);
  REQUIRE(g.order() == 120);
  auto all = w.ball(10);
  REQUIRE(all.size() == 120);
  for (const Element& e : all) {
    const int gi = g.eval(e.word());
    CHECK(g.words[static_cast<std::size_t>(gi)] == e.word());
  }
  std::mt19937 rng(987);
  for (int trial = 0; trial < 150; ++trial) {
    const Element& x = all[rng() % all.size()];
    const Element& y = all[rng() % all.size()];
    CHECK(g.eval(w.multiply(x, y).word()) ==
          g.mult(g.eval(x.word()), g.eval(y.word())));
  }
}

TEST_CASE("signed permutation cross-check, rank 2 and 3") {
  SUBCASE("B2") {
    CoxeterSystem w(path_matrix({4}));
    oracle::PermGroup g = oracle::signed_permutations(2);
    REQUIRE(g.order() == 8);
    REQUIRE(g.product_order(0, 1) == 4);
    auto all = w.ball(4);
    REQUIRE(all.size() == 8);
    for (const Element& e : all)
      CHECK(g.words[static_cast<std::size_t>(g.eval(e.word()))] == e.word());
    CHECK(w.longest_element(GeneratorSet::full(2)).word() == Word{0, 1, 0, 1});

    // Same group through the dihedral action on Z/4.
    oracle::PermGroup d = oracle::dihedral(4);
    std::set<std::vector<int>> dw(d.words.begin(), d.words.end());
    std::set<std::vector<int>> gw(g.words.begin(), g.words.end());
    CHECK(dw == gw);
  }
  SUBCASE("B3") {
    CoxeterSystem w(path_matrix({4, 3}));
    oracle::PermGroup g = oracle::signed_permutations(3);
    REQUIRE(g.order() == 48);
    REQUIRE(g.product_order(0, 1) == 4);
    REQUIRE(g.product_order(1, 2) == 3);
    REQUIRE(g.product_order(0, 2) == 2);
    auto all = w.ball(9);
    REQUIRE(all.size() == 48);
    for (const Element& e : all)
      CHECK(g.words[static_cast<std::size_t>(g.eval(e.word()))] == e.word());
    CHECK(w.longest_element(GeneratorSet::full(3)).length() == 9);
  }
}

TEST_CASE("dihedral cross-checks") {
  for (int m : {5, 6, 7}) {
    CoxeterSystem w(path_matrix({m}));
    oracle::PermGroup g = oracle::dihedral(m);
    REQUIRE(g.order() == 2 * static_cast<std::size_t>(m));
    REQUIRE(g.product_order(0, 1) == m);
    auto all = w.ball(m);
    REQUIRE(all.size() == 2 * static_cast<std::size_t>(m));
    for (const Element& e : all)
      CHECK(g.words[static_cast<std::size_t>(g.eval(e.word()))] == e.word());
  }
  CoxeterSystem i5(path_matrix({5}));
  CHECK(i5.longest_element(GeneratorSet::full(2)).word() == Word{0, 1, 0, 1, 0});
}

TEST_CASE("infinite dihedral via free reduction") {
  CoxeterSystem w(path_matrix({0}));
  std::mt19937 rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = random_word(rng, 2, static_cast<int>(rng() % 16));
    CHECK(w.normalize(u).word() == oracle::free_reduce(u));
  }
  CHECK(w.ball(6).size() == 13);
  CHECK(code_of([&] { (void)w.ball(100, 50); }) == ErrorCode::ResourceLimit);
  CHECK(code_of([&] { (void)w.longest_element(GeneratorSet::full(2)); }) ==
        ErrorCode::NotSpherical);
}

TEST_CASE("rank 3 with infinite edges via exact reflection matrices") {
  CoxeterMatrix m(3);
  m.set_order(0, 1, 3);
  m.set_order(0, 2, 0);
  m.set_order(1, 2, 0);
  CoxeterSystem w(m);
  oracle::GeomRep rep(m);

  auto all = w.ball(4);
  CHECK(w.ball(3).size() == 21);
  std::set<oracle::GeomRep::Mat> images;
  for (const Element& e : all) images.insert(rep.eval(e.word()));
  CHECK(images.size() == all.size());

  std::mt19937 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const Word u = random_word(rng, 3, static_cast<int>(rng() % 7));
    const Word v = random_word(rng, 3, static_cast<int>(rng() % 7));
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(rep.eval(w.normalize(uv).word()) ==
          rep.mul(rep.eval(u), rep.eval(v)));
    Word cancel = u;
    cancel.insert(cancel.end(), u.rbegin(), u.rend());
    CHECK(w.normalize(cancel).is_identity());
  }
}

TEST_CASE("independent rewriting cross-check with larger labels") {
  std::mt19937 rng(31415);
  for (const auto& labels :
       {std::vector<int>{4}, std::vector<int>{5}, std::vector<int>{5, 3}}) {
    const CoxeterMatrix m = path_matrix(labels);
    CoxeterSystem w(m);
    for (int trial = 0; trial < 40; ++trial) {
      const Word u = random_word(rng, m.rank(), static_cast<int>(rng() % 11));
      CHECK(w.normalize(u).word() == oracle::tits_least(m, u));
    }
  }
}

TEST_CASE("coset representatives") {
  CoxeterSystem a2(path_matrix({3}));
  const GeneratorSet j{0};
  const Element st = a2.normalize({0, 1});
  CHECK(a2.min_coset_rep(j, st, CosetSide::Left).word() == Word{1});
  CHECK(a2.min_coset_rep(j, st, CosetSide::Right).word() == Word{0, 1});
  CHECK(a2.min_coset_rep(j, st, CosetSide::Double).word() == Word{1});
  CHECK(a2.min_coset_rep(j, a2.normalize({0, 1, 0}), CosetSide::Double).word() ==
        Word{1});
  CHECK(a2.min_coset_rep(GeneratorSet{}, st, CosetSide::Double) == st);

  // Every left coset rep has no descent in J; reps of wW_J partition the ball.
  CoxeterSystem a3(path_matrix({3, 3}));
  const GeneratorSet k{0, 2};
  for (const Element& e : a3.ball(6)) {
    const Element r = a3.min_coset_rep(k, e, CosetSide::Left);
    for (Gen s : a3.descents(r, Side::Left).members()) CHECK(!k.contains(s));
    CHECK(a3.min_coset_rep(k, r, CosetSide::Left) == r);
  }
}

TEST_CASE("components, perp, classification plumbing") {
  // A2 x A1
  CoxeterMatrix m(3);
  m.set_order(0, 1, 3);
  CoxeterSystem w(m);
  auto comps = w.irreducible_components(GeneratorSet::full(3));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].members() == std::vector<Gen>{0, 1});
  CHECK(comps[1].members() == std::vector<Gen>{2});
  CHECK(w.perp(GeneratorSet{0, 1}).members() == std::vector<Gen>{2});
  CHECK(w.perp(GeneratorSet{2}).members() == std::vector<Gen>{0, 1});
  CHECK(w.perp(GeneratorSet{0}).members() == std::vector<Gen>{2});
  CHECK(w.is_spherical(GeneratorSet::full(3)));
  CHECK(w.is_irreducible(GeneratorSet{0, 1}));
  CHECK(!w.is_irreducible(GeneratorSet::full(3)));

  auto cls = w.classify_subset(GeneratorSet::full(3));
  REQUIRE(cls.size() == 2);
  CHECK(cls[0].second == SubsetType::Spherical);
  CHECK(cls[1].second == SubsetType::Spherical);

  CoxeterSystem aff(path_matrix({0}));
  CHECK(!aff.is_spherical(GeneratorSet::full(2)));
  CHECK(aff.classify_subset(GeneratorSet::full(2))[0].second == SubsetType::Affine);
  CHECK(aff.is_spherical(GeneratorSet{0}));
}

TEST_CASE("diagram classification sweep") {
  struct Case {
    const char* name;
    CoxeterMatrix m;
    SubsetType expected;
  };
  const std::vector<Case> cases = {
      {"A1", CoxeterMatrix(1), SubsetType::Spherical},
      {"A2", path_matrix({3}), SubsetType::Spherical},
      {"A3", path_matrix({3, 3}), SubsetType::Spherical},
      {"A4", path_matrix({3, 3, 3}), SubsetType::Spherical},
      {"B2", path_matrix({4}), SubsetType::Spherical},
      {"B3", path_matrix({4, 3}), SubsetType::Spherical},
      {"B3r", path_matrix({3, 4}), SubsetType::Spherical},
      {"B4", path_matrix({4, 3, 3}), SubsetType::Spherical},
      {"F4", path_matrix({3, 4, 3}), SubsetType::Spherical},
      {"H3", path_matrix({5, 3}), SubsetType::Spherical},
      {"H4", path_matrix({5, 3, 3}), SubsetType::Spherical},
      {"I2(7)", path_matrix({7}), SubsetType::Spherical},
      {"I2(13)", path_matrix({13}), SubsetType::Spherical},
      {"D4", tree_matrix(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}}), SubsetType::Spherical},
      {"D5", tree_matrix(5, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {3, 4, 3}}),
       SubsetType::Spherical},
      {"E6", tree_matrix(6, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {2, 5, 3}}),
       SubsetType::Spherical},
      {"E7",
       tree_matrix(7, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {2, 6, 3}}),
       SubsetType::Spherical},
      {"E8",
       tree_matrix(8, {{0, 1, 3},
                       {1, 2, 3},
                       {2, 3, 3},
                       {3, 4, 3},
                       {4, 5, 3},
                       {5, 6, 3},
                       {2, 7, 3}}),
       SubsetType::Spherical},

      {"affine A1", path_matrix({0}), SubsetType::Affine},
      {"affine A2", cycle_matrix({3, 3, 3}), SubsetType::Affine},
      {"affine A3", cycle_matrix({3, 3, 3, 3}), SubsetType::Affine},
      {"affine C2", path_matrix({4, 4}), SubsetType::Affine},
      {"affine C3", path_matrix({4, 3, 4}), SubsetType::Affine},
      {"affine C4", path_matrix({4, 3, 3, 4}), SubsetType::Affine},
      {"affine G2", path_matrix({6, 3}), SubsetType::Affine},
      {"affine G2r", path_matrix({3, 6}), SubsetType::Affine},
      {"affine F4", path_matrix({3, 4, 3, 3}), SubsetType::Affine},
      {"affine F4r", path_matrix({3, 3, 4, 3}), SubsetType::Affine},
      {"affine B3", tree_matrix(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 4}}), SubsetType::Affine},
      {"affine B4", tree_matrix(5, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {3, 4, 4}}),
       SubsetType::Affine},
      {"affine D4",
       tree_matrix(5, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}}), SubsetType::Affine},
      {"affine D5",
       tree_matrix(6, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {3, 4, 3}, {3, 5, 3}}),
       SubsetType::Affine},
      {"affine D6",
       tree_matrix(7, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {3, 4, 3}, {4, 5, 3}, {4, 6, 3}}),
       SubsetType::Affine},
      {"affine E6",
       tree_matrix(7, {{0, 1, 3}, {1, 2, 3}, {0, 3, 3}, {3, 4, 3}, {0, 5, 3}, {5, 6, 3}}),
       SubsetType::Affine},
      {"affine E7",
       tree_matrix(8,
                   {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {3, 7, 3}}),
       SubsetType::Affine},
      {"affine E8",
       tree_matrix(9,
                   {{0, 1, 3},
                    {1, 2, 3},
                    {2, 3, 3},
                    {3, 4, 3},
                    {4, 5, 3},
                    {5, 6, 3},
                    {6, 7, 3},
                    {2, 8, 3}}),
       SubsetType::Affine},

      {"infinite triangle", tree_matrix(3, {{0, 1, 3}, {0, 2, 0}, {1, 2, 0}}),
       SubsetType::Indefinite},
      {"pentagons", path_matrix({5, 5}), SubsetType::Indefinite},
      {"five in the middle", path_matrix({3, 5, 3}), SubsetType::Indefinite},
      {"H4 plus one", path_matrix({5, 3, 3, 3}), SubsetType::Indefinite},
      {"seven, rank 3", path_matrix({7, 3}), SubsetType::Indefinite},
      {"affine F4 plus one", path_matrix({3, 4, 3, 3, 3}), SubsetType::Indefinite},
      {"two fours inside", path_matrix({4, 3, 4, 3}), SubsetType::Indefinite},
      {"six not at the end", path_matrix({3, 6, 3}), SubsetType::Indefinite},
      {"labeled cycle", cycle_matrix({3, 3, 4}), SubsetType::Indefinite},
      {"square cycle with four", cycle_matrix({3, 4, 3, 4}), SubsetType::Indefinite},
      {"theta graph",
       [] {
         CoxeterMatrix m(4);
         m.set_order(0, 1, 3);
         m.set_order(1, 2, 3);
         m.set_order(2, 3, 3);
         m.set_order(3, 0, 3);
         m.set_order(0, 2, 3);
         return m;
       }(),
       SubsetType::Indefinite},
      {"branch with infinity", tree_matrix(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 0}}),
       SubsetType::Indefinite},
      {"arms 2,2,3",
       tree_matrix(8,
                   {{0, 1, 3}, {1, 2, 3}, {0, 3, 3}, {3, 4, 3}, {0, 5, 3}, {5, 6, 3}, {6, 7, 3}}),
       SubsetType::Indefinite},
      {"arms 1,3,4",
       tree_matrix(9,
                   {{0, 1, 3},
                    {0, 2, 3},
                    {2, 3, 3},
                    {3, 4, 3},
                    {0, 5, 3},
                    {5, 6, 3},
                    {6, 7, 3},
                    {7, 8, 3}}),
       SubsetType::Indefinite},
      {"arms 1,2,6",
       tree_matrix(10,
                   {{0, 1, 3},
                    {0, 2, 3},
                    {2, 3, 3},
                    {0, 4, 3},
                    {4, 5, 3},
                    {5, 6, 3},
                    {6, 7, 3},
                    {7, 8, 3},
                    {8, 9, 3}}),
       SubsetType::Indefinite},
      {"four beside the branch", tree_matrix(5, {{0, 1, 3}, {0, 2, 3}, {0, 3, 4}, {3, 4, 3}}),
       SubsetType::Indefinite},
      {"four on a short arm", tree_matrix(5, {{0, 1, 4}, {0, 2, 3}, {0, 3, 3}, {3, 4, 3}}),
       SubsetType::Indefinite},
      {"five-leaf star",
       tree_matrix(6, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}, {0, 5, 3}}),
       SubsetType::Indefinite},
      {"deg-4 star with tail",
       tree_matrix(6, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}, {4, 5, 3}}),
       SubsetType::Indefinite},
      {"forks with a four between",
       tree_matrix(7, {{0, 1, 3}, {0, 2, 3}, {0, 3, 4}, {3, 4, 3}, {4, 5, 3}, {4, 6, 3}}),
       SubsetType::Indefinite},
      {"three forks",
       tree_matrix(8,
                   {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {3, 4, 3}, {3, 5, 3}, {5, 6, 3}, {5, 7, 3}}),
       SubsetType::Indefinite},
  };

  for (const Case& c : cases) {
    CAPTURE(c.name);
    std::vector<Gen> all;
    for (int i = 0; i < c.m.rank(); ++i) all.push_back(i);
    const SubsetType got = classify_connected_diagram(c.m, all);
    CHECK(got == c.expected);

    const oracle::GramClass ref = oracle::gram_classify(c.m, all);
    const oracle::GramClass want = c.expected == SubsetType::Spherical
                                       ? oracle::GramClass::PosDef
                                       : c.expected == SubsetType::Affine
                                             ? oracle::GramClass::PosSemi
                                             : oracle::GramClass::Indefinite;
    CHECK(ref == want);
  }

  // Proper subsets classify through the system interface.
  CoxeterSystem f4aff(path_matrix({3, 4, 3, 3}));
  CHECK(f4aff.classify_subset(GeneratorSet{0, 1, 2, 3})[0].second ==
        SubsetType::Spherical);
  CHECK(f4aff.classify_subset(GeneratorSet::full(5))[0].second == SubsetType::Affine);
}

TEST_CASE("generator conjugacy classes") {
  CoxeterSystem a3(path_matrix({3, 3}));
  CHECK(a3.generator_class_count() == 1);
  CHECK(a3.generator_class(0) == a3.generator_class(2));

  CoxeterSystem b3(path_matrix({4, 3}));
  CHECK(b3.generator_class_count() == 2);
  CHECK(b3.generator_class(0) == 0);
  CHECK(b3.generator_class(1) == 1);
  CHECK(b3.generator_class(2) == 1);

  CoxeterSystem f4(path_matrix({3, 4, 3}));
  CHECK(f4.generator_class_count() == 2);
  CHECK(f4.generator_class(0) == f4.generator_class(1));
  CHECK(f4.generator_class(2) == f4.generator_class(3));
  CHECK(f4.generator_class(1) != f4.generator_class(2));

  // An infinite bond keeps the endpoints in distinct classes.
  CoxeterSystem aff(path_matrix({0}));
  CHECK(aff.generator_class_count() == 2);

  CoxeterSystem i7(path_matrix({7}));
  CHECK(i7.generator_class_count() == 1);
}

TEST_CASE("longest elements and parabolic subgroups") {
  CoxeterSystem a3(path_matrix({3, 3}));
  CHECK(a3.longest_element(GeneratorSet{0}).word() == Word{0});
  CHECK(a3.longest_element(GeneratorSet{0, 1}).word() == Word{0, 1, 0});
  CHECK(a3.longest_element(GeneratorSet{0, 2}).word() == Word{0, 2});
  CHECK(a3.longest_element(GeneratorSet{}).is_identity());

  auto p = a3.parabolic_group(GeneratorSet{0, 2});
  REQUIRE(p.size() == 4);
  CHECK(p[0].is_identity());
  CHECK(p[3].word() == Word{0, 2});

  CHECK(a3.subgroup_ball(GeneratorSet{0, 1}, 10).size() == 6);
  CHECK(a3.subgroup_ball(GeneratorSet{}, 3).size() == 1);

  CoxeterSystem aff(path_matrix({0}));
  CHECK(code_of([&] { (void)aff.parabolic_group(GeneratorSet::full(2)); }) ==
        ErrorCode::NotSpherical);
}

TEST_CASE("fixed subsets under conjugation") {
  CoxeterSystem a2(path_matrix({3}));
  const Element sts = a2.normalize({0, 1, 0});
  CHECK(a2.K_of(GeneratorSet{0}, sts).empty());
  CHECK(a2.K_of(GeneratorSet::full(2), sts) == GeneratorSet::full(2));
  CHECK(a2.K_of(GeneratorSet{0}, a2.identity()) == GeneratorSet{0});

  CoxeterSystem a3(path_matrix({3, 3}));
  CHECK(a3.K_of(GeneratorSet{0}, a3.generator(2)) == GeneratorSet{0});
  // Conjugating {0,1} by the long element of {0,1} swaps the two.
  CHECK(a3.K_of(GeneratorSet{0, 1}, a3.normalize({0, 1, 0})) == GeneratorSet{0, 1});
}

TEST_CASE("system extension with an infinite generator") {
  CoxeterSystem a2(path_matrix({3}));
  CoxeterSystem ext = a2.extend_with_infinite_generator(GeneratorSet{0});
  REQUIRE(ext.rank() == 3);
  CHECK(ext.matrix().order(0, 1) == 3);
  CHECK(ext.matrix().order(2, 0) == 2);
  CHECK(ext.matrix().order(2, 1) == 0);

  CoxeterSystem ext2 = a2.extend_with_infinite_generator(GeneratorSet{});
  CHECK(ext2.matrix().order(2, 0) == 0);
  CHECK(ext2.matrix().order(2, 1) == 0);
}

TEST_CASE("word cache") {
  CoxeterSystem w(path_matrix({3, 3}));
  CHECK(w.cache_size() == 0);
  (void)w.normalize({0, 1, 0, 1});
  const std::size_t after_one = w.cache_size();
  CHECK(after_one > 0);

  auto dump = w.export_cache();
  CHECK(dump.size() == after_one);

  CoxeterSystem fresh(path_matrix({3, 3}));
  fresh.import_cache(dump);
  CHECK(fresh.cache_size() == after_one);
  CHECK(fresh.normalize({0, 1, 0, 1}) == w.normalize({0, 1, 0, 1}));

  CHECK(code_of([&] { fresh.import_cache({{{7}, {}}}); }) == ErrorCode::BadConfig);
  CHECK(code_of([&] { fresh.import_cache({{{0}, {0, 1, 0}}}); }) ==
        ErrorCode::BadConfig);

  w.clear_cache();
  CHECK(w.cache_size() == 0);

  w.set_cache_cap(8);
  std::mt19937 rng(2024);
  for (int i = 0; i < 50; ++i) (void)w.normalize(random_word(rng, 3, 8));
  CHECK(w.cache_size() <= 8);

  // Capped and uncapped systems agree.
  CoxeterSystem capped(path_matrix({3, 3}));
  capped.set_cache_cap(2);
  std::mt19937 rng2(99);
  for (int i = 0; i < 60; ++i) {
    const Word u = random_word(rng2, 3, static_cast<int>(rng2() % 12));
    CHECK(capped.normalize(u) == w.normalize(u));
  }
}
