#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "hurwitzkit/hurwitz.hpp"
#include "hurwitzkit/s4orbit.hpp"

using namespace hurwitzkit;

namespace {

Perm tr(int n, int i, int j) { return Perm::transposition(n, i, j); }

Factorization<Perm> random_transposition_factorization(int n, int len, std::mt19937_64& rng) {
  std::vector<Perm> v;
  for (int k = 0; k < len; ++k) {
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    if (j >= i) ++j;
    v.push_back(tr(n, i, j));
  }
  return Factorization<Perm>(v);
}

// Conjugacy classes of S4 by brute force over all conjugators.
std::map<Perm, std::set<Perm>> s4_classes() {
  std::map<Perm, std::set<Perm>> out;
  auto all = symmetric_group(4);
  for (const auto& x : all) {
    std::set<Perm> cls;
    for (const auto& g : all) cls.insert(g.inverse() * x * g);
    out[x] = cls;
  }
  return out;
}

}  // namespace

TEST(Hurwitz, ForwardAndInverseMoves) {
  Factorization<Perm> f({tr(3, 1, 2), tr(3, 2, 3)});
  auto g = hurwitz_move(f, 1, MoveDirection::kForward);
  EXPECT_EQ(g[0], tr(3, 1, 3));
  EXPECT_EQ(g[1], tr(3, 1, 2));
  auto h = hurwitz_move(f, 1, MoveDirection::kInverse);
  EXPECT_EQ(h[0], tr(3, 2, 3));
  EXPECT_EQ(h[1], tr(3, 1, 3));
  EXPECT_EQ(hurwitz_move(g, 1, MoveDirection::kInverse), f);
  EXPECT_THROW(hurwitz_move(f, 2, MoveDirection::kForward), std::out_of_range);
  EXPECT_THROW(hurwitz_move(f, 0, MoveDirection::kForward), std::out_of_range);
}

TEST(Hurwitz, EmptyProductThrows) {
  EXPECT_THROW(Factorization<Perm>().product(), std::logic_error);
}

TEST(Hurwitz, MovesPreserveProductAndSatisfyBraidRelations) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = random_transposition_factorization(5, 6, rng);
    const Perm prod = f.product();
    for (int k = 0; k < 10; ++k) {
      int i = 1 + static_cast<int>(rng() % 5);
      f = hurwitz_move(f, i, rng() % 2 ? MoveDirection::kForward : MoveDirection::kInverse);
      ASSERT_EQ(f.product(), prod);
    }
    ASSERT_EQ(act_word(f, BraidWord(6, {1, 2, 1})), act_word(f, BraidWord(6, {2, 1, 2})));
    ASSERT_EQ(act_word(f, BraidWord(6, {1, 4})), act_word(f, BraidWord(6, {4, 1})));
    ASSERT_EQ(act_word(f, BraidWord(6, {3, -3})), f);
  }
}

TEST(Hurwitz, ConjugationCommutesWithMoves) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_transposition_factorization(4, 5, rng);
    Perm g = symmetric_group(4)[rng() % 24];
    int i = 1 + static_cast<int>(rng() % 4);
    EXPECT_EQ(simultaneous_conjugate(hurwitz_move(f, i, MoveDirection::kForward), g),
              hurwitz_move(simultaneous_conjugate(f, g), i, MoveDirection::kForward));
  }
}

TEST(Hurwitz, RotateToFront) {
  Factorization<Perm> f({tr(4, 1, 2), tr(4, 2, 3), tr(4, 3, 4), tr(4, 1, 4)});
  for (int h = 1; h <= 4; ++h) {
    auto g = rotate_to_front(f, h);
    EXPECT_EQ(g[0], f[static_cast<std::size_t>(h - 1)]);
    EXPECT_EQ(g.product(), f.product());
  }
  EXPECT_THROW(rotate_to_front(f, 5), std::out_of_range);
}

TEST(Hurwitz, StableInsertAndCancel) {
  StableContext<Perm> ctx{{tr(4, 1, 2)}};
  Factorization<Perm> f({tr(4, 2, 3), tr(4, 3, 4)});
  auto g = stable_insert(f, 2, tr(4, 1, 2), ctx);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[1], tr(4, 1, 2));
  EXPECT_EQ(g.product(), f.product());
  EXPECT_EQ(stable_cancel(g, 2, ctx), f);
  EXPECT_THROW(stable_insert(f, 1, tr(4, 1, 3), ctx), std::invalid_argument);
  EXPECT_THROW(stable_insert(f, 4, tr(4, 1, 2), ctx), std::out_of_range);
  EXPECT_THROW(stable_cancel(f, 1, ctx), std::invalid_argument);
  Factorization<Perm> other({tr(4, 1, 3), tr(4, 1, 3)});
  EXPECT_THROW(stable_cancel(other, 1, ctx), std::invalid_argument);
}

TEST(Hurwitz, Closure) {
  EXPECT_EQ(closure(std::vector<Perm>{tr(4, 1, 2), Perm::from_cycles(4, {{1, 2, 3, 4}})}).size(), 24u);
  auto t0 = tau0(1, 1);
  EXPECT_EQ(generated_subgroup(t0.as_factorization()).size(), 24u);
  EXPECT_EQ(closure(std::vector<Perm>{tr(4, 1, 2), tr(4, 3, 4)}).size(), 4u);
  EXPECT_THROW(closure(std::vector<Perm>{tr(5, 1, 2), Perm::from_cycles(5, {{1, 2, 3, 4, 5}})}, 50),
               ClosureCapExceeded);
  EXPECT_TRUE(closure(std::vector<Perm>{tr(4, 1, 2)}).front().is_identity());
}

TEST(Hurwitz, ClassCountsAgainstBruteForceTable) {
  const auto table = s4_classes();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Perm> v;
    auto all = symmetric_group(4);
    for (int k = 0; k < 6; ++k) v.push_back(all[rng() % 24]);
    v.push_back(tr(4, 1, 2));
    v.push_back(Perm::from_cycles(4, {{1, 2, 3, 4}}));  // generate all of S4
    Factorization<Perm> f(v);
    auto cc = class_count_function(f);
    ASSERT_EQ(cc.group_order, 24u);
    std::map<std::set<Perm>, int> expect;
    for (const auto& x : v) ++expect[table.at(x)];
    ASSERT_EQ(cc.classes.size(), expect.size());
    for (const auto& e : cc.classes) {
      const auto& cls = table.at(e.representative);
      EXPECT_EQ(e.class_size, cls.size());
      EXPECT_EQ(e.count, expect.at(cls));
    }
    // Every class of S4 is closed under inversion.
    EXPECT_TRUE(cc.signed_counts.empty());
  }
}

TEST(Hurwitz, ClassCountOfTau0) {
  // All eight factors lie in the one class of transpositions.
  auto cc = class_count_function(tau0(1, 1).as_factorization());
  ASSERT_EQ(cc.classes.size(), 1u);
  EXPECT_EQ(cc.classes[0].count, 8);
  EXPECT_EQ(cc.classes[0].class_size, 6u);
}

TEST(Hurwitz, SignedCountsInCyclicGroup) {
  Perm c = Perm::from_cycles(3, {{1, 2, 3}});
  Factorization<Perm> f({c, c, c.inverse()});
  auto cc = class_count_function(f);
  EXPECT_EQ(cc.group_order, 3u);
  ASSERT_EQ(cc.signed_counts.size(), 1u);
  EXPECT_EQ(cc.signed_counts[0].positive, c);
  EXPECT_EQ(cc.signed_counts[0].value, 1);
}

TEST(Hurwitz, ClassCountsInvariantUnderMoves) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_transposition_factorization(5, 6, rng);
    auto before = class_count_function(f);
    f = act_word(f, BraidWord(6, {1, -3, 5, 2, 2, -4}));
    auto after = class_count_function(f);
    std::map<std::vector<int>, int> a, b;
    for (const auto& e : before.classes) a[e.representative.cycle_type()] += e.count;
    for (const auto& e : after.classes) b[e.representative.cycle_type()] += e.count;
    EXPECT_EQ(a, b);
    EXPECT_EQ(before.group_order, after.group_order);
  }
}

TEST(Hurwitz, OrbitSearchFindsScrambledStart) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto target = random_transposition_factorization(4, 4, rng);
    BraidWord w(4);
    for (int k = 0; k < 3; ++k) w.push((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 3)));
    auto start = act_word(target, w);
    SearchOptions opts;
    opts.max_depth = 3;
    auto r = orbit_search(start, target, opts);
    ASSERT_EQ(r.status, SearchStatus::kFound);
    EXPECT_LE(r.path.size(), 3u);
    EXPECT_EQ(apply_path(start, r.path), target);
  }
}

TEST(Hurwitz, OrbitSearchStatuses) {
  Factorization<Perm> a({tr(4, 1, 2), tr(4, 3, 4)});
  Factorization<Perm> b({tr(4, 1, 2), tr(4, 1, 3)});
  EXPECT_EQ(orbit_search(a, b).status, SearchStatus::kProductMismatch);
  EXPECT_EQ(orbit_search(a, Factorization<Perm>({tr(4, 1, 2)})).status, SearchStatus::kLengthMismatch);
  Factorization<Perm> c({tr(4, 3, 4), tr(4, 1, 2)});
  SearchOptions zero;
  zero.max_depth = 0;
  EXPECT_EQ(orbit_search(a, c, zero).status, SearchStatus::kNotFoundWithinBudget);
  auto found = orbit_search(a, c);
  EXPECT_EQ(found.status, SearchStatus::kFound);
  EXPECT_EQ(found.path.size(), 1u);
  EXPECT_EQ(orbit_search(a, a).path.size(), 0u);
}

TEST(Hurwitz, OrbitSearchWithConjugation) {
  Factorization<Perm> a({tr(4, 1, 2), tr(4, 1, 2)});
  Factorization<Perm> b({tr(4, 3, 4), tr(4, 3, 4)});
  std::vector<Perm> conj{Perm::from_cycles(4, {{1, 3}, {2, 4}})};
  EXPECT_EQ(orbit_search(a, b).status, SearchStatus::kNotFoundWithinBudget);
  auto r = orbit_search(a, b, SearchOptions{}, conj);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ(apply_path(a, r.path, conj), b);
}
