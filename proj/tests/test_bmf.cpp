#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "hurwitzkit/bmf.hpp"

using namespace hurwitzkit;

namespace {

std::vector<SurfaceParams> all_params(int lo, int hi) {
  std::vector<SurfaceParams> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c)
        for (int d = lo; d <= hi; ++d) out.push_back({a, b, c, d});
  return out;
}

std::int64_t count_kind(const BmfFactorization& f, Twist::Kind kind) {
  std::int64_t n = 0;
  for (const auto& x : f.factors()) n += x.twist.kind == kind;
  return n;
}

}  // namespace

TEST(Bmf, CountsAt3333) {
  Counts n = surface_counts({3, 3, 3, 3});
  EXPECT_EQ(n.m, 72);
  EXPECT_EQ(n.k, 216);
  EXPECT_EQ(n.nu, 72);
  EXPECT_EQ(n.t_f, 60);
  EXPECT_EQ(n.t_g, 60);
  EXPECT_EQ(n.t, 312);
  EXPECT_EQ(n.g_R, 241);
  EXPECT_EQ(n.chi, 34);
  EXPECT_EQ(n.K2, 128);
  EXPECT_EQ(n.r, 4);
  EXPECT_EQ(n.dim_lower, 10 * 34 - 2 * 128);
  EXPECT_EQ(n.dim_upper, 10 * 34 + 3 * 128 + 108);
  EXPECT_EQ(n.weighted_p, 36);
  EXPECT_EQ(n.weighted_q, 36);
}

TEST(Bmf, CountsAt1221) {
  Counts n = surface_counts({1, 2, 2, 1});
  EXPECT_EQ(n.m, 20);
  EXPECT_EQ(n.k, 60);
  EXPECT_EQ(n.nu, 12);
  EXPECT_EQ(n.t_f, 12);
  EXPECT_EQ(n.t_g, 8);
  EXPECT_EQ(n.t, 60);
  EXPECT_EQ(n.weighted_p, 6);
  EXPECT_EQ(n.weighted_q, 6);
  Counts m = surface_counts({2, 1, 1, 2});
  EXPECT_EQ(m.weighted_p, 6);
  EXPECT_EQ(m.weighted_q, 6);
}

TEST(Bmf, CountIdentities) {
  for (const auto& p : all_params(1, 6)) {
    Counts n = surface_counts(p);
    const std::int64_t a = p.a, b = p.b, c = p.c, d = p.d;
    ASSERT_EQ(n.K2 % 8, 0);
    ASSERT_EQ(n.chi - n.K2 / 8, a * b + c * d) << p.to_string();
    ASSERT_EQ(n.g_R, 1 + 8 * (a + c) * (b + d) - 4 * (a + b + c + d)) << p.to_string();
    ASSERT_EQ(n.weighted_p + n.weighted_q, 8 * (a * b + c * d) - 4 * (a * d + b * c));
    ASSERT_EQ(n.k, 3 * n.m);
  }
  EXPECT_THROW(surface_counts({0, 1, 1, 1}), std::invalid_argument);
}

TEST(Bmf, CensusOverParameterBox) {
  for (const auto& p : all_params(1, 6)) {
    BmfFactorization f = generate_bmf(p);
    Census c;
    ASSERT_NO_THROW(c = verify_census(f)) << p.to_string();
    Counts n = surface_counts(p);
    const std::int64_t a = p.a, b = p.b, c_ = p.c, d = p.d;
    // Cusps: 2a*2d*3 from beta_fg plus 2c*2b*3 from beta_gf.
    ASSERT_EQ(c.cusps, 2 * a * 2 * d * 3 + 2 * c_ * 2 * b * 3);
    ASSERT_EQ(c.cusps, n.k);
    ASSERT_EQ(c.tangencies, 8 * a * (2 * b - 1) + 8 * c_ * (2 * d - 1) + 4 * (a * d + b * c_));
    ASSERT_EQ(c.tangencies, n.t);
    ASSERT_EQ(c.weighted_p, n.weighted_p);
    ASSERT_EQ(c.weighted_q, n.weighted_q);
    ASSERT_EQ(c.untagged_full_twists, 0);
    ASSERT_EQ(static_cast<std::int64_t>(f.length()), expected_bmf_length(p));
    ASSERT_EQ(c.total, c.cusps + c.tangencies + c.pos_nodes + c.neg_nodes);
  }
}

TEST(Bmf, CensusDetectsTamperedFactorization) {
  BmfFactorization f = generate_bmf({3, 3, 3, 3});
  f.blocks.front().factors.front().exp = 3;
  EXPECT_THROW(verify_census(f), CensusMismatch);
  BmfFactorization g = generate_bmf({3, 3, 3, 3});
  g.blocks.back().factors.push_back({Twist::two(Twist::Kind::kA, 1, 2), 2, {}});
  EXPECT_THROW(verify_census(g), CensusMismatch);
}

TEST(Bmf, GeomTypeBijection) {
  for (int e : {1, 2, -2, 3}) EXPECT_EQ(exponent_of(geom_type_of(e)), e);
  EXPECT_EQ(geom_type_of(1), GeomType::kTangency);
  EXPECT_EQ(geom_type_of(2), GeomType::kPosNode);
  EXPECT_EQ(geom_type_of(-2), GeomType::kNegNode);
  EXPECT_EQ(geom_type_of(3), GeomType::kCusp);
  EXPECT_THROW(geom_type_of(-1), std::invalid_argument);
  EXPECT_THROW(geom_type_of(0), std::invalid_argument);
}

TEST(Bmf, BlockStructure) {
  const SurfaceParams p{3, 2, 4, 3};
  BmfFactorization f = generate_bmf(p);
  std::map<std::string, int> blocks;
  for (const auto& b : f.blocks) {
    ++blocks[b.kind];
    // The sign of the full twists is constant inside a block.
    int sign = 0;
    for (const auto& x : b.factors)
      if (x.is_full_twist()) {
        if (sign == 0) sign = x.exp;
        EXPECT_EQ(x.exp, sign) << b.kind;
      }
  }
  EXPECT_EQ(blocks["beta_f"], 2 * p.a * (2 * p.b - 1));
  EXPECT_EQ(blocks["p1_twists"], 2 * p.a);  // |2b-d| = 1
  EXPECT_EQ(blocks["beta_fg"], 2 * p.a * 2 * p.d);
  EXPECT_EQ(blocks["p_block"], 2);  // |2a-c|
  EXPECT_EQ(blocks["q_block"], 5);  // |2c-a|
  EXPECT_EQ(blocks["beta_g"], 2 * p.c * (2 * p.d - 1));
  EXPECT_EQ(blocks["q1_twists"], 2 * p.c);  // |2d-b| = 4
  EXPECT_EQ(blocks["beta_gf"], 2 * p.c * 2 * p.b);
  for (const auto& b : f.blocks)
    if (b.kind.starts_with("beta")) EXPECT_EQ(b.factors.size(), 4u);
  for (const auto& b : f.blocks)
    if (b.kind == "p1_twists") EXPECT_EQ(b.factors.front().exp, 2);
  // 2b-d < 0 and 2a-c < 0 give negative twists.
  for (const auto& b : generate_bmf({1, 1, 3, 3}).blocks)
    if (b.kind == "p1_twists" || b.kind == "p_block") EXPECT_EQ(b.factors.front().exp, -2) << b.kind;
  // beta_fg runs j from 2d down to 1.
  std::vector<int> order;
  for (const auto& b : f.blocks)
    if (b.kind == "beta_fg" && b.repetition == 1) order.push_back(b.index);
  EXPECT_EQ(order, (std::vector<int>{6, 5, 4, 3, 2, 1}));
}

TEST(Bmf, ElementaryFactorizations) {
  BmfFactorization f = generate_bmf({3, 3, 3, 3});
  for (const auto& b : f.blocks) {
    if (b.kind == "beta_f") {
      ASSERT_EQ(b.factors.size(), 4u);
      EXPECT_EQ(b.factors[0].twist, Twist::two(Twist::Kind::kA, 1, b.index));
      EXPECT_EQ(b.factors[1].twist, Twist::two(Twist::Kind::kC, 1, b.index));
      ASSERT_EQ(b.factors[1].conj.size(), 1u);
      EXPECT_EQ(b.factors[1].conj[0].first, Twist::p(1));
      EXPECT_EQ(b.factors[1].conj[0].second, 2);
      EXPECT_EQ(b.factors[0], b.factors[2]);
      EXPECT_EQ(b.factors[1], b.factors[3]);
    }
    if (b.kind == "beta_fg") {
      EXPECT_EQ(b.factors[0].exp, 3);
      EXPECT_EQ(b.factors[1].exp, 1);
      EXPECT_EQ(b.factors[1].twist.kind, Twist::Kind::kS);
      EXPECT_EQ(b.factors[2].twist, Twist::two(Twist::Kind::kUPrime, 1, b.index));
      EXPECT_EQ(b.factors[3].twist, Twist::two(Twist::Kind::kUSecond, 1, b.index));
    }
  }
  EXPECT_EQ(Twist::two(Twist::Kind::kUPrime, 1, 2).to_string(), "u'_{1,2}");
  EXPECT_EQ(Twist::p(3).to_string(), "p_3");
  EXPECT_EQ(f.blocks[0].factors[1].to_string(), "s(p_1)^2 s(c_{1,2}) s(p_1)^-2");
}

TEST(Bmf, FigureCaseHasNoPBlock) {
  BmfFactorization f = generate_bmf({1, 2, 2, 1});
  for (const auto& b : f.blocks) EXPECT_NE(b.kind, "p_block");
  EXPECT_EQ(count_kind(f, Twist::Kind::kP), 2 * 3);  // |2b-d| = 3 p1 twists, twice
  Census c = verify_census(f);
  EXPECT_EQ(c.cusps, 60);
  EXPECT_EQ(c.tangencies, 60);
  EXPECT_EQ(c.weighted_p, 6);
  EXPECT_EQ(c.weighted_q, 6);
  EXPECT_TRUE(SurfaceParams({1, 2, 2, 1}).below_hypothesis());
  EXPECT_FALSE(SurfaceParams({3, 3, 3, 3}).below_hypothesis());
}

TEST(Bmf, ExcludedCases) {
  EXPECT_TRUE(SurfaceParams({3, 3, 6, 6}).excluded_case());
  EXPECT_TRUE(SurfaceParams({6, 4, 3, 2}).excluded_case());
  EXPECT_FALSE(SurfaceParams({3, 3, 6, 5}).excluded_case());
  EXPECT_FALSE(SurfaceParams({3, 3, 3, 3}).excluded_case());
}

TEST(Bmf, TwistWordsUseBandConvention) {
  const SurfaceParams p{3, 2, 3, 2};
  const int n = strand_count(p);
  ASSERT_EQ(n, 16);
  // p_i swaps the B-pair at 4d+2i-1, q_j the D-pair at 4d-2j+1.
  EXPECT_EQ(word_permutation(*twist_word(Twist::p(1), p)), Perm::transposition(n, 9, 10));
  EXPECT_EQ(word_permutation(*twist_word(Twist::p(4), p)), Perm::transposition(n, 15, 16));
  EXPECT_EQ(word_permutation(*twist_word(Twist::q(1), p)), Perm::transposition(n, 7, 8));
  EXPECT_EQ(word_permutation(*twist_word(Twist::q(4), p)), Perm::transposition(n, 1, 2));
  EXPECT_EQ(word_permutation(*twist_word(Twist::two(Twist::Kind::kA, 1, 3), p)), Perm::transposition(n, 9, 13));
  EXPECT_EQ(word_permutation(*twist_word(Twist::two(Twist::Kind::kUSecond, 2, 3), p)), Perm::transposition(n, 4, 12));
  EXPECT_FALSE(twist_word(Twist::two(Twist::Kind::kU, 1, 1), p).has_value());
  EXPECT_FALSE(twist_word(Twist::two(Twist::Kind::kS, 1, 1), p).has_value());
  EXPECT_THROW(twist_word(Twist::p(5), p), std::out_of_range);
  EXPECT_THROW(twist_word(Twist::q(0), p), std::out_of_range);
}

TEST(Bmf, RealizedFactorsActTriviallyOnTau0) {
  for (const SurfaceParams& p : {SurfaceParams{3, 3, 3, 3}, SurfaceParams{1, 2, 2, 1}, SurfaceParams{2, 1, 3, 2}}) {
    int trivial = 0, skipped = 0;
    for (const auto& x : generate_bmf(p).factors()) {
      auto s = realize_s4_trivial_action(x, p);
      ASSERT_NE(s, RealizationStatus::kNontrivial) << x.to_string() << " " << p.to_string();
      (s == RealizationStatus::kTrivial ? trivial : skipped)++;
    }
    EXPECT_GT(trivial, 0);
    EXPECT_EQ(skipped, 2 * (2 * p.a * 2 * p.d + 2 * p.c * 2 * p.b));  // u and s in each cusp block
  }
}

TEST(Bmf, RealizationExamples) {
  const SurfaceParams p{2, 2, 2, 2};
  EXPECT_EQ(realize_s4_trivial_action({Twist::p(1), 2, {}}, p), RealizationStatus::kTrivial);
  EXPECT_EQ(realize_s4_trivial_action({Twist::two(Twist::Kind::kUPrime, 1, 1), 3, {}}, p), RealizationStatus::kTrivial);
  EXPECT_EQ(realize_s4_trivial_action({Twist::two(Twist::Kind::kA, 1, 2), 1, {}}, p), RealizationStatus::kTrivial);
  EXPECT_EQ(realize_s4_trivial_action({Twist::two(Twist::Kind::kS, 1, 1), 1, {}}, p), RealizationStatus::kSkipped);
  // A single half twist on a pair is not in the stabilizer.
  EXPECT_EQ(realize_s4_trivial_action({Twist::p(1), 1, {}}, p), RealizationStatus::kNontrivial);
  // The realized word of a conjugated factor is the conjugate of its body.
  BmfFactor y{Twist::two(Twist::Kind::kC, 1, 2), 1, {{Twist::p(1), 2}}};
  BraidWord w = *realize_factor_word(y, p);
  EXPECT_EQ(w.exponent_sum(), 1);
  EXPECT_EQ(word_permutation(w), word_permutation(*twist_word(y.twist, p)));
}

TEST(Bmf, CuspClusterProducts) {
  CuspCluster c = cusp_cluster_factorization();
  ASSERT_EQ(c.target.size(), 4u);
  EXPECT_EQ(c.target.product(), artin_rep(c.product_word));
  EXPECT_EQ(c.cusps_first.product(), artin_rep(c.product_word));
  BraidWord concat(4);
  for (const auto& w : c.target_words) concat.append(w);
  EXPECT_TRUE(braid_equal(concat, c.product_word));
  // Three cubes and one conjugate of a single twist.
  int cubes = 0, singles = 0;
  for (const auto& w : c.target_words) {
    if (w.exponent_sum() == 3) ++cubes;
    if (w.exponent_sum() == 1) ++singles;
  }
  EXPECT_EQ(cubes, 3);
  EXPECT_EQ(singles, 1);
}

TEST(Bmf, CuspClusterSearch) {
  CuspCluster c = cusp_cluster_factorization();
  SearchOptions opts;
  opts.max_depth = 6;
  auto r = orbit_search(c.cusps_first, c.target, opts);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_LE(r.path.size(), 6u);
  EXPECT_EQ(apply_path(c.cusps_first, r.path), c.target);
}

TEST(Bmf, TangentCluster) {
  auto words = tangent_cluster_words();
  auto f = tangent_cluster_factorization();
  ASSERT_EQ(f.size(), 4u);
  for (const auto& w : words) EXPECT_EQ(w.exponent_sum(), 1);
  EXPECT_EQ(f[0], f[2]);
  EXPECT_EQ(f[1], f[3]);
  EXPECT_NE(f[0], f[1]);
  BraidWord concat(4);
  for (const auto& w : words) concat.append(w);
  EXPECT_EQ(f.product(), artin_rep(concat));
  // Each factor is a conjugate of a generator: x s x^-1 with the matching permutation.
  EXPECT_EQ(word_permutation(words[0]), Perm::transposition(4, 2, 4));
  EXPECT_EQ(word_permutation(words[1]), Perm::transposition(4, 1, 3));
}

TEST(Bmf, Distinguishability) {
  auto r = distinguishable(abc_surface(2, 3, 4), abc_surface(3, 3, 3));
  EXPECT_EQ(r.verdict, Distinguishability::kDistinguished);
  EXPECT_NE(std::find(r.differing.begin(), r.differing.end(), "ab"), r.differing.end());
  for (const char* same : {"a+c", "b+d", "chi", "K2", "r"})
    EXPECT_EQ(std::find(r.differing.begin(), r.differing.end(), same), r.differing.end()) << same;
  EXPECT_EQ(distinguishable(abc_surface(2, 3, 4), abc_surface(4, 3, 2)).verdict,
            Distinguishability::kTriviallyEquivalent);
  EXPECT_EQ(distinguishable(abc_surface(3, 3, 3), abc_surface(3, 3, 3)).verdict,
            Distinguishability::kTriviallyEquivalent);
  EXPECT_EQ(distinguishable({3, 4, 5, 6}, {5, 6, 3, 4}).verdict, Distinguishability::kTriviallyEquivalent);
  // Same profile up to the swap without being the swap itself.
  auto u = distinguishable({2, 3, 2, 1}, {3, 2, 1, 2});
  EXPECT_EQ(u.verdict, Distinguishability::kUndetermined);
  EXPECT_TRUE(u.differing.empty());
}

TEST(Bmf, AbcInvariants) {
  for (int b = 1; b <= 6; ++b)
    for (int s = 2; s <= 12; ++s) {
      std::vector<Counts> cs;
      for (int a = 1; a < s; ++a) cs.push_back(surface_counts(abc_surface(a, b, s - a)));
      for (const auto& n : cs) {
        EXPECT_EQ(n.weighted_p + n.weighted_q, cs.front().weighted_p + cs.front().weighted_q);
        EXPECT_EQ(n.chi, cs.front().chi);
        EXPECT_EQ(n.K2, cs.front().K2);
        EXPECT_EQ(n.r, cs.front().r);
      }
    }
}
