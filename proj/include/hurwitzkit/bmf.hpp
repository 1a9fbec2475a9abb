#pragma once

// Vertical braid monodromy factorizations of (a,b,c,d)-surfaces: the count
// formulas, the symbolic block factorization, its census, braid-word
// realization of the textually defined twists, the two local cluster
// factorizations and the stable-invariant comparison of parameter sets.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitzkit/braid.hpp"
#include "hurwitzkit/hurwitz.hpp"
#include "hurwitzkit/s4orbit.hpp"

namespace hurwitzkit {

struct SurfaceParams {
  int a = 3;
  int b = 3;
  int c = 3;
  int d = 3;

  void validate() const {
    if (a < 1 || b < 1 || c < 1 || d < 1) throw std::invalid_argument("SurfaceParams: a, b, c, d must be positive");
  }
  // Parameters below 3 are accepted for small examples but lie outside the
  // range where the surfaces are constructed.
  bool below_hypothesis() const { return a < 3 || b < 3 || c < 3 || d < 3; }
  // c = 2a, d = 2b or a = 2c, b = 2d: the generator set of the stabilized
  // monodromy group is not established in these cases.
  bool excluded_case() const { return (c == 2 * a && d == 2 * b) || (a == 2 * c && b == 2 * d); }

  SurfaceParams swapped() const { return {c, d, a, b}; }
  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;

  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
  }
};

// abc-surfaces are the case d = b.
inline SurfaceParams abc_surface(int a, int b, int c) { return {a, b, c, b}; }

struct Counts {
  std::int64_t m = 0;   // proper nodes
  std::int64_t k = 0;   // cusps
  std::int64_t nu = 0;  // signed node count nu+ - nu-
  std::int64_t t_f = 0;
  std::int64_t t_g = 0;
  std::int64_t t = 0;   // vertical tangents
  std::int64_t g_R = 0;
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
  std::int64_t r = 0;   // divisibility of the canonical class
  std::int64_t dim_lower = 0;
  std::int64_t dim_upper = 0;
  std::int64_t weighted_p = 0;
  std::int64_t weighted_q = 0;
};

inline Counts surface_counts(const SurfaceParams& p) {
  p.validate();
  const std::int64_t a = p.a, b = p.b, c = p.c, d = p.d;
  Counts n;
  n.m = 4 * (a * d + b * c);
  n.k = 12 * (a * d + b * c);
  n.nu = 4 * (2 * a * b + 2 * c * d - a * d - b * c);
  n.t_f = 4 * (2 * a * b - a);
  n.t_g = 4 * (2 * c * d - c);
  n.t = 2 * n.t_f + 2 * n.t_g + n.m;
  n.g_R = 1 + 16 * (a + c) * (b + d) - 4 * (a + b + c + d) - n.k - n.nu;
  n.chi = 1 + (a - 1) * (b - 1) + (c - 1) * (d - 1) + (a + c - 1) * (b + d - 1);
  n.K2 = 8 * (a + c - 2) * (b + d - 2);
  n.r = std::gcd(a + c - 2, b + d - 2);
  n.dim_lower = 10 * n.chi - 2 * n.K2;
  n.dim_upper = 10 * n.chi + 3 * n.K2 + 108;
  n.weighted_p = 8 * a * b - 2 * (a * d + b * c);
  n.weighted_q = 8 * c * d - 2 * (a * d + b * c);
  return n;
}

// ---------------------------------------------------------------------------
// Symbolic factors.

struct Twist {
  // kUPrime, kUSecond are u' and u''.
  enum class Kind { kP, kQ, kA, kB, kC, kD, kU, kUPrime, kUSecond, kS };
  Kind kind = Kind::kP;
  int i = 0;  // p_i, or the first index of a two-index twist
  int j = 0;  // q_j uses j only; two-index twists x_{ij}

  static Twist p(int i) { return {Kind::kP, i, 0}; }
  static Twist q(int j) { return {Kind::kQ, 0, j}; }
  static Twist two(Kind k, int i, int j) { return {k, i, j}; }

  friend bool operator==(const Twist&, const Twist&) = default;

  std::string to_string() const {
    auto ij = [&](const char* stem) { return std::string(stem) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
    switch (kind) {
      case Kind::kP: return "p_" + std::to_string(i);
      case Kind::kQ: return "q_" + std::to_string(j);
      case Kind::kA: return ij("a");
      case Kind::kB: return ij("b");
      case Kind::kC: return ij("c");
      case Kind::kD: return ij("d");
      case Kind::kU: return ij("u");
      case Kind::kUPrime: return ij("u'");
      case Kind::kUSecond: return ij("u''");
      case Kind::kS: return ij("s");
    }
    return "?";
  }
};

enum class GeomType { kTangency, kPosNode, kNegNode, kCusp };

inline std::string to_string(GeomType g) {
  switch (g) {
    case GeomType::kTangency: return "tangency";
    case GeomType::kPosNode: return "pos_node";
    case GeomType::kNegNode: return "neg_node";
    case GeomType::kCusp: return "cusp";
  }
  return "?";
}

inline GeomType geom_type_of(int exponent) {
  switch (exponent) {
    case 1: return GeomType::kTangency;
    case 2: return GeomType::kPosNode;
    case -2: return GeomType::kNegNode;
    case 3: return GeomType::kCusp;
  }
  throw std::invalid_argument("geom_type_of: exponent must be 1, 2, -2 or 3");
}

inline int exponent_of(GeomType g) {
  switch (g) {
    case GeomType::kTangency: return 1;
    case GeomType::kPosNode: return 2;
    case GeomType::kNegNode: return -2;
    case GeomType::kCusp: return 3;
  }
  return 0;
}

// C sigma_twist^exp C^{-1}, C = product of the conjugator list.
struct BmfFactor {
  Twist twist;
  int exp = 1;
  std::vector<std::pair<Twist, int>> conj;

  GeomType geom_type() const { return geom_type_of(exp); }
  bool is_full_twist() const { return exp == 2 || exp == -2; }
  friend bool operator==(const BmfFactor&, const BmfFactor&) = default;

  std::string to_string() const {
    std::string s;
    for (const auto& [t, e] : conj) s += "s(" + t.to_string() + ")^" + std::to_string(e) + " ";
    s += "s(" + twist.to_string() + ")";
    if (exp != 1) s += "^" + std::to_string(exp);
    for (auto it = conj.rbegin(); it != conj.rend(); ++it)
      s += " s(" + it->first.to_string() + ")^" + std::to_string(-it->second);
    return s;
  }
};

struct Block {
  std::string kind;  // beta_f, p1_twists, beta_fg, p_block, q_block, beta_g, q1_twists, beta_gf
  int repetition = 0;
  int index = 0;  // i or j of an elementary factorization, 0 otherwise
  std::vector<BmfFactor> factors;
};

struct BmfFactorization {
  SurfaceParams params;
  std::vector<Block> blocks;

  std::vector<BmfFactor> factors() const {
    std::vector<BmfFactor> out;
    for (const auto& b : blocks) out.insert(out.end(), b.factors.begin(), b.factors.end());
    return out;
  }
  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.factors.size();
    return n;
  }
};

inline int sign_of(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

namespace detail {

inline std::vector<BmfFactor> chain_elementary(Twist::Kind outer, Twist::Kind inner, Twist pivot, int i) {
  // x_{1i} o [pivot^2] y_{1i} o x_{1i} o [pivot^2] y_{1i}
  BmfFactor x{Twist::two(outer, 1, i), 1, {}};
  BmfFactor y{Twist::two(inner, 1, i), 1, {{pivot, 2}}};
  return {x, y, x, y};
}

inline std::vector<BmfFactor> cusp_elementary(int i, int j) {
  return {{Twist::two(Twist::Kind::kU, i, j), 3, {}},
          {Twist::two(Twist::Kind::kS, i, j), 1, {}},
          {Twist::two(Twist::Kind::kUPrime, i, j), 3, {}},
          {Twist::two(Twist::Kind::kUSecond, i, j), 3, {}}};
}

inline std::vector<BmfFactor> repeated_full_twists(const Twist& t, int count, int sign) {
  return std::vector<BmfFactor>(static_cast<std::size_t>(count), BmfFactor{t, 2 * sign, {}});
}

}  // namespace detail

inline BmfFactorization generate_bmf(const SurfaceParams& p) {
  p.validate();
  const int a = p.a, b = p.b, c = p.c, d = p.d;
  BmfFactorization f;
  f.params = p;
  using K = Twist::Kind;

  for (int r = 1; r <= 2 * a; ++r) {
    for (int i = 2; i <= 2 * b; ++i)
      f.blocks.push_back({"beta_f", r, i, detail::chain_elementary(K::kA, K::kC, Twist::p(1), i)});
    f.blocks.push_back({"p1_twists", r, 0, detail::repeated_full_twists(Twist::p(1), std::abs(2 * b - d), sign_of(2 * b - d))});
    for (int j = 2 * d; j >= 1; --j) f.blocks.push_back({"beta_fg", r, j, detail::cusp_elementary(1, j)});
  }
  for (int r = 1; r <= std::abs(2 * a - c); ++r) {
    Block blk{"p_block", r, 0, {}};
    for (int i = 1; i <= 2 * b; ++i) blk.factors.push_back({Twist::p(i), 2 * sign_of(2 * a - c), {}});
    f.blocks.push_back(std::move(blk));
  }
  for (int r = 1; r <= std::abs(2 * c - a); ++r) {
    Block blk{"q_block", r, 0, {}};
    for (int j = 1; j <= 2 * d; ++j) blk.factors.push_back({Twist::q(j), 2 * sign_of(2 * c - a), {}});
    f.blocks.push_back(std::move(blk));
  }
  for (int r = 1; r <= 2 * c; ++r) {
    for (int j = 2; j <= 2 * d; ++j)
      f.blocks.push_back({"beta_g", r, j, detail::chain_elementary(K::kB, K::kD, Twist::q(1), j)});
    f.blocks.push_back({"q1_twists", r, 0, detail::repeated_full_twists(Twist::q(1), std::abs(2 * d - b), sign_of(2 * d - b))});
    for (int i = 2 * b; i >= 1; --i) f.blocks.push_back({"beta_gf", r, i, detail::cusp_elementary(i, 1)});
  }
  // Empty twist runs (|2b-d| = 0 etc.) carry no factors.
  std::erase_if(f.blocks, [](const Block& blk) { return blk.factors.empty(); });
  return f;
}

struct Census {
  std::int64_t cusps = 0;
  std::int64_t tangencies = 0;
  std::int64_t pos_nodes = 0;
  std::int64_t neg_nodes = 0;
  std::int64_t pos_p = 0, neg_p = 0, pos_q = 0, neg_q = 0;
  std::int64_t weighted_p = 0;
  std::int64_t weighted_q = 0;
  std::int64_t untagged_full_twists = 0;  // full twists on something other than p_i, q_j
  std::int64_t total = 0;
};

class CensusMismatch : public std::logic_error {
 public:
  explicit CensusMismatch(const std::string& what) : std::logic_error("census mismatch: " + what) {}
};

inline Census factor_census(const BmfFactorization& f) {
  Census c;
  for (const auto& blk : f.blocks) {
    for (const auto& x : blk.factors) {
      ++c.total;
      switch (x.geom_type()) {
        case GeomType::kCusp: ++c.cusps; break;
        case GeomType::kTangency: ++c.tangencies; break;
        case GeomType::kPosNode: ++c.pos_nodes; break;
        case GeomType::kNegNode: ++c.neg_nodes; break;
      }
      if (!x.is_full_twist()) continue;
      const bool pos = x.exp > 0;
      if (x.twist.kind == Twist::Kind::kP)
        ++(pos ? c.pos_p : c.neg_p);
      else if (x.twist.kind == Twist::Kind::kQ)
        ++(pos ? c.pos_q : c.neg_q);
      else
        ++c.untagged_full_twists;
    }
  }
  c.weighted_p = c.pos_p - c.neg_p;
  c.weighted_q = c.pos_q - c.neg_q;
  return c;
}

// Length implied by the block structure, summed block type by block type.
inline std::int64_t expected_bmf_length(const SurfaceParams& p) {
  const std::int64_t a = p.a, b = p.b, c = p.c, d = p.d;
  return 2 * a * (4 * (2 * b - 1) + std::abs(2 * b - d) + 4 * 2 * d) + std::abs(2 * a - c) * 2 * b +
         std::abs(2 * c - a) * 2 * d + 2 * c * (4 * (2 * d - 1) + std::abs(2 * d - b) + 4 * 2 * b);
}

// Census of the generated factorization against the count formulas; throws
// CensusMismatch on the first disagreement.
inline Census verify_census(const BmfFactorization& f) {
  const Census c = factor_census(f);
  const Counts n = surface_counts(f.params);
  auto expect = [](std::int64_t got, std::int64_t want, const char* what) {
    if (got != want)
      throw CensusMismatch(std::string(what) + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  expect(c.cusps, n.k, "cusps");
  expect(c.tangencies, n.t, "tangencies");
  expect(c.weighted_p, n.weighted_p, "weighted p twists");
  expect(c.weighted_q, n.weighted_q, "weighted q twists");
  expect(c.untagged_full_twists, 0, "full twists without p/q tag");
  expect(c.total, expected_bmf_length(f.params), "total length");
  return c;
}

// ---------------------------------------------------------------------------
// Braid words for the textually defined twists on n = 4(b+d) strands, with
// the strand order of the S4 factorizations: D-pairs first, then B-pairs.
// Arcs u_{ij} and s_{ij} are only drawn, never written down; they are not
// realized.

inline int strand_count(const SurfaceParams& p) { return 4 * (p.b + p.d); }

inline std::optional<BraidWord> twist_word(const Twist& t, const SurfaceParams& p) {
  const int n = strand_count(p);
  const int D = 4 * p.d;
  auto b_prime = [&](int i) { return D + 2 * i - 1; };
  auto d_prime = [&](int j) { return D - 2 * j + 1; };
  auto check_i = [&](int i) {
    if (i < 1 || i > 2 * p.b) throw std::out_of_range("twist_word: index " + std::to_string(i) + " out of range");
  };
  auto check_j = [&](int j) {
    if (j < 1 || j > 2 * p.d) throw std::out_of_range("twist_word: index " + std::to_string(j) + " out of range");
  };
  switch (t.kind) {
    case Twist::Kind::kP:
      check_i(t.i);
      return band_generator(b_prime(t.i), b_prime(t.i) + 1, n);
    case Twist::Kind::kQ:
      check_j(t.j);
      return band_generator(d_prime(t.j), d_prime(t.j) + 1, n);
    case Twist::Kind::kA:
      check_i(t.j);
      return band_generator(b_prime(1), b_prime(t.j), n);
    case Twist::Kind::kC:
      check_i(t.j);
      return band_generator(b_prime(1) + 1, b_prime(t.j) + 1, n);
    case Twist::Kind::kB:
      check_j(t.j);
      return band_generator(d_prime(t.j), d_prime(1), n);
    case Twist::Kind::kD:
      check_j(t.j);
      return band_generator(d_prime(t.j) + 1, d_prime(1) + 1, n);
    case Twist::Kind::kUPrime:
      check_i(t.i);
      check_j(t.j);
      return band_generator(d_prime(t.j), b_prime(t.i), n);
    case Twist::Kind::kUSecond:
      check_i(t.i);
      check_j(t.j);
      return band_generator(d_prime(t.j) + 1, b_prime(t.i) + 1, n);
    case Twist::Kind::kU:
    case Twist::Kind::kS:
      return std::nullopt;
  }
  return std::nullopt;
}

// Word for the whole factor, or nothing if some arc is figure-only.
inline std::optional<BraidWord> realize_factor_word(const BmfFactor& f, const SurfaceParams& p) {
  auto base = twist_word(f.twist, p);
  if (!base) return std::nullopt;
  const int n = strand_count(p);
  BraidWord conj(n);
  for (const auto& [t, e] : f.conj) {
    auto w = twist_word(t, p);
    if (!w) return std::nullopt;
    for (int k = 0; k < std::abs(e); ++k) conj.append(e > 0 ? *w : w->inverse());
  }
  BraidWord body(n);
  for (int k = 0; k < std::abs(f.exp); ++k) body.append(f.exp > 0 ? *base : base->inverse());
  return conjugated_word(conj, body);
}

enum class RealizationStatus { kTrivial, kNontrivial, kSkipped };

inline std::string to_string(RealizationStatus s) {
  switch (s) {
    case RealizationStatus::kTrivial: return "trivial";
    case RealizationStatus::kNontrivial: return "nontrivial";
    case RealizationStatus::kSkipped: return "skipped";
  }
  return "?";
}

inline RealizationStatus realize_s4_trivial_action(const BmfFactor& f, const SurfaceParams& p) {
  auto w = realize_factor_word(f, p);
  if (!w) return RealizationStatus::kSkipped;
  const TauFactorization t0 = tau0(p.b, p.d);
  Factorization<Perm> moved = act_word(t0.as_factorization(), *w);
  return moved == t0.as_factorization() ? RealizationStatus::kTrivial : RealizationStatus::kNontrivial;
}

// ---------------------------------------------------------------------------
// Local clusters in Br_4.

namespace detail {
inline ArtinAuto br4(std::vector<int> letters) { return artin_rep(BraidWord(4, std::move(letters))); }
}  // namespace detail

struct CuspCluster {
  // Target: s2^3 o s1 s3 s2 s3^-1 s1^-1 o s1^3 o s3^3.
  Factorization<ArtinAuto> target;
  // Cusps-first form: s2^3 o s1^3 o s3^3 o s1^-2 s3^-2 s2 s3^2 s1^2.
  Factorization<ArtinAuto> cusps_first;
  // s2^3 s1 s3 s2 s1^2 s3^2.
  BraidWord product_word{4};
  std::vector<BraidWord> target_words;
  std::vector<BraidWord> cusps_first_words;
};

inline CuspCluster cusp_cluster_factorization() {
  CuspCluster c;
  c.target_words = {BraidWord(4, {2, 2, 2}), BraidWord(4, {1, 3, 2, -3, -1}), BraidWord(4, {1, 1, 1}),
                    BraidWord(4, {3, 3, 3})};
  c.cusps_first_words = {BraidWord(4, {2, 2, 2}), BraidWord(4, {1, 1, 1}), BraidWord(4, {3, 3, 3}),
                         BraidWord(4, {-1, -1, -3, -3, 2, 3, 3, 1, 1})};
  c.product_word = BraidWord(4, {2, 2, 2, 1, 3, 2, 1, 1, 3, 3});
  std::vector<ArtinAuto> t, s;
  for (const auto& w : c.target_words) t.push_back(artin_rep(w));
  for (const auto& w : c.cusps_first_words) s.push_back(artin_rep(w));
  c.target = Factorization<ArtinAuto>(std::move(t));
  c.cusps_first = Factorization<ArtinAuto>(std::move(s));
  return c;
}

inline std::vector<BraidWord> tangent_cluster_words() {
  return {BraidWord(4, {2, 3, -2}), BraidWord(4, {1, 2, -1}), BraidWord(4, {2, 3, -2}), BraidWord(4, {1, 2, -1})};
}

inline Factorization<ArtinAuto> tangent_cluster_factorization() {
  std::vector<ArtinAuto> out;
  for (const auto& w : tangent_cluster_words()) out.push_back(artin_rep(w));
  return Factorization<ArtinAuto>(std::move(out));
}

// ---------------------------------------------------------------------------
// Stable invariants.

struct StableProfile {
  std::int64_t ab_plus_cd = 0;
  std::int64_t ab = 0;
  std::int64_t cd = 0;
  std::int64_t a_plus_c = 0;
  std::int64_t b_plus_d = 0;
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
  std::int64_t r = 0;

  friend bool operator==(const StableProfile&, const StableProfile&) = default;

  // Names of the entries that differ.
  std::vector<std::string> differences(const StableProfile& o) const {
    std::vector<std::string> out;
    if (ab_plus_cd != o.ab_plus_cd) out.push_back("ab+cd");
    if (ab != o.ab) out.push_back("ab");
    if (cd != o.cd) out.push_back("cd");
    if (a_plus_c != o.a_plus_c) out.push_back("a+c");
    if (b_plus_d != o.b_plus_d) out.push_back("b+d");
    if (chi != o.chi) out.push_back("chi");
    if (K2 != o.K2) out.push_back("K2");
    if (r != o.r) out.push_back("r");
    return out;
  }
};

// ab and cd are the weighted counts of the two full-twist classes, which the
// S4 parity invariant keeps apart.
inline StableProfile stable_profile(const SurfaceParams& p) {
  p.validate();
  const Counts n = surface_counts(p);
  StableProfile s;
  s.ab = static_cast<std::int64_t>(p.a) * p.b;
  s.cd = static_cast<std::int64_t>(p.c) * p.d;
  s.ab_plus_cd = s.ab + s.cd;
  s.a_plus_c = p.a + p.c;
  s.b_plus_d = p.b + p.d;
  s.chi = n.chi;
  s.K2 = n.K2;
  s.r = n.r;
  return s;
}

enum class Distinguishability { kTriviallyEquivalent, kDistinguished, kUndetermined };

inline std::string to_string(Distinguishability v) {
  switch (v) {
    case Distinguishability::kTriviallyEquivalent: return "trivially_equivalent";
    case Distinguishability::kDistinguished: return "distinguished";
    case Distinguishability::kUndetermined: return "undetermined";
  }
  return "?";
}

struct DistinguishResult {
  Distinguishability verdict = Distinguishability::kUndetermined;
  std::vector<std::string> differing;          // as given
  std::vector<std::string> differing_swapped;  // after (a,b) <-> (c,d) on the second
};

inline DistinguishResult distinguishable(const SurfaceParams& p, const SurfaceParams& q) {
  DistinguishResult r;
  const StableProfile sp = stable_profile(p);
  r.differing = sp.differences(stable_profile(q));
  r.differing_swapped = sp.differences(stable_profile(q.swapped()));
  if (p == q || p == q.swapped())
    r.verdict = Distinguishability::kTriviallyEquivalent;
  else if (!r.differing.empty() && !r.differing_swapped.empty())
    r.verdict = Distinguishability::kDistinguished;
  else
    r.verdict = Distinguishability::kUndetermined;
  return r;
}

}  // namespace hurwitzkit
