#pragma once

// Factorizations of length n = 4(b+d) by transpositions in S4 and the parity
// invariant that separates the two kinds of full twists.
//
// Position convention (1-based): the D-block occupies positions 1..4d and
// holds (12),(34) alternately; the B-block occupies 4d+1..n and holds
// (13),(24) alternately.  The boundary index is B = 4d, and the snake window
// is 4d-1 .. 4d+2.  Pairs D'_j, D''_j sit at positions 2k-1, 2k with
// k = 2d-j+1 (so D'_1, D''_1 are 4d-1, 4d); pairs B'_i, B''_i sit at
// 4d+2i-1, 4d+2i.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitzkit/braid.hpp"
#include "hurwitzkit/hurwitz.hpp"
#include "hurwitzkit/perm.hpp"

namespace hurwitzkit {

namespace s4 {
inline Perm t(int i, int j) { return Perm::transposition(4, i, j); }
inline const Perm& t12() { static const Perm p = t(1, 2); return p; }
inline const Perm& t34() { static const Perm p = t(3, 4); return p; }
inline const Perm& t13() { static const Perm p = t(1, 3); return p; }
inline const Perm& t24() { static const Perm p = t(2, 4); return p; }
// pi = (14)(23)
inline const Perm& pi() { static const Perm p = Perm::from_cycles(4, {{1, 4}, {2, 3}}); return p; }
}  // namespace s4

struct TauFactorization {
  int b = 1;
  int d = 1;
  std::vector<Perm> factors;

  int length() const { return 4 * (b + d); }
  int boundary() const { return 4 * d; }
  const Perm& at(int pos) const { return factors.at(static_cast<std::size_t>(pos - 1)); }
  Perm& at(int pos) { return factors.at(static_cast<std::size_t>(pos - 1)); }

  Factorization<Perm> as_factorization() const { return Factorization<Perm>(factors); }
  friend bool operator==(const TauFactorization&, const TauFactorization&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += (static_cast<int>(i) == boundary()) ? " | " : " ";
      s += factors[i].to_string();
    }
    return s;
  }
};

inline TauFactorization tau0(int b, int d) {
  if (b < 1 || d < 1) throw std::invalid_argument("tau0: b and d must be positive");
  TauFactorization t{b, d, {}};
  for (int k = 0; k < 2 * d; ++k) {
    t.factors.push_back(s4::t12());
    t.factors.push_back(s4::t34());
  }
  for (int k = 0; k < 2 * b; ++k) {
    t.factors.push_back(s4::t13());
    t.factors.push_back(s4::t24());
  }
  return t;
}

inline bool in_hat_orbit(const TauFactorization& f) {
  if (static_cast<int>(f.factors.size()) != f.length()) return false;
  for (int i = 1; i <= f.length(); ++i) {
    const Perm& x = f.at(i);
    if (x.degree() != 4) return false;
    if (i <= f.boundary()) {
      if (!(x == s4::t12() || x == s4::t34())) return false;
    } else if (!(x == s4::t13() || x == s4::t24())) {
      return false;
    }
  }
  return true;
}

// Actions of the stabilized monodromy group and of the two half twists on
// the block-constrained set.  kChainSwap exchanges positions pos and pos+2
// (chain half twists a, b, c, d); kPairSwap exchanges pos and pos+1 (the
// pair half twists p_i, q_j).  Neither may straddle the boundary.
struct GeneratorAction {
  enum class Kind { kTrivial, kChainSwap, kPairSwap, kSnake };
  Kind kind = Kind::kTrivial;
  int pos = 0;

  static GeneratorAction trivial() { return {Kind::kTrivial, 0}; }
  static GeneratorAction chain_swap(int pos) { return {Kind::kChainSwap, pos}; }
  static GeneratorAction pair_swap(int pos) { return {Kind::kPairSwap, pos}; }
  static GeneratorAction snake() { return {Kind::kSnake, 0}; }

  // sigma_{p_i}: pair B'_i, B''_i.
  static GeneratorAction sigma_p(int b, int d, int i) {
    if (i < 1 || i > 2 * b) throw std::out_of_range("sigma_p: index out of range");
    return pair_swap(4 * d + 2 * i - 1);
  }
  // sigma_{q_j}: pair D'_j, D''_j.
  static GeneratorAction sigma_q(int d, int j) {
    if (j < 1 || j > 2 * d) throw std::out_of_range("sigma_q: index out of range");
    return pair_swap(2 * (2 * d - j + 1) - 1);
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::kTrivial: return "trivial";
      case Kind::kChainSwap: return "chain(" + std::to_string(pos) + "," + std::to_string(pos + 2) + ")";
      case Kind::kPairSwap: return "pair(" + std::to_string(pos) + "," + std::to_string(pos + 1) + ")";
      case Kind::kSnake: return "snake";
    }
    return "?";
  }
};

// Braid word realizing a generator action on n = 4(b+d) strands.  Chain swaps
// are half twists over the intermediate puncture, pair swaps adjacent Artin
// generators, the snake its explicit word; the trivial kind uses the cube
// s_{4d}^3.
inline BraidWord generator_word(const GeneratorAction& g, int b, int d) {
  const int n = 4 * (b + d);
  switch (g.kind) {
    case GeneratorAction::Kind::kTrivial: {
      BraidWord w(n);
      w.push_power(4 * d, 3);
      return w;
    }
    case GeneratorAction::Kind::kChainSwap: return band_generator(g.pos, g.pos + 2, n);
    case GeneratorAction::Kind::kPairSwap: return band_generator(g.pos, g.pos + 1, n);
    case GeneratorAction::Kind::kSnake: return snake_word(d, n);
  }
  throw std::logic_error("generator_word: unknown kind");
}

inline Perm window_product(const TauFactorization& f) {
  const int B = f.boundary();
  return f.at(B - 1) * f.at(B) * f.at(B + 1) * f.at(B + 2);
}

inline TauFactorization snake_direct(const TauFactorization& f) {
  if (!in_hat_orbit(f)) throw std::invalid_argument("snake_direct: factorization not in the hat orbit");
  const int B = f.boundary();
  if (B + 2 > f.length() || B - 1 < 1) throw std::out_of_range("snake_direct: window out of range");
  Perm w = window_product(f);
  if (w.is_identity() || w == s4::pi()) return f;
  TauFactorization out = f;
  for (int i = B - 1; i <= B + 2; ++i) out.at(i) = conjugate(f.at(i), s4::pi());
  return out;
}

inline TauFactorization snake_via_word(const TauFactorization& f) {
  if (!in_hat_orbit(f)) throw std::invalid_argument("snake_via_word: factorization not in the hat orbit");
  Factorization<Perm> g = act_word(f.as_factorization(), snake_word(f.d, f.length()));
  return TauFactorization{f.b, f.d, g.elements()};
}

inline TauFactorization apply_generator(const TauFactorization& f, const GeneratorAction& g) {
  if (!in_hat_orbit(f)) throw std::invalid_argument("apply_generator: factorization not in the hat orbit");
  const int B = f.boundary();
  auto swap_positions = [&](int i, int j) {
    if (i < 1 || j > f.length()) throw std::out_of_range("apply_generator: swap out of range");
    if (i <= B && j > B) throw std::invalid_argument("apply_generator: swap straddles the boundary");
    TauFactorization out = f;
    std::swap(out.at(i), out.at(j));
    return out;
  };
  switch (g.kind) {
    case GeneratorAction::Kind::kTrivial: return f;
    case GeneratorAction::Kind::kChainSwap: return swap_positions(g.pos, g.pos + 2);
    case GeneratorAction::Kind::kPairSwap: return swap_positions(g.pos, g.pos + 1);
    case GeneratorAction::Kind::kSnake: return snake_direct(f);
  }
  throw std::logic_error("apply_generator: unknown kind");
}

inline int change_count(const TauFactorization& f) {
  TauFactorization ref = tau0(f.b, f.d);
  int n = 0;
  for (int i = 1; i <= f.length(); ++i) n += f.at(i) == ref.at(i) ? 0 : 1;
  return n;
}

// M = #{i : t_i != t0_i}/2 + #{i > 4d, i even : t_i != t0_i}.
inline int invariant_M(const TauFactorization& f) {
  if (!in_hat_orbit(f)) throw std::invalid_argument("invariant_M: factorization not in the hat orbit");
  TauFactorization ref = tau0(f.b, f.d);
  int changes = 0;
  int even_beyond = 0;
  for (int i = 1; i <= f.length(); ++i) {
    if (f.at(i) == ref.at(i)) continue;
    ++changes;
    if (i > f.boundary() && i % 2 == 0) ++even_beyond;
  }
  if (changes % 2 != 0)
    throw std::domain_error("invariant_M: odd change count (product differs from tau0)");
  return changes / 2 + even_beyond;
}

// Generators of the stabilized monodromy group's action: the trivial kind,
// every chain swap inside a block, and the snake.
inline std::vector<GeneratorAction> stabilized_generators(int b, int d) {
  std::vector<GeneratorAction> gens{GeneratorAction::trivial()};
  const int B = 4 * d;
  const int n = 4 * (b + d);
  for (int i = 1; i + 2 <= B; ++i) gens.push_back(GeneratorAction::chain_swap(i));
  for (int i = B + 1; i + 2 <= n; ++i) gens.push_back(GeneratorAction::chain_swap(i));
  gens.push_back(GeneratorAction::snake());
  return gens;
}

// Random element of the generator monoid: each step picks a kind uniformly
// from {trivial, chain swap, snake}, then a chain position uniformly.
class GeneratorSampler {
 public:
  GeneratorSampler(int b, int d, std::uint64_t seed) : rng_(seed) {
    const int B = 4 * d;
    const int n = 4 * (b + d);
    for (int i = 1; i + 2 <= B; ++i) chains_.push_back(i);
    for (int i = B + 1; i + 2 <= n; ++i) chains_.push_back(i);
  }

  GeneratorAction next() {
    int kind = std::uniform_int_distribution<int>(0, 2)(rng_);
    if (kind == 0) return GeneratorAction::trivial();
    if (kind == 2) return GeneratorAction::snake();
    std::uniform_int_distribution<std::size_t> pick(0, chains_.size() - 1);
    return GeneratorAction::chain_swap(chains_[pick(rng_)]);
  }

  std::vector<GeneratorAction> word(int max_len) {
    int len = std::uniform_int_distribution<int>(1, max_len)(rng_);
    std::vector<GeneratorAction> w;
    for (int k = 0; k < len; ++k) w.push_back(next());
    return w;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::vector<int> chains_;
};

inline TauFactorization apply_word(TauFactorization f, const std::vector<GeneratorAction>& w) {
  for (const auto& g : w) f = apply_generator(f, g);
  return f;
}

struct NonconjugacyReport {
  int b = 0;
  int d = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int max_word_length = 0;
  int m_left = 0;   // M(tau0 . x)
  int m_right = 0;  // M(tau0 . y)
  // Parities observed for every sample of each side:
  // left side  M(tau0 . x . h) and M(tau0 . h . x),
  // right side M(tau0 . h . y) and M(tau0 . y . h).
  bool left_seen[2] = {false, false};
  bool right_seen[2] = {false, false};
  std::string verdict;  // "not_conjugate" or "inconclusive"

  bool left_constant() const { return left_seen[0] != left_seen[1]; }
  bool right_constant() const { return right_seen[0] != right_seen[1]; }
  int left_parity() const { return left_seen[1] ? 1 : 0; }
  int right_parity() const { return right_seen[1] ? 1 : 0; }
};

// If x h = h y for some h in the stabilized group, acting on tau0 by both
// sides would give the same factorization.  The parity of M is constant on
// each side; distinct parities rule out any such h.
inline NonconjugacyReport verify_nonconjugacy(int b, int d, int trials, std::uint64_t seed,
                                              const GeneratorAction& x, const GeneratorAction& y,
                                              int max_word_length = 32) {
  if (b < 1 || d < 1) throw std::invalid_argument("verify_nonconjugacy: b and d must be positive");
  NonconjugacyReport r;
  r.b = b;
  r.d = d;
  r.trials = trials;
  r.seed = seed;
  r.max_word_length = max_word_length;
  const TauFactorization t0 = tau0(b, d);
  r.m_left = invariant_M(apply_generator(t0, x));
  r.m_right = invariant_M(apply_generator(t0, y));
  r.left_seen[r.m_left % 2] = true;
  r.right_seen[r.m_right % 2] = true;
  GeneratorSampler sampler(b, d, seed);
  for (int k = 0; k < trials; ++k) {
    std::vector<GeneratorAction> h = sampler.word(max_word_length);
    TauFactorization th = apply_word(t0, h);
    r.left_seen[invariant_M(apply_word(apply_generator(t0, x), h)) % 2] = true;
    r.left_seen[invariant_M(apply_generator(th, x)) % 2] = true;
    r.right_seen[invariant_M(apply_generator(th, y)) % 2] = true;
    r.right_seen[invariant_M(apply_word(apply_generator(t0, y), h)) % 2] = true;
  }
  const bool separated = r.left_constant() && r.right_constant() && r.left_parity() != r.right_parity();
  r.verdict = separated ? "not_conjugate" : "inconclusive";
  return r;
}

inline NonconjugacyReport verify_nonconjugacy(int b, int d, int trials, std::uint64_t seed) {
  if (b < 1 || d < 1) throw std::invalid_argument("verify_nonconjugacy: b and d must be positive");
  return verify_nonconjugacy(b, d, trials, seed, GeneratorAction::sigma_p(b, d, 1),
                             GeneratorAction::sigma_q(d, 1));
}

// All 16 snake windows: positions 4d-1, 4d take (12) or (34), positions
// 4d+1, 4d+2 take (13) or (24).  Bit k of `index` picks (34) resp. (24) at
// window slot k.
inline std::vector<Perm> snake_window(int index) {
  return {(index & 1) ? s4::t34() : s4::t12(), (index & 2) ? s4::t34() : s4::t12(),
          (index & 4) ? s4::t24() : s4::t13(), (index & 8) ? s4::t24() : s4::t13()};
}

inline TauFactorization embed_window(int b, int d, const std::vector<Perm>& window) {
  TauFactorization f = tau0(b, d);
  const int B = f.boundary();
  for (int k = 0; k < 4; ++k) f.at(B - 1 + k) = window.at(static_cast<std::size_t>(k));
  return f;
}

// The snake word as five steps on the window alone (positions 1..4 standing
// for 4d-1..4d+2): s2; s1^2 s3^2; s2; s3^-2 s1^-2; s2^-1.
inline std::vector<BraidWord> snake_steps() {
  return {BraidWord(4, {2}), BraidWord(4, {1, 1, 3, 3}), BraidWord(4, {2}), BraidWord(4, {-3, -3, -1, -1}),
          BraidWord(4, {-2})};
}

// Parse a row of transpositions of S4 written like "(12)(34)(13)(24)".
inline std::vector<Perm> parse_transposition_row(const std::string& row) {
  std::vector<Perm> out;
  std::size_t k = 0;
  while (k < row.size()) {
    if (row[k] == ' ') {
      ++k;
      continue;
    }
    if (k + 3 >= row.size() || row[k] != '(' || row[k + 3] != ')')
      throw std::invalid_argument("parse_transposition_row: malformed row " + row);
    int i = row[k + 1] - '0';
    int j = row[k + 2] - '0';
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j)
      throw std::invalid_argument("parse_transposition_row: bad transposition in " + row);
    out.push_back(s4::t(i, j));
    k += 4;
  }
  return out;
}

// Four worked windows: the start and the state after each of the five steps.
inline const std::vector<std::vector<std::string>>& snake_derivations() {
  static const std::vector<std::vector<std::string>> table = {
      {"(12)(12)(13)(13)", "(12)(23)(12)(13)", "(23)(13)(13)(23)", "(23)(13)(13)(23)", "(12)(23)(12)(13)",
       "(12)(12)(13)(13)"},
      {"(12)(34)(13)(24)", "(12)(14)(34)(24)", "(14)(24)(24)(23)", "(14)(24)(24)(23)", "(12)(14)(34)(24)",
       "(12)(34)(13)(24)"},
      {"(12)(34)(13)(13)", "(12)(14)(34)(13)", "(14)(24)(13)(14)", "(14)(13)(24)(14)", "(34)(14)(12)(24)",
       "(34)(12)(24)(24)"},
      {"(12)(12)(13)(24)", "(12)(23)(12)(24)", "(23)(13)(24)(14)", "(23)(24)(13)(14)", "(34)(23)(34)(13)",
       "(34)(34)(24)(13)"},
  };
  return table;
}

}  // namespace hurwitzkit
