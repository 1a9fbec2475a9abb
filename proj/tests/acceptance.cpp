// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "hurwitzkit/bmf.hpp"
#include "hurwitzkit/braid.hpp"
#include "hurwitzkit/f2.hpp"
#include "hurwitzkit/hurwitz.hpp"
#include "hurwitzkit/s4orbit.hpp"

using namespace hurwitzkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome snake_table() {
  Outcome o;
  int agree = 0, total = 0;
  for (int b = 1; b <= 2; ++b)
    for (int d = 1; d <= 2; ++d)
      for (int w = 0; w < 16; ++w) {
        TauFactorization f = embed_window(b, d, snake_window(w));
        ++total;
        agree += snake_direct(f) == snake_via_word(f);
      }
  int replayed = 0;
  for (const auto& rows : snake_derivations()) {
    Factorization<Perm> cur(parse_transposition_row(rows[0]));
    bool ok = true;
    for (std::size_t s = 0; s < snake_steps().size(); ++s) {
      cur = act_word(cur, snake_steps()[s]);
      ok = ok && cur == Factorization<Perm>(parse_transposition_row(rows[s + 1]));
    }
    replayed += ok;
  }
  o.ok = agree == total && replayed == 4 && snake_derivations().size() == 4;
  o.note = std::to_string(agree) + "/" + std::to_string(total) + " windows, " + std::to_string(replayed) +
           "/4 derivations";
  return o;
}

Outcome nonconjugacy() {
  Outcome o;
  const int trials = 10'000;
  int good = 0;
  for (int b = 1; b <= 3; ++b)
    for (int d = 1; d <= 3; ++d) {
      auto r = verify_nonconjugacy(b, d, trials, 1000 + 10 * b + d);
      good += r.verdict == "not_conjugate" && r.left_constant() && r.right_constant() &&
              r.left_parity() != r.right_parity();
    }
  o.ok = good == 9;
  o.note = std::to_string(good) + "/9 (b,d) pairs, " + std::to_string(trials) + " words each";
  return o;
}

Outcome parity_and_closure() {
  Outcome o;
  const int b = 2, d = 2, words = 100'000;
  GeneratorSampler s(b, d, 2024);
  const TauFactorization starts[3] = {tau0(b, d), apply_generator(tau0(b, d), GeneratorAction::sigma_p(b, d, 1)),
                                      apply_generator(tau0(b, d), GeneratorAction::sigma_q(d, 1))};
  int start_parity[3];
  for (int k = 0; k < 3; ++k) start_parity[k] = invariant_M(starts[k]) % 2;
  long violations = 0;
  for (int w = 0; w < words; ++w) {
    TauFactorization f = starts[w % 3];
    for (const auto& g : s.word(24)) {
      f = apply_generator(f, g);
      if (!in_hat_orbit(f) || invariant_M(f) % 2 != start_parity[w % 3]) ++violations;
    }
  }
  o.ok = violations == 0;
  o.note = std::to_string(words) + " words at (2,2), " + std::to_string(violations) + " violations";
  return o;
}

Outcome census() {
  Outcome o;
  int checked = 0, bad = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c)
        for (int d = 1; d <= 6; ++d) {
          const SurfaceParams p{a, b, c, d};
          ++checked;
          try {
            Census cs = verify_census(generate_bmf(p));
            const Counts n = surface_counts(p);
            if (cs.cusps != 12 * (a * d + b * c) || cs.tangencies != 2 * n.t_f + 2 * n.t_g + n.m ||
                cs.weighted_p != 8 * a * b - 2 * (a * d + b * c) || cs.weighted_q != 8 * c * d - 2 * (a * d + b * c))
              ++bad;
          } catch (const CensusMismatch& e) {
            ++bad;
            if (o.note.empty()) o.note = p.to_string() + ": " + e.what() + "; ";
          }
        }
  o.ok = bad == 0;
  o.note += std::to_string(checked) + " parameter sets, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome figure_case() {
  Outcome o;
  const SurfaceParams p{1, 2, 2, 1};
  const Counts n = surface_counts(p);
  const Census c = verify_census(generate_bmf(p));
  o.ok = n.m == 20 && n.k == 60 && n.nu == 12 && n.t == 60 && c.cusps == n.k && c.tangencies == n.t &&
         c.weighted_p + c.weighted_q == n.nu;
  o.note = "m=" + std::to_string(n.m) + " k=" + std::to_string(n.k) + " nu=" + std::to_string(n.nu) +
           " t=" + std::to_string(n.t) + "; census cusps=" + std::to_string(c.cusps) +
           " tangencies=" + std::to_string(c.tangencies);
  return o;
}

Outcome arf_results() {
  Outcome o;
  int cases = 0, good = 0;
  for (int a = 2; a <= 5; ++a)
    for (int c = 2; c <= 5; ++c) {
      ++cases;
      CrossSpace sp = build_cross_space(a, c);
      F2Quadratic q = quadratic_from_basis(sp);
      const int value = arf(q);
      bool ok = value == arf_oracle(q);
      if ((a + c) % 2 == 0) ok = ok && value == a % 2;
      const bool qb = q(omitted_vector(OmittedVector::kBEnd, sp));
      ok = ok && (!qb) == ((a + c) % 2 == 1);
      good += ok;
    }
  CrossSpace sp = build_cross_space(2, 2);
  SymplecticPairs pairs;
  for (const auto& [e, f] : cross_basis_22_labels()) pairs.emplace_back(sp.sum(e), sp.sum(f));
  int valid_pairs = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool ok = sp.form(pairs[i].first, pairs[i].second);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j == i) continue;
      ok = ok && !sp.form(pairs[i].first, pairs[j].first) && !sp.form(pairs[i].first, pairs[j].second) &&
           !sp.form(pairs[i].second, pairs[j].second);
    }
    valid_pairs += ok;
  }
  o.ok = good == cases && valid_pairs == 5 && is_symplectic_basis(pairs, sp.form);
  o.note = std::to_string(good) + "/" + std::to_string(cases) + " cross spaces, (2,2) basis " +
           std::to_string(valid_pairs) + "/5 pairs";
  return o;
}

Outcome transvections() {
  Outcome o;
  const int n = 10, trials = 10'000;
  std::mt19937_64 rng(77);
  // Random nondegenerate alternating Gram matrices.
  auto random_form = [&]() {
    for (;;) {
      F2Operator g = F2Operator::zero(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() & 1) {
            g.set(i, j, true);
            g.set(j, i, true);
          }
      if (g.rank() == n) return F2BilinearForm(g);
    }
  };
  auto random_nonzero = [&]() {
    for (;;) {
      F2Vec v = F2Vec::from_mask(n, rng() & ((1u << n) - 1));
      if (!v.is_zero()) return v;
    }
  };
  int failures = 0;
  F2BilinearForm form = random_form();
  for (int t = 0; t < trials; ++t) {
    if (t % 1000 == 0) form = random_form();
    F2Vec u = random_nonzero(), v = random_nonzero();
    F2Operator tu = transvection(u, form), tv = transvection(v, form);
    F2Vec w = u;
    if (form(u, v)) w += v;
    const bool ok = (tu * tu).is_identity() && is_symplectic(tu, form) && tv.inverse() * tu * tv == transvection(w, form);
    failures += !ok;
  }
  o.ok = failures == 0;
  o.note = std::to_string(trials) + " pairs at dim 10, " + std::to_string(failures) + " failures";
  return o;
}

Outcome e6_orthogonal() {
  Outcome o;
  F2BilinearForm form = dynkin_form("e6");
  std::vector<F2Vec> basis;
  std::vector<F2Operator> basis_t;
  for (int k = 0; k < 6; ++k) {
    basis.push_back(F2Vec::unit(6, k));
    basis_t.push_back(transvection(basis.back(), form));
  }
  const F2Quadratic q = quadratic_on_basis(form, basis, std::vector<bool>(6, true));

  std::vector<F2Operator> all_t;
  std::optional<F2Vec> zero_vec;
  for (std::uint64_t m = 1; m < 64; ++m) {
    F2Vec v = F2Vec::from_mask(6, m);
    all_t.push_back(transvection(v, form));
    if (!zero_vec && !q(v)) zero_vec = v;
  }
  const OperatorSet sp = group_closure(all_t, 2'000'000);
  const OperatorSet frames = enumerate_symplectic_group(form);
  const OperatorSet oq = filter_preserving(sp, q);
  const OperatorSet gen = group_closure(basis_t, 2'000'000);
  std::vector<F2Operator> plus = basis_t;
  plus.push_back(transvection(*zero_vec, form));
  const OperatorSet full = group_closure(plus, 2'000'000);

  bool dim4 = true;
  F2BilinearForm a4 = dynkin_form("a4");
  const OperatorSet sp4 = enumerate_symplectic_group(a4);
  for (std::uint64_t m = 0; m < 16; ++m) {
    F2Quadratic q4(a4, F2Vec::from_mask(4, m));
    const std::size_t order = filter_preserving(sp4, q4).size();
    const int av = arf(q4);
    dim4 = dim4 && order == orthogonal_group_order(2, av) && order == (av == 0 ? 72u : 120u);
  }

  o.ok = sp.size() == 1'451'520 && sp == frames && gen == oq && oq.size() == orthogonal_group_order(3, arf(q)) &&
         full == sp && dim4;
  o.note = "|Sp(6,2)|=" + std::to_string(sp.size()) + (sp == frames ? " (closure = frames)" : " (closure != frames)") +
           ", |<T_basis>|=" + std::to_string(gen.size()) + ", |O(q)|=" + std::to_string(oq.size()) +
           (gen == oq ? " equal" : " differ") + ", with T_v q(v)=0: " + std::to_string(full.size()) +
           ", dim 4 orders " + (dim4 ? "match" : "mismatch");
  return o;
}

Outcome clusters() {
  Outcome o;
  const int bound = 6;
  CuspCluster c = cusp_cluster_factorization();
  const ArtinAuto stated = artin_rep(c.product_word);
  SearchOptions opts;
  opts.max_depth = bound;
  SearchResult r = orbit_search(c.cusps_first, c.target, opts);
  const bool found = r.status == SearchStatus::kFound && apply_path(c.cusps_first, r.path) == c.target;
  o.ok = c.target.product() == stated && c.cusps_first.product() == stated && found;
  o.note = "depth bound " + std::to_string(bound) + ", " + to_string(r.status) + " at length " +
           std::to_string(r.path.size()) + " after " + std::to_string(r.explored) + " nodes";
  return o;
}

Outcome distinguishability_check() {
  Outcome o;
  auto r = distinguishable(abc_surface(2, 3, 4), abc_surface(3, 3, 3));
  auto has = [&](const std::string& k) { return std::find(r.differing.begin(), r.differing.end(), k) != r.differing.end(); };
  const bool same_rest = !has("chi") && !has("K2") && !has("a+c") && !has("b+d");
  const bool swap = distinguishable(abc_surface(2, 3, 4), abc_surface(4, 3, 2)).verdict ==
                    Distinguishability::kTriviallyEquivalent;
  const bool ident = distinguishable(abc_surface(3, 3, 3), abc_surface(3, 3, 3)).verdict ==
                     Distinguishability::kTriviallyEquivalent;
  o.ok = r.verdict == Distinguishability::kDistinguished && has("ab") && same_rest && swap && ident;
  o.note = "(2,3,4) vs (3,3,3): " + to_string(r.verdict) + (has("ab") ? " via ab" : "") +
           (swap ? ", swap trivial" : ", swap not trivial") + (ident ? ", identical trivial" : "");
  return o;
}

Outcome braid_foundation() {
  Outcome o;
  std::mt19937_64 rng(11);
  const int trials = 10'000;
  int failures = 0;
  auto random_word = [&](int n, int len) {
    BraidWord w(n);
    for (int k = 0; k < len; ++k) {
      int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      w.push(rng() & 1 ? g : -g);
    }
    return w;
  };
  for (int t = 0; t < trials; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int len = static_cast<int>(rng() % 18);
    BraidWord u = random_word(n, len), v = random_word(n, len);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
    // u s_i s_{i+1} s_i v vs u s_{i+1} s_i s_{i+1} v; total length <= 40
    BraidWord x = u * BraidWord(n, {i, i + 1, i}) * v;
    BraidWord y = u * BraidWord(n, {i + 1, i, i + 1}) * v;
    bool ok = braid_equal(x, y);
    if (n >= 4) {
      const int j = i + 2 <= n - 1 ? i + 2 : i - 2;
      if (j >= 1) ok = ok && braid_equal(u * BraidWord(n, {i, j}) * v, u * BraidWord(n, {j, i}) * v);
    }
    ArtinAuto ax = artin_rep(x);
    ok = ok && (ax * artin_rep(x.inverse())).is_identity();
    ok = ok && ax.image_of_boundary() == ArtinAuto::identity(n).image_of_boundary();
    failures += !ok;
  }
  o.ok = failures == 0;
  o.note = std::to_string(trials) + " words (n <= 8, length <= 40), " + std::to_string(failures) + " failures";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"snake-twist table and worked derivations", snake_table},
      {"non-conjugacy of the two pair twists, (b,d) in {1,2,3}^2", nonconjugacy},
      {"M-parity conservation and hat-orbit closure", parity_and_closure},
      {"census identities for 1 <= a,b,c,d <= 6", census},
      {"figure case (1,2,2,1) counts", figure_case},
      {"Arf invariants of the cross spaces", arf_results},
      {"transvection algebra at dim 10", transvections},
      {"E6 transvection group is O(q) in Sp(6,2)", e6_orthogonal},
      {"cusp cluster products and Hurwitz path", clusters},
      {"stable-invariant distinguishability", distinguishability_check},
      {"braid relations in the Artin representation", braid_foundation},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%zu] %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.note.c_str(), s);
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
