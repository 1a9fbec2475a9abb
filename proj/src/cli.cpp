#include "hurwitzkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

namespace hurwitzkit::cli {

// "1 -2 3" or "1,-2,3".
std::vector<int> parse_letters(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream in(t);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: " + tok);
    }
    if (used != tok.size()) throw InputError("not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

// "a,b,c" (abc-surface, d = b) or "a,b,c,d".
SurfaceParams parse_params(const std::string& s) {
  std::vector<int> v = parse_letters(s);
  if (v.size() == 3) return abc_surface(v[0], v[1], v[2]);
  if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
  throw InputError("surface parameters must be a,b,c or a,b,c,d: " + s);
}

static std::string s4_convention() {
  return "S4 factorizations: positions 1..4d hold (12),(34), positions 4d+1..4(b+d) hold (13),(24); "
         "forward move (x,y) -> (x y x^-1, x)";
}

// ---------------------------------------------------------------------------
// verify

Report verify_s7(int b, int d, int trials, std::uint64_t seed, int max_len) {
  Report r("verify s7");
  r.params = Json{{"b", b}, {"d", d}, {"max_word_length", max_len}};
  r.has_seed = true;
  r.seed = seed;
  r.trials = trials;
  r.conventions.push_back(s4_convention());
  r.conventions.push_back("M = #changes/2 + #changes at even positions beyond 4d");

  const TauFactorization t0 = tau0(b, d);
  r.check("tau0 lies in the block-constrained set with M = 0", in_hat_orbit(t0) && invariant_M(t0) == 0);
  const int mp = invariant_M(apply_generator(t0, GeneratorAction::sigma_p(b, d, 1)));
  const int mq = invariant_M(apply_generator(t0, GeneratorAction::sigma_q(d, 1)));
  r.result["M_tau0_sigma_p"] = mp;
  r.result["M_tau0_sigma_q"] = mq;
  r.check("M(tau0 sigma_p) = 2 and M(tau0 sigma_q) = 1", mp == 2 && mq == 1,
          "M(sigma_p) = " + std::to_string(mp) + ", M(sigma_q) = " + std::to_string(mq));

  const std::vector<GeneratorAction> gens = stabilized_generators(b, d);
  // Every generator on every window, with the rest of tau0 fixed.
  int window_bad = 0;
  int window_cases = 0;
  for (int w = 0; w < 16; ++w) {
    TauFactorization f = embed_window(b, d, snake_window(w));
    const bool even = change_count(f) % 2 == 0;
    for (const auto& g : gens) {
      ++window_cases;
      TauFactorization h = apply_generator(f, g);
      bool ok = in_hat_orbit(h) && (change_count(h) % 2 == change_count(f) % 2);
      if (ok && even) ok = invariant_M(h) % 2 == invariant_M(f) % 2;
      if (!ok) ++window_bad;
    }
  }
  r.check("window table: closure, change parity and M parity under every generator", window_bad == 0,
          std::to_string(window_cases - window_bad) + "/" + std::to_string(window_cases) + " cases");

  // Snake case analysis.
  int snake_bad = 0;
  for (int w = 0; w < 16; ++w) {
    TauFactorization f = embed_window(b, d, snake_window(w));
    TauFactorization h = snake_direct(f);
    const Perm prod = window_product(f);
    const bool moves = !(prod.is_identity() || prod == s4::pi());
    const int B = f.boundary();
    auto window_changes = [&](const TauFactorization& x) {
      int n = 0;
      for (int i = B - 1; i <= B + 2; ++i) n += x.at(i) == t0.at(i) ? 0 : 1;
      return n;
    };
    if (!moves) {
      if (!(h == f)) ++snake_bad;
      continue;
    }
    const int wc = window_changes(f);
    const bool flips = (f.at(B + 2) == t0.at(B + 2)) != (h.at(B + 2) == t0.at(B + 2));
    if (!((wc == 1 || wc == 3) && flips && window_changes(h) == 4 - wc)) ++snake_bad;
  }
  r.check("snake: fixes windows with product 1 or (14)(23), otherwise odd window change count and flipped 4d+2",
          snake_bad == 0, std::to_string(16 - snake_bad) + "/16 windows");

  // Exhaustive over all assignments for small lengths.
  const int n = t0.length();
  if (n <= 16) {
    std::uint64_t states = 0, bad = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) % 2) continue;
      TauFactorization f = t0;
      for (int i = 1; i <= n; ++i) {
        if (!((mask >> (i - 1)) & 1)) continue;
        const Perm& x = t0.at(i);
        if (i <= f.boundary())
          f.at(i) = x == s4::t12() ? s4::t34() : s4::t12();
        else
          f.at(i) = x == s4::t13() ? s4::t24() : s4::t13();
      }
      const int m = invariant_M(f) % 2;
      for (const auto& g : gens) {
        ++states;
        TauFactorization h = apply_generator(f, g);
        if (!in_hat_orbit(h) || change_count(h) % 2 != 0 || invariant_M(h) % 2 != m) ++bad;
      }
    }
    r.check("exhaustive: every even-change assignment keeps closure and M parity", bad == 0,
            std::to_string(states - bad) + "/" + std::to_string(states) + " cases");
  } else {
    r.skip("exhaustive: every even-change assignment keeps closure and M parity",
           "length " + std::to_string(n) + " > 16");
  }

  // Random words from tau0, checked after every step.
  GeneratorSampler sampler(b, d, seed);
  std::uint64_t steps = 0, violations = 0;
  for (int k = 0; k < trials; ++k) {
    TauFactorization f = t0;
    const int m0 = 0;
    for (const auto& g : sampler.word(max_len)) {
      f = apply_generator(f, g);
      ++steps;
      if (!in_hat_orbit(f) || change_count(f) % 2 != 0 || invariant_M(f) % 2 != m0) ++violations;
    }
  }
  r.result["random_steps"] = steps;
  r.check("random words: closure, even change count and M parity", violations == 0,
          std::to_string(violations) + " violations in " + std::to_string(steps) + " steps");
  return r;
}

Report verify_snake_table(int b, int d) {
  Report r("verify snake-table");
  r.params = Json{{"b", b}, {"d", d}};
  r.conventions.push_back(s4_convention());
  r.conventions.push_back("snake word s_{4d} s_{4d-1}^2 s_{4d+1}^2 s_{4d} s_{4d+1}^-2 s_{4d-1}^-2 s_{4d}^-1");

  Json table = Json::array();
  int agree = 0;
  for (int w = 0; w < 16; ++w) {
    TauFactorization f = embed_window(b, d, snake_window(w));
    TauFactorization direct = snake_direct(f);
    TauFactorization via = snake_via_word(f);
    const int B = f.boundary();
    std::string before, after;
    for (int i = B - 1; i <= B + 2; ++i) {
      before += f.at(i).to_string();
      after += direct.at(i).to_string();
    }
    agree += direct == via ? 1 : 0;
    table.push_back(Json{{"window", before}, {"image", after}, {"agree", direct == via}});
  }
  r.result["windows"] = table;
  r.check("snake rule agrees with the Hurwitz action of the snake word", agree == 16,
          std::to_string(agree) + "/16 windows");

  const std::vector<BraidWord> steps = snake_steps();
  const auto& derivations = snake_derivations();
  for (std::size_t k = 0; k < derivations.size(); ++k) {
    const auto& rows = derivations[k];
    Factorization<Perm> cur(parse_transposition_row(rows[0]));
    std::size_t matched = 0;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      cur = act_word(cur, steps[s]);
      if (cur == Factorization<Perm>(parse_transposition_row(rows[s + 1]))) ++matched;
    }
    TauFactorization emb = embed_window(b, d, parse_transposition_row(rows[0]));
    TauFactorization end = embed_window(b, d, parse_transposition_row(rows.back()));
    const bool rule = snake_direct(emb) == end;
    r.check("worked window " + std::to_string(k + 1) + " (" + rows[0] + ")", matched == steps.size() && rule,
            std::to_string(matched) + "/" + std::to_string(steps.size()) + " steps, rule " +
                (rule ? "agrees" : "disagrees"));
  }
  return r;
}

Report verify_nonconj(int b, int d, int trials, std::uint64_t seed, int max_len) {
  Report r("verify nonconj");
  r.params = Json{{"b", b}, {"d", d}, {"max_word_length", max_len}};
  r.has_seed = true;
  r.seed = seed;
  r.trials = trials;
  r.conventions.push_back(s4_convention());
  r.conventions.push_back("sigma_p swaps positions 4d+1, 4d+2; sigma_q swaps 4d-1, 4d");
  NonconjugacyReport nr = verify_nonconjugacy(b, d, trials, seed);
  r.result["M_sigma_p"] = nr.m_left;
  r.result["M_sigma_q"] = nr.m_right;
  r.result["parity_sigma_p_side"] = nr.left_constant() ? Json(nr.left_parity()) : Json("mixed");
  r.result["parity_sigma_q_side"] = nr.right_constant() ? Json(nr.right_parity()) : Json("mixed");
  r.result["verdict"] = nr.verdict;
  r.check("M parity constant on the sigma_p side", nr.left_constant());
  r.check("M parity constant on the sigma_q side", nr.right_constant());
  r.check("sigma_p^2 and sigma_q^2 not conjugate in the stabilized group", nr.verdict == "not_conjugate",
          "parities " + std::to_string(nr.left_parity()) + " vs " + std::to_string(nr.right_parity()));
  return r;
}

Report verify_cluster(int depth) {
  Report r("verify cluster");
  r.params = Json{{"depth_bound", depth}};
  r.conventions.push_back("braids compared through the Artin action on F_4; factors compose left to right");
  CuspCluster c = cusp_cluster_factorization();
  const ArtinAuto stated = artin_rep(c.product_word);
  r.check("cusp cluster: target factorization multiplies to s2^3 s1 s3 s2 s1^2 s3^2", c.target.product() == stated);
  r.check("cusp cluster: cusps-first factorization has the same product", c.cusps_first.product() == stated);
  int cubes = 0, singles = 0;
  for (const auto& w : c.target_words) {
    if (w.exponent_sum() == 3) ++cubes;
    if (w.exponent_sum() == 1) ++singles;
  }
  r.check("cusp cluster: three cubes and one conjugated single twist", cubes == 3 && singles == 1);

  SearchOptions opts;
  opts.max_depth = depth;
  SearchResult sr = orbit_search(c.cusps_first, c.target, opts);
  r.result["search_status"] = to_string(sr.status);
  r.result["search_path"] = to_json(sr.path);
  r.result["search_depth"] = static_cast<int>(sr.path.size());
  r.result["search_explored"] = sr.explored;
  const bool found = sr.status == SearchStatus::kFound && apply_path(c.cusps_first, sr.path) == c.target;
  r.check("cusp cluster: Hurwitz path from cusps-first form to target within depth " + std::to_string(depth), found,
          to_string(sr.status) + ", path length " + std::to_string(sr.path.size()));

  Factorization<ArtinAuto> t = tangent_cluster_factorization();
  std::vector<BraidWord> tw = tangent_cluster_words();
  bool singles_only = true;
  for (const auto& w : tw) singles_only = singles_only && w.exponent_sum() == 1;
  r.check("tangent cluster: four conjugates of single twists", singles_only);
  r.check("tangent cluster: factors 1 = 3 and 2 = 4", t[0] == t[2] && t[1] == t[3]);
  BraidWord prod(4);
  for (const auto& w : tw) prod.append(w);
  r.result["tangent_cluster_product"] = prod.freely_reduced().to_string();
  r.check("tangent cluster: product matches the concatenated word", t.product() == artin_rep(prod));
  return r;
}

// ---------------------------------------------------------------------------
// bmf

static void note_params(Report& r, const SurfaceParams& p) {
  r.params = to_json(p);
  if (p.below_hypothesis()) r.result["warning"] = "parameters below 3: outside the surface construction range";
  if (p.excluded_case()) r.result["excluded_case"] = "c = 2a, d = 2b or a = 2c, b = 2d";
}

Report bmf_counts(const SurfaceParams& p) {
  Report r("bmf counts");
  note_params(r, p);
  const Counts n = surface_counts(p);
  r.result["counts"] = to_json(n);
  const std::int64_t ab_cd = static_cast<std::int64_t>(p.a) * p.b + static_cast<std::int64_t>(p.c) * p.d;
  r.check("k = 3m", n.k == 3 * n.m);
  r.check("chi - K^2/8 = ab + cd", 8 * n.chi - n.K2 == 8 * ab_cd);
  const std::int64_t expanded = 1 + 8 * static_cast<std::int64_t>(p.a + p.c) * (p.b + p.d) - 4 * (p.a + p.b + p.c + p.d);
  r.check("g_R equals 1 + 8(a+c)(b+d) - 4(a+b+c+d)", n.g_R == expanded);
  r.check("nu = weighted p + weighted q", n.nu == n.weighted_p + n.weighted_q);
  return r;
}

Report bmf_gen(const SurfaceParams& p, const std::string& out_path, bool include_factorization) {
  Report r("bmf gen");
  note_params(r, p);
  r.conventions.push_back("strands 1..4d: D-pairs, 4d+1..4(b+d): B-pairs; p_i = s_{4d+2i-1}");
  r.conventions.push_back("factor C s^e C^-1 with C the listed conjugator product");
  BmfFactorization f = generate_bmf(p);
  const Census c = factor_census(f);
  r.result["census"] = to_json(c);
  r.result["length"] = f.length();
  try {
    verify_census(f);
    r.check("census matches the count formulas", true,
            "cusps " + std::to_string(c.cusps) + ", tangencies " + std::to_string(c.tangencies) + ", weighted p/q " +
                std::to_string(c.weighted_p) + "/" + std::to_string(c.weighted_q));
  } catch (const CensusMismatch& e) {
    r.check("census matches the count formulas", false, e.what());
  }

  std::size_t trivial = 0, nontrivial = 0, skipped = 0;
  std::string first_bad;
  for (const auto& x : f.factors()) {
    switch (realize_s4_trivial_action(x, p)) {
      case RealizationStatus::kTrivial: ++trivial; break;
      case RealizationStatus::kSkipped: ++skipped; break;
      case RealizationStatus::kNontrivial:
        if (first_bad.empty()) first_bad = x.to_string();
        ++nontrivial;
        break;
    }
  }
  r.check("realizable factors act trivially on tau0", nontrivial == 0,
          std::to_string(trivial) + " trivial, " + std::to_string(nontrivial) + " nontrivial" +
              (first_bad.empty() ? "" : " (first: " + first_bad + ")"));
  if (skipped) r.skip("factors on figure-only arcs u_{ij}, s_{ij}", std::to_string(skipped) + " factors not realized");

  Json fj = to_json(f);
  fj["census"] = to_json(c);
  if (include_factorization) r.result["factorization"] = fj;
  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) throw InputError("cannot write " + out_path);
    os << fj.dump(2) << '\n';
    r.result["written"] = out_path;
  }
  return r;
}

Report bmf_distinguish(const SurfaceParams& p, const SurfaceParams& q) {
  Report r("bmf distinguish");
  r.params = Json{{"first", to_json(p)}, {"second", to_json(q)}};
  r.conventions.push_back("profile (ab+cd, ab, cd, a+c, b+d, chi, K2, r); ab and cd separated by the S4 parity invariant");
  DistinguishResult d = distinguishable(p, q);
  r.result["profile_first"] = to_json(stable_profile(p));
  r.result["profile_second"] = to_json(stable_profile(q));
  r.result["differs"] = d.differing;
  r.result["differs_after_swap"] = d.differing_swapped;
  r.result["verdict"] = to_string(d.verdict);
  r.check("profiles computed", true, to_string(d.verdict));
  return r;
}

// ---------------------------------------------------------------------------
// F2

Report arf_report(int a, int c) {
  Report r("arf");
  r.params = Json{{"a", a}, {"c", c}};
  r.conventions.push_back("basis s, a1..a(2a-1), b1..b(2c-2), c1..c(2a-2), d1..d(2c-2); q = 1 on the basis");
  CrossSpace sp = build_cross_space(a, c);
  F2Quadratic q = quadratic_from_basis(sp);
  SymplecticPairs pairs = symplectic_basis(sp.form);
  const int value = arf_from_basis(q, pairs);
  r.result["dim"] = sp.dim();
  r.result["arf"] = value;
  r.check("computed basis is symplectic", is_symplectic_basis(pairs, sp.form));
  if (sp.dim() <= kArfOracleMaxDim) {
    const std::uint64_t zeros = count_zeros(q);
    const int oracle = arf_oracle(q);
    r.result["zeros"] = zeros;
    r.result["arf_oracle"] = oracle;
    r.check("Arf agrees with the zero count", oracle == value);
  } else {
    r.skip("Arf agrees with the zero count", "dimension above the oracle limit");
  }
  const bool qb = q(omitted_vector(OmittedVector::kBEnd, sp));
  r.result["q_" + omitted_label(OmittedVector::kBEnd, a, c)] = qb ? 1 : 0;
  r.check("q(" + omitted_label(OmittedVector::kBEnd, a, c) + ") = 0 iff a+c odd", (!qb) == ((a + c) % 2 == 1));
  if ((a + c) % 2 == 0) r.check("Arf = a mod 2 for a+c even", value == a % 2);
  if (a == 2 && c == 2) {
    SymplecticPairs given;
    for (const auto& [e, f] : cross_basis_22_labels()) given.emplace_back(sp.sum(e), sp.sum(f));
    int good = 0;
    for (std::size_t i = 0; i < given.size(); ++i) {
      bool ok = sp.form(given[i].first, given[i].second);
      for (std::size_t j = 0; j < given.size(); ++j) {
        if (j == i) continue;
        ok = ok && !sp.form(given[i].first, given[j].first) && !sp.form(given[i].second, given[j].second) &&
             !sp.form(given[i].first, given[j].second);
      }
      good += ok ? 1 : 0;
    }
    r.check("listed symplectic basis of the (2,2) space", good == 5 && arf_from_basis(q, given) == value,
            std::to_string(good) + "/5 pairs");
  }
  return r;
}

Report classify_report(int a, int c, const std::string& diagram, bool enumerate) {
  Report r("classify");
  std::vector<F2Vec> basis, extra;
  F2BilinearForm form;
  if (!diagram.empty()) {
    r.params = Json{{"diagram", diagram}, {"enumerate", enumerate}};
    form = dynkin_form(diagram);
    for (int k = 0; k < form.dim(); ++k) basis.push_back(F2Vec::unit(form.dim(), k));
  } else {
    r.params = Json{{"a", a}, {"c", c}};
    CrossSpace sp = build_cross_space(a, c);
    form = sp.form;
    basis = sp.basis();
    extra = omitted_vectors(sp);
    r.conventions.push_back("generators: the basis and the chain ends b(2c-1), c(2a-1), d(2c-1)");
  }
  TransvectionClassification cl = classify_transvection_group(basis, extra, form);
  r.result["dim"] = form.dim();
  r.result["diagram_shape"] = to_string(cl.shape);
  r.result["verdict"] = to_string(cl.verdict);
  if (cl.zero_witness) r.result["q_zero_generator"] = *cl.zero_witness;
  r.check("generators contain a basis", true, "criterion-based verdict " + to_string(cl.verdict));
  if (enumerate) {
    if (form.dim() > 6) throw InputError("--enumerate needs dimension <= 6");
    F2Quadratic q = quadratic_on_basis(form, basis, std::vector<bool>(basis.size(), true));
    std::vector<F2Operator> gens;
    for (const auto& v : basis) gens.push_back(transvection(v, form));
    for (const auto& v : extra) gens.push_back(transvection(v, form));
    OperatorSet group = group_closure(gens, 5'000'000);
    OperatorSet sp = enumerate_symplectic_group(form);
    OperatorSet oq = filter_preserving(sp, q);
    r.result["group_order"] = group.size();
    r.result["sp_order"] = sp.size();
    r.result["o_q_order"] = oq.size();
    bool agrees = false;
    switch (cl.verdict) {
      case TransvectionVerdict::kFullSymplectic: agrees = group == sp; break;
      case TransvectionVerdict::kOrthogonalOfQ: agrees = group == oq; break;
      case TransvectionVerdict::kSpecialBasis: agrees = group.is_subset_of(oq); break;
    }
    r.check("enumerated group matches the verdict", agrees,
            "|G| = " + std::to_string(group.size()) + ", |O(q)| = " + std::to_string(oq.size()) +
                ", |Sp| = " + std::to_string(sp.size()));
  }
  return r;
}

Report obstruct_report(int a, int c, int a2, int c2) {
  Report r("obstruct");
  r.params = Json{{"a", a}, {"c", c}, {"a2", a2}, {"c2", c2}};
  HorizontalObstruction h = horizontal_obstruction(a, c, a2, c2);
  r.result["arf_first"] = h.arf_first;
  r.result["arf_second"] = h.arf_second;
  r.result["verdict"] = to_string(h.verdict);
  r.check("Arf values computed from the cross spaces", true, to_string(h.verdict));
  return r;
}

// ---------------------------------------------------------------------------
// braid / hurwitz

Report braid_eq_report(int n, const std::string& w1, const std::string& w2) {
  Report r("braid eq");
  r.params = Json{{"strands", n}, {"w1", w1}, {"w2", w2}};
  r.conventions.push_back("s_i acts by (x_i, x_i+1) -> (x_i x_i+1 x_i^-1, x_i) on the free basis");
  BraidWord a(n, parse_letters(w1));
  BraidWord b(n, parse_letters(w2));
  ArtinAuto ra = artin_rep(a), rb = artin_rep(b);
  const bool eq = ra == rb;
  r.result["equal"] = eq;
  r.result["w1_artin"] = ra.to_string();
  r.result["w2_artin"] = rb.to_string();
  r.result["same_permutation"] = word_permutation(a) == word_permutation(b);
  r.check("comparison completed", true, eq ? "equal" : "different");
  return r;
}

template <GroupElement G>
static void act_into(Report& r, const Factorization<G>& f, const BraidWord& w) {
  Factorization<G> g = act_word(f, w);
  r.result["elements"] = elements_to_json(g);
  r.check("product preserved", f.empty() || g.product() == f.product());
}

Report hurwitz_act_report(const std::string& in, const std::string& word) {
  Report r("hurwitz act");
  r.params = Json{{"input", in}, {"word", word}};
  FactorizationFile ff = factorization_from_json(read_json_file(in));
  r.result["group"] = ff.group;
  std::visit(
      [&](const auto& f) {
        BraidWord w(static_cast<int>(f.size()), parse_letters(word));
        act_into(r, f, w);
      },
      ff.value);
  return r;
}

Report hurwitz_search_report(const std::string& from, const std::string& to, int depth, std::size_t max_nodes) {
  Report r("hurwitz search");
  r.params = Json{{"from", from}, {"to", to}, {"depth", depth}, {"max_nodes", max_nodes}};
  FactorizationFile a = factorization_from_json(read_json_file(from));
  FactorizationFile b = factorization_from_json(read_json_file(to));
  if (a.group != b.group || a.value.index() != b.value.index()) throw InputError("factorizations of different groups");
  SearchOptions opts;
  opts.max_depth = depth;
  opts.max_nodes = max_nodes;
  SearchResult sr = std::visit(
      [&](const auto& fa) {
        using F = std::decay_t<decltype(fa)>;
        return orbit_search(fa, std::get<F>(b.value), opts);
      },
      a.value);
  r.result["status"] = to_string(sr.status);
  r.result["path"] = to_json(sr.path);
  r.result["explored"] = sr.explored;
  r.result["pruned"] = sr.pruned;
  if (sr.status == SearchStatus::kFound)
    r.check("Hurwitz path found", true, "length " + std::to_string(sr.path.size()));
  else
    r.check("Hurwitz path found", false, to_string(sr.status) + " (a miss only bounds the search)");
  return r;
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks for braid monodromy factorizations of bidouble surfaces", "hkverify"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, timing = false;
  int trials = 10'000;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "machine-readable JSON report");
  app.add_flag("--timing", timing, "include elapsed time (makes output run-dependent)");
  app.add_option("--trials", trials, "randomized trials")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random seed");

  std::function<Report()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  int b = 2, d = 2, max_len = 32, depth = 6;
  CLI::App* verify = sub(&app, "verify", "S4 orbit and cluster checks");
  verify->require_subcommand(1);
  CLI::App* v_s7 = sub(verify, "s7", "closure and M-parity checks");
  v_s7->add_option("--b", b)->check(CLI::PositiveNumber);
  v_s7->add_option("--d", d)->check(CLI::PositiveNumber);
  v_s7->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  v_s7->callback([&] { action = [&] { return verify_s7(b, d, trials, seed, max_len); }; });
  int sb = 1, sd = 1;
  CLI::App* v_snake = sub(verify, "snake-table", "snake twist on all 16 windows");
  v_snake->add_option("--b", sb)->check(CLI::PositiveNumber);
  v_snake->add_option("--d", sd)->check(CLI::PositiveNumber);
  v_snake->callback([&] { action = [&] { return verify_snake_table(sb, sd); }; });
  int nb = 1, nd = 1;
  CLI::App* v_nc = sub(verify, "nonconj", "sigma_p^2 versus sigma_q^2");
  v_nc->add_option("--b", nb)->check(CLI::PositiveNumber);
  v_nc->add_option("--d", nd)->check(CLI::PositiveNumber);
  v_nc->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  v_nc->callback([&] { action = [&] { return verify_nonconj(nb, nd, trials, seed, max_len); }; });
  CLI::App* v_cl = sub(verify, "cluster", "cusp and tangent clusters in Br_4");
  v_cl->add_option("--depth", depth, "search depth bound")->check(CLI::NonNegativeNumber);
  v_cl->callback([&] { action = [&] { return verify_cluster(depth); }; });

  int pa = 3, pb = 3, pc = 3, pd = 3;
  std::string out_path, first, second;
  CLI::App* bmf = sub(&app, "bmf", "braid monodromy factorization");
  bmf->require_subcommand(1);
  auto add_abcd = [&](CLI::App* s) {
    s->add_option("--a", pa)->check(CLI::PositiveNumber);
    s->add_option("--b", pb)->check(CLI::PositiveNumber);
    s->add_option("--c", pc)->check(CLI::PositiveNumber);
    s->add_option("--d", pd)->check(CLI::PositiveNumber);
  };
  CLI::App* b_gen = sub(bmf, "gen", "generate the factorization and its census");
  add_abcd(b_gen);
  b_gen->add_option("--out", out_path, "write the factorization JSON here");
  b_gen->callback([&] { action = [&] { return bmf_gen({pa, pb, pc, pd}, out_path, json && out_path.empty()); }; });
  CLI::App* b_counts = sub(bmf, "counts", "count formulas");
  add_abcd(b_counts);
  b_counts->callback([&] { action = [&] { return bmf_counts({pa, pb, pc, pd}); }; });
  CLI::App* b_dist = sub(bmf, "distinguish", "compare stable invariants of two parameter sets");
  b_dist->add_option("--p", first, "a,b,c or a,b,c,d")->required();
  b_dist->add_option("--q", second, "a,b,c or a,b,c,d")->required();
  b_dist->callback([&] { action = [&] { return bmf_distinguish(parse_params(first), parse_params(second)); }; });

  int fa = 2, fc = 2, fa2 = 2, fc2 = 2;
  CLI::App* arf_cmd = sub(&app, "arf", "Arf invariant of the horizontal fibre form");
  arf_cmd->add_option("--a", fa)->check(CLI::Range(2, 1000));
  arf_cmd->add_option("--c", fc)->check(CLI::Range(2, 1000));
  arf_cmd->callback([&] { action = [&] { return arf_report(fa, fc); }; });
  std::string diagram;
  bool enumerate = false;
  CLI::App* cls = sub(&app, "classify", "transvection group of the horizontal monodromy");
  cls->add_option("--a", fa)->check(CLI::Range(2, 1000));
  cls->add_option("--c", fc)->check(CLI::Range(2, 1000));
  cls->add_option("--diagram", diagram, "use a Dynkin-shaped basis instead")
      ->check(CLI::IsMember({"a2", "a4", "a6", "a8", "e6", "e8"}));
  cls->add_flag("--enumerate", enumerate, "compare with enumerated groups (dimension <= 6)");
  cls->callback([&] { action = [&] { return classify_report(fa, fc, diagram, enumerate); }; });
  CLI::App* obs = sub(&app, "obstruct", "horizontal Arf obstruction between two surfaces");
  obs->add_option("--a", fa)->check(CLI::Range(2, 1000));
  obs->add_option("--c", fc)->check(CLI::Range(2, 1000));
  obs->add_option("--a2", fa2)->check(CLI::Range(2, 1000));
  obs->add_option("--c2", fc2)->check(CLI::Range(2, 1000));
  obs->callback([&] { action = [&] { return obstruct_report(fa, fc, fa2, fc2); }; });

  int strands = 3;
  std::string w1, w2;
  CLI::App* braid = sub(&app, "braid", "braid words");
  braid->require_subcommand(1);
  CLI::App* beq = sub(braid, "eq", "compare two braid words");
  beq->add_option("--n", strands, "strands")->check(CLI::Range(2, 64));
  beq->add_option("--w1", w1)->required();
  beq->add_option("--w2", w2)->required();
  beq->callback([&] { action = [&] { return braid_eq_report(strands, w1, w2); }; });

  std::string in_path, word, from, to;
  std::size_t max_nodes = 2'000'000;
  CLI::App* hur = sub(&app, "hurwitz", "Hurwitz action on factorization files");
  hur->require_subcommand(1);
  CLI::App* hact = sub(hur, "act", "act by a braid word");
  hact->add_option("--in", in_path)->required();
  hact->add_option("--word", word)->required();
  hact->callback([&] { action = [&] { return hurwitz_act_report(in_path, word); }; });
  CLI::App* hs = sub(hur, "search", "bounded search for a Hurwitz path");
  hs->add_option("--from", from)->required();
  hs->add_option("--to", to)->required();
  hs->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  hs->add_option("--max-nodes", max_nodes);
  hs->callback([&] { action = [&] { return hurwitz_search_report(from, to, depth, max_nodes); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::optional<Report> report;
  try {
    report = action();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const double* elapsed = timing ? &ms : nullptr;
  if (json)
    out << report->to_json(elapsed).dump(2) << '\n';
  else
    report->print_table(out, elapsed);
  return report->ok() ? kExitOk : kExitFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hurwitzkit::cli
