#pragma once

// Factorizations a_1 o a_2 o ... o a_m in an arbitrary group, the braid
// group action by Hurwitz moves, simultaneous conjugation, stable
// creation/cancellation of inverse pairs, the basic Hurwitz invariants and a
// bounded breadth-first orbit search.
//
// A group element type G must provide `a * b`, `a.inverse()`, `==` and a
// std::hash specialization.  Perm, ArtinAuto and F2Operator all qualify.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hurwitzkit/braid.hpp"

namespace hurwitzkit {

template <class G>
concept GroupElement = std::copyable<G> && requires(const G& a, const G& b) {
  { a * b } -> std::convertible_to<G>;
  { a.inverse() } -> std::convertible_to<G>;
  { a == b } -> std::convertible_to<bool>;
  { std::hash<G>{}(a) } -> std::convertible_to<std::size_t>;
};

// a^g = g^{-1} a g.
template <GroupElement G>
G conj(const G& a, const G& g) {
  return g.inverse() * a * g;
}

template <GroupElement G>
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<G> elements) : elements_(std::move(elements)) {}

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const G& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<G>& elements() const { return elements_; }
  std::vector<G>& mutable_elements() { return elements_; }

  // Left-to-right product.  Throws on the empty factorization.
  G product() const {
    if (elements_.empty()) throw std::logic_error("product of an empty factorization");
    G p = elements_.front();
    for (std::size_t i = 1; i < elements_.size(); ++i) p = p * elements_[i];
    return p;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.elements_ == b.elements_;
  }

  std::size_t hash() const {
    std::size_t h = elements_.size();
    std::hash<G> eh;
    for (const auto& e : elements_) h = h * 0x100000001b3ULL ^ eh(e);
    return h;
  }

 private:
  std::vector<G> elements_;
};

enum class MoveDirection { kForward, kInverse };

namespace detail {
template <GroupElement G>
void apply_letter(std::vector<G>& v, int letter) {
  apply_hurwitz_letter(
      v, letter, [](const G& a, const G& b) { return a * b; }, [](const G& a) { return a.inverse(); });
}
}  // namespace detail

// i is 1-based, 1 <= i <= m-1.  Forward: (a_i, a_{i+1}) -> (a_i a_{i+1} a_i^{-1}, a_i).
template <GroupElement G>
Factorization<G> hurwitz_move(const Factorization<G>& f, int i, MoveDirection dir) {
  if (i < 1 || static_cast<std::size_t>(i) >= f.size())
    throw std::out_of_range("hurwitz_move: index " + std::to_string(i) + " out of range");
  std::vector<G> v = f.elements();
  detail::apply_letter(v, dir == MoveDirection::kForward ? i : -i);
  return Factorization<G>(std::move(v));
}

template <GroupElement G>
Factorization<G> act_word(const Factorization<G>& f, const BraidWord& w) {
  if (static_cast<std::size_t>(w.strands()) != f.size())
    throw std::invalid_argument("act_word: braid strands do not match factorization length");
  std::vector<G> v = f.elements();
  for (int l : w.letters()) detail::apply_letter(v, l);
  return Factorization<G>(std::move(v));
}

template <GroupElement G>
Factorization<G> simultaneous_conjugate(const Factorization<G>& f, const G& g) {
  std::vector<G> v;
  v.reserve(f.size());
  G gi = g.inverse();
  for (const auto& a : f.elements()) v.push_back(gi * a * g);
  return Factorization<G>(std::move(v));
}

// Bring the h-th factor (1-based) to the front unchanged by inverse moves at
// h-1, ..., 1; the factors it passes are conjugated.
template <GroupElement G>
Factorization<G> rotate_to_front(const Factorization<G>& f, int h) {
  if (h < 1 || static_cast<std::size_t>(h) > f.size())
    throw std::out_of_range("rotate_to_front: index out of range");
  std::vector<G> v = f.elements();
  for (int i = h - 1; i >= 1; --i) detail::apply_letter(v, -i);
  return Factorization<G>(std::move(v));
}

template <GroupElement G>
struct StableContext {
  std::vector<G> admissible;

  bool admits(const G& x) const {
    return std::find(admissible.begin(), admissible.end(), x) != admissible.end();
  }
  bool admits_up_to_inverse(const G& x) const { return admits(x) || admits(x.inverse()); }
};

// Insert beta o beta^{-1} so that beta becomes factor number `pos` (1-based,
// 1 <= pos <= m+1).
template <GroupElement G>
Factorization<G> stable_insert(const Factorization<G>& f, int pos, const G& beta,
                               const StableContext<G>& ctx) {
  if (!ctx.admits(beta)) throw std::invalid_argument("stable_insert: element is not admissible");
  if (pos < 1 || static_cast<std::size_t>(pos) > f.size() + 1)
    throw std::out_of_range("stable_insert: position out of range");
  std::vector<G> v = f.elements();
  auto it = v.begin() + (pos - 1);
  it = v.insert(it, beta.inverse());
  v.insert(it, beta);
  return Factorization<G>(std::move(v));
}

// Remove factors pos, pos+1 (1-based) when they are an admissible inverse pair.
template <GroupElement G>
Factorization<G> stable_cancel(const Factorization<G>& f, int pos, const StableContext<G>& ctx) {
  if (pos < 1 || static_cast<std::size_t>(pos) >= f.size())
    throw std::out_of_range("stable_cancel: position out of range");
  const G& x = f[static_cast<std::size_t>(pos - 1)];
  const G& y = f[static_cast<std::size_t>(pos)];
  if (!(x * y == x * x.inverse())) throw std::invalid_argument("stable_cancel: factors are not inverse");
  if (!ctx.admits_up_to_inverse(x)) throw std::invalid_argument("stable_cancel: pair is not admissible");
  std::vector<G> v = f.elements();
  v.erase(v.begin() + (pos - 1), v.begin() + (pos + 1));
  return Factorization<G>(std::move(v));
}

class ClosureCapExceeded : public std::runtime_error {
 public:
  explicit ClosureCapExceeded(std::size_t cap)
      : std::runtime_error("group closure exceeded cap of " + std::to_string(cap) + " elements") {}
};

// Subgroup generated by `gens`, in breadth-first discovery order from the
// identity (generators tried in the given order).
template <GroupElement G>
std::vector<G> closure(const std::vector<G>& gens, std::size_t cap = 1'000'000) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  std::vector<G> out;
  std::unordered_set<G> seen;
  G id = gens.front() * gens.front().inverse();
  out.push_back(id);
  seen.insert(id);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      G y = out[i] * g;
      if (seen.insert(y).second) {
        if (out.size() >= cap) throw ClosureCapExceeded(cap);
        out.push_back(std::move(y));
      }
    }
  }
  return out;
}

template <GroupElement G>
std::vector<G> generated_subgroup(const Factorization<G>& f, std::size_t cap = 1'000'000) {
  return closure(f.elements(), cap);
}

// Invariants of the factors' conjugacy classes.  `classes` lists every
// conjugacy class met by a factor (representative = first class member in
// the closure order) with the number of factors in it.  `signed_counts` pairs
// each class C that is not conjugate to its inverse with C^{-1} and records
// #C - #C^{-1}; the member of the pair seen first is the positive one.
template <GroupElement G>
struct ClassCounts {
  struct Entry {
    G representative;
    std::size_t class_size = 0;
    int count = 0;
  };
  struct SignedEntry {
    G positive;
    G negative;
    int value = 0;
  };
  std::size_t group_order = 0;
  std::vector<Entry> classes;
  std::vector<SignedEntry> signed_counts;
};

// Classes are taken in the subgroup generated by the factors together with
// `extra` (the admissible elements for stable equivalence).
template <GroupElement G>
ClassCounts<G> class_count_function(const Factorization<G>& f, const std::vector<G>& extra = {},
                                    std::size_t cap = 1'000'000) {
  ClassCounts<G> out;
  if (f.empty() && extra.empty()) return out;
  std::vector<G> gens = f.elements();
  gens.insert(gens.end(), extra.begin(), extra.end());
  std::vector<G> group = closure(gens, cap);
  out.group_order = group.size();
  std::unordered_map<G, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);

  // class id for each element, computed lazily by orbit under the generators.
  std::vector<int> class_of(group.size(), -1);
  std::vector<std::size_t> class_rep;
  std::vector<std::size_t> class_size;
  auto class_id = [&](std::size_t start) {
    if (class_of[start] >= 0) return class_of[start];
    int id = static_cast<int>(class_rep.size());
    std::vector<std::size_t> members{start};
    class_of[start] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const auto& g : gens) {
        std::size_t j = index.at(conj(group[members[k]], g));
        if (class_of[j] < 0) {
          class_of[j] = id;
          members.push_back(j);
        }
      }
    }
    class_rep.push_back(*std::min_element(members.begin(), members.end()));
    class_size.push_back(members.size());
    return id;
  };

  std::vector<int> counts;
  std::vector<int> order;  // class ids in order of first occurrence
  for (const auto& a : f.elements()) {
    int id = class_id(index.at(a));
    if (static_cast<std::size_t>(id) >= counts.size()) counts.resize(static_cast<std::size_t>(id) + 1, 0);
    if (counts[static_cast<std::size_t>(id)] == 0) order.push_back(id);
    ++counts[static_cast<std::size_t>(id)];
  }
  for (int id : order)
    out.classes.push_back({group[class_rep[static_cast<std::size_t>(id)]],
                           class_size[static_cast<std::size_t>(id)], counts[static_cast<std::size_t>(id)]});

  auto count_of = [&](int c) {
    return static_cast<std::size_t>(c) < counts.size() ? counts[static_cast<std::size_t>(c)] : 0;
  };
  std::unordered_set<int> paired;
  for (int id : order) {
    if (paired.count(id)) continue;
    const G& rep = group[class_rep[static_cast<std::size_t>(id)]];
    int inv_id = class_id(index.at(rep.inverse()));
    if (inv_id == id) continue;
    paired.insert(id);
    paired.insert(inv_id);
    out.signed_counts.push_back({rep, group[class_rep[static_cast<std::size_t>(inv_id)]],
                                 count_of(id) - count_of(inv_id)});
  }
  return out;
}

// One step of an orbit-search path.  Moves serialize as signed indices
// (+i forward, -i inverse); conjugation steps carry the index of the
// conjugator in the supplied list.
struct SearchStep {
  enum class Kind { kMove, kConjugate } kind = Kind::kMove;
  int value = 0;
  friend bool operator==(const SearchStep&, const SearchStep&) = default;
};

struct SearchOptions {
  int max_depth = 6;
  std::size_t max_nodes = 2'000'000;
  // Nodes whose elements report more letters than this are pruned
  // (only meaningful for element types exposing letter_count()).
  std::size_t node_letter_cap = 100'000;
};

enum class SearchStatus { kFound, kNotFoundWithinBudget, kProductMismatch, kLengthMismatch };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNotFoundWithinBudget: return "not_found_within_budget";
    case SearchStatus::kProductMismatch: return "product_mismatch";
    case SearchStatus::kLengthMismatch: return "length_mismatch";
  }
  return "unknown";
}

struct SearchResult {
  SearchStatus status = SearchStatus::kNotFoundWithinBudget;
  std::vector<SearchStep> path;
  std::size_t explored = 0;
  std::size_t pruned = 0;
  int depth_reached = 0;
};

namespace detail {
template <class G>
std::size_t letters_of(const G& g) {
  if constexpr (requires { g.letter_count(); })
    return g.letter_count();
  else
    return 0;
}

template <GroupElement G>
struct FactorizationHash {
  std::size_t operator()(const Factorization<G>& f) const { return f.hash(); }
};
}  // namespace detail

// Breadth-first search from `start` towards `target` over Hurwitz moves (and
// simultaneous conjugation by the given elements).  Moves are expanded in the
// order +1, -1, +2, -2, ..., then conjugators in list order, so results are
// deterministic.  A negative answer only means "not within budget".
template <GroupElement G>
SearchResult orbit_search(const Factorization<G>& start, const Factorization<G>& target,
                          const SearchOptions& opts = {}, const std::vector<G>& conjugators = {}) {
  SearchResult res;
  if (start.size() != target.size()) {
    res.status = SearchStatus::kLengthMismatch;
    return res;
  }
  if (start.empty()) {
    res.status = SearchStatus::kFound;
    return res;
  }
  if (!conjugators.empty()) {
    // With conjugation the product may move within its conjugacy class;
    // only the plain Hurwitz case allows an exact product test.
  } else if (!(start.product() == target.product())) {
    res.status = SearchStatus::kProductMismatch;
    return res;
  }

  using F = Factorization<G>;
  struct Node {
    F f;
    std::size_t parent;
    SearchStep step;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_set<F, detail::FactorizationHash<G>> seen;
  nodes.push_back({start, 0, {}, 0});
  seen.insert(start);

  auto finish = [&](std::size_t idx) {
    std::vector<SearchStep> path;
    for (std::size_t k = idx; k != 0; k = nodes[k].parent) path.push_back(nodes[k].step);
    std::reverse(path.begin(), path.end());
    res.path = std::move(path);
    res.status = SearchStatus::kFound;
    res.depth_reached = nodes[idx].depth;
  };

  if (start == target) {
    finish(0);
    res.explored = 1;
    return res;
  }

  const int m = static_cast<int>(start.size());
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= opts.max_depth) break;
    ++res.explored;
    res.depth_reached = std::max(res.depth_reached, nodes[head].depth + 1);
    auto try_child = [&](std::vector<G> v, SearchStep step) -> bool {
      for (const auto& e : v) {
        if (detail::letters_of(e) > opts.node_letter_cap) {
          ++res.pruned;
          return false;
        }
      }
      F child(std::move(v));
      if (!seen.insert(child).second) return false;
      if (nodes.size() >= opts.max_nodes) return false;
      nodes.push_back({std::move(child), head, step, nodes[head].depth + 1});
      if (nodes.back().f == target) {
        finish(nodes.size() - 1);
        return true;
      }
      return false;
    };
    for (int i = 1; i < m; ++i) {
      for (int sign : {1, -1}) {
        std::vector<G> v = nodes[head].f.elements();
        try {
          detail::apply_letter(v, sign * i);
        } catch (const LetterCapExceeded&) {
          ++res.pruned;
          continue;
        }
        if (try_child(std::move(v), {SearchStep::Kind::kMove, sign * i})) return res;
      }
    }
    for (std::size_t c = 0; c < conjugators.size(); ++c) {
      std::vector<G> v;
      try {
        v = simultaneous_conjugate(nodes[head].f, conjugators[c]).elements();
      } catch (const LetterCapExceeded&) {
        ++res.pruned;
        continue;
      }
      if (try_child(std::move(v), {SearchStep::Kind::kConjugate, static_cast<int>(c)})) return res;
    }
  }
  res.status = SearchStatus::kNotFoundWithinBudget;
  return res;
}

// Replay a search path.
template <GroupElement G>
Factorization<G> apply_path(const Factorization<G>& f, const std::vector<SearchStep>& path,
                            const std::vector<G>& conjugators = {}) {
  Factorization<G> cur = f;
  for (const auto& s : path) {
    if (s.kind == SearchStep::Kind::kMove)
      cur = hurwitz_move(cur, std::abs(s.value), s.value > 0 ? MoveDirection::kForward : MoveDirection::kInverse);
    else
      cur = simultaneous_conjugate(cur, conjugators.at(static_cast<std::size_t>(s.value)));
  }
  return cur;
}

}  // namespace hurwitzkit

template <hurwitzkit::GroupElement G>
struct std::hash<hurwitzkit::Factorization<G>> {
  std::size_t operator()(const hurwitzkit::Factorization<G>& f) const noexcept { return f.hash(); }
};
