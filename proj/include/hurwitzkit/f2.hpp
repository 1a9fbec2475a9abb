#pragma once

// Linear algebra over F_2 for the homology of the horizontal fibre:
// alternating forms, quadratic refinements, transvections, Arf invariants,
// symplectic/orthogonal group enumeration and the transvection-group
// classification criterion.
//
// Vectors are column vectors stored as packed 64-bit words.  Operators are
// row-major bit matrices; `a * b` is the matrix product (apply b, then a).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitzkit/hurwitz.hpp"

namespace hurwitzkit {

namespace detail {
inline std::size_t words_for(int dim) { return static_cast<std::size_t>((dim + 63) / 64); }
}  // namespace detail

class F2Vec {
 public:
  F2Vec() = default;
  explicit F2Vec(int dim) : dim_(dim), words_(detail::words_for(dim), 0) {
    if (dim < 1) throw std::invalid_argument("F2Vec: dimension must be positive");
  }

  static F2Vec unit(int dim, int i) {
    F2Vec v(dim);
    v.set(i, true);
    return v;
  }

  // "0110..." with character k giving coordinate k.
  static F2Vec from_string(const std::string& bits) {
    F2Vec v(static_cast<int>(bits.size()));
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (bits[k] == '1')
        v.set(static_cast<int>(k), true);
      else if (bits[k] != '0')
        throw std::invalid_argument("F2Vec: expected a string of 0/1");
    }
    return v;
  }

  // Low `dim` bits of `mask` (dim <= 64).
  static F2Vec from_mask(int dim, std::uint64_t mask) {
    F2Vec v(dim);
    v.words_[0] = dim >= 64 ? mask : (mask & ((std::uint64_t{1} << dim) - 1));
    return v;
  }

  int dim() const { return dim_; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  bool get(int i) const {
    check(i);
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
  }
  void set(int i, bool bit) {
    check(i);
    std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (bit)
      words_[static_cast<std::size_t>(i) / 64] |= m;
    else
      words_[static_cast<std::size_t>(i) / 64] &= ~m;
  }
  void flip(int i) {
    check(i);
    words_[static_cast<std::size_t>(i) / 64] ^= std::uint64_t{1} << (i % 64);
  }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  int weight() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  F2Vec& operator+=(const F2Vec& o) {
    require_dim(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  friend F2Vec operator+(F2Vec a, const F2Vec& b) { return a += b; }

  // Standard dot product sum_i u_i v_i.
  friend bool dot(const F2Vec& a, const F2Vec& b) {
    a.require_dim(b);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) acc ^= a.words_[k] & b.words_[k];
    return std::popcount(acc) & 1;
  }

  friend bool operator==(const F2Vec&, const F2Vec&) = default;
  friend auto operator<=>(const F2Vec&, const F2Vec&) = default;

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(dim_), '0');
    for (int i = 0; i < dim_; ++i)
      if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(dim_);
    for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ w;
    return h;
  }

  void require_dim(const F2Vec& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("F2Vec: dimension mismatch");
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("F2Vec: coordinate out of range");
  }

  int dim_ = 0;
  std::vector<std::uint64_t> words_;
};

class F2Operator {
 public:
  F2Operator() = default;

  static F2Operator identity(int dim) {
    F2Operator m(dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, true);
    return m;
  }

  static F2Operator zero(int dim) { return F2Operator(dim); }

  // Rows given as 0/1 strings.
  static F2Operator from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("F2Operator: no rows");
    F2Operator m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim(); ++i) {
      const std::string& r = rows[static_cast<std::size_t>(i)];
      if (static_cast<int>(r.size()) != m.dim()) throw std::invalid_argument("F2Operator: matrix not square");
      for (int j = 0; j < m.dim(); ++j) {
        if (r[static_cast<std::size_t>(j)] == '1')
          m.set(i, j, true);
        else if (r[static_cast<std::size_t>(j)] != '0')
          throw std::invalid_argument("F2Operator: expected 0/1");
      }
    }
    return m;
  }

  // Operator whose j-th column is cols[j].
  static F2Operator from_columns(const std::vector<F2Vec>& cols) {
    F2Operator m(static_cast<int>(cols.size()));
    for (int j = 0; j < m.dim(); ++j)
      for (int i = 0; i < m.dim(); ++i)
        if (cols[static_cast<std::size_t>(j)].get(i)) m.set(i, j, true);
    return m;
  }

  int dim() const { return dim_; }
  std::size_t words_per_row() const { return wpr_; }
  const std::vector<std::uint64_t>& data() const { return data_; }
  std::vector<std::uint64_t>& data() { return data_; }

  bool get(int i, int j) const {
    return (data_[static_cast<std::size_t>(i) * wpr_ + static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1u;
  }
  void set(int i, int j, bool bit) {
    std::uint64_t& w = data_[static_cast<std::size_t>(i) * wpr_ + static_cast<std::size_t>(j) / 64];
    std::uint64_t m = std::uint64_t{1} << (j % 64);
    w = bit ? (w | m) : (w & ~m);
  }

  F2Vec row(int i) const {
    F2Vec v(dim_);
    for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = data_[static_cast<std::size_t>(i) * wpr_ + k];
    return v;
  }
  F2Vec column(int j) const {
    F2Vec v(dim_);
    for (int i = 0; i < dim_; ++i)
      if (get(i, j)) v.set(i, true);
    return v;
  }

  F2Vec apply(const F2Vec& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("F2Operator: dimension mismatch");
    F2Vec out(dim_);
    for (int i = 0; i < dim_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < wpr_; ++k) acc ^= data_[static_cast<std::size_t>(i) * wpr_ + k] & v.words()[k];
      if (std::popcount(acc) & 1) out.set(i, true);
    }
    return out;
  }

  friend F2Operator operator*(const F2Operator& a, const F2Operator& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("F2Operator: dimension mismatch");
    F2Operator c(a.dim_);
    multiply_rows(a.data_.data(), b.data_.data(), c.data_.data(), a.dim_, a.wpr_);
    return c;
  }

  // Raw row-major product out = a * b for dim x dim matrices with `wpr`
  // words per row.  `out` must not alias `b`.
  static void multiply_rows(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, int dim,
                            std::size_t wpr) {
    for (int i = 0; i < dim; ++i) {
      std::uint64_t* orow = out + static_cast<std::size_t>(i) * wpr;
      std::fill(orow, orow + wpr, 0);
      const std::uint64_t* arow = a + static_cast<std::size_t>(i) * wpr;
      for (std::size_t kw = 0; kw < wpr; ++kw) {
        std::uint64_t bits = arow[kw];
        while (bits) {
          int t = std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* brow = b + (kw * 64 + static_cast<std::size_t>(t)) * wpr;
          for (std::size_t k = 0; k < wpr; ++k) orow[k] ^= brow[k];
        }
      }
    }
  }

  F2Operator transpose() const {
    F2Operator t(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  // Gauss-Jordan inverse; throws if singular.
  F2Operator inverse() const {
    F2Operator m = *this;
    F2Operator inv = identity(dim_);
    for (int col = 0; col < dim_; ++col) {
      int pivot = -1;
      for (int r = col; r < dim_; ++r)
        if (m.get(r, col)) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw std::domain_error("F2Operator: matrix is singular");
      m.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
      for (int r = 0; r < dim_; ++r)
        if (r != col && m.get(r, col)) {
          m.add_row(col, r);
          inv.add_row(col, r);
        }
    }
    return inv;
  }

  int rank() const {
    F2Operator m = *this;
    int r = 0;
    for (int col = 0; col < dim_ && r < dim_; ++col) {
      int pivot = -1;
      for (int k = r; k < dim_; ++k)
        if (m.get(k, col)) {
          pivot = k;
          break;
        }
      if (pivot < 0) continue;
      m.swap_rows(pivot, r);
      for (int k = 0; k < dim_; ++k)
        if (k != r && m.get(k, col)) m.add_row(r, k);
      ++r;
    }
    return r;
  }

  bool is_identity() const { return *this == identity(dim_); }

  friend bool operator==(const F2Operator&, const F2Operator&) = default;

  std::size_t hash() const { return hash_words(data_.data(), data_.size()); }

  static std::size_t hash_words(const std::uint64_t* w, std::size_t n) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t k = 0; k < n; ++k) {
      h ^= w[k];
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  std::vector<std::string> to_rows() const {
    std::vector<std::string> rows;
    for (int i = 0; i < dim_; ++i) rows.push_back(row(i).to_string());
    return rows;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (std::size_t k = 0; k < wpr_; ++k)
      std::swap(data_[static_cast<std::size_t>(a) * wpr_ + k], data_[static_cast<std::size_t>(b) * wpr_ + k]);
  }
  // row[dst] += row[src]
  void add_row(int src, int dst) {
    for (std::size_t k = 0; k < wpr_; ++k)
      data_[static_cast<std::size_t>(dst) * wpr_ + k] ^= data_[static_cast<std::size_t>(src) * wpr_ + k];
  }

 private:
  explicit F2Operator(int dim)
      : dim_(dim), wpr_(detail::words_for(dim)), data_(static_cast<std::size_t>(dim) * detail::words_for(dim), 0) {
    if (dim < 1) throw std::invalid_argument("F2Operator: dimension must be positive");
  }

  int dim_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

// Solve m x = rhs for invertible m.
inline F2Vec solve(const F2Operator& m, const F2Vec& rhs) { return m.inverse().apply(rhs); }

// Alternating bilinear form given by its Gram matrix in the standard basis.
class F2BilinearForm {
 public:
  F2BilinearForm() = default;
  explicit F2BilinearForm(F2Operator gram) : gram_(std::move(gram)) {
    for (int i = 0; i < gram_.dim(); ++i) {
      if (gram_.get(i, i)) throw std::invalid_argument("F2BilinearForm: diagonal must vanish");
      for (int j = 0; j < i; ++j)
        if (gram_.get(i, j) != gram_.get(j, i)) throw std::invalid_argument("F2BilinearForm: not symmetric");
    }
  }

  // Form whose Gram matrix is the adjacency matrix of a graph on dim vertices.
  static F2BilinearForm from_edges(int dim, const std::vector<std::pair<int, int>>& edges) {
    F2Operator g = F2Operator::zero(dim);
    for (auto [i, j] : edges) {
      if (i == j) throw std::invalid_argument("F2BilinearForm: loop edge");
      g.set(i, j, true);
      g.set(j, i, true);
    }
    return F2BilinearForm(std::move(g));
  }

  int dim() const { return gram_.dim(); }
  const F2Operator& gram() const { return gram_; }

  bool operator()(const F2Vec& u, const F2Vec& v) const { return dot(u, gram_.apply(v)); }

  bool nondegenerate() const { return gram_.rank() == dim(); }

 private:
  F2Operator gram_;
};

// Quadratic refinement of an alternating form: q(u+v) = q(u) + q(v) + (u,v),
// determined by its values on the standard basis.
class F2Quadratic {
 public:
  F2Quadratic() = default;
  F2Quadratic(F2BilinearForm form, F2Vec basis_values) : form_(std::move(form)), values_(std::move(basis_values)) {
    if (values_.dim() != form_.dim()) throw std::invalid_argument("F2Quadratic: dimension mismatch");
  }

  const F2BilinearForm& form() const { return form_; }
  const F2Vec& basis_values() const { return values_; }
  int dim() const { return form_.dim(); }

  // sum_i v_i q(e_i) + sum_{i<j} v_i v_j (e_i, e_j)
  bool operator()(const F2Vec& v) const {
    bool acc = dot(v, values_);
    const F2Operator& g = form_.gram();
    for (int i = 0; i < dim(); ++i) {
      if (!v.get(i)) continue;
      // upper part of row i restricted to v
      for (int j = i + 1; j < dim(); ++j)
        if (v.get(j) && g.get(i, j)) acc = !acc;
    }
    return acc;
  }

 private:
  F2BilinearForm form_;
  F2Vec values_;
};

inline bool q_eval(const F2Quadratic& q, const F2Vec& v) { return q(v); }

// The refinement taking value `values[k]` on basis vector basis[k] (basis in
// standard coordinates, must span).
inline F2Quadratic quadratic_on_basis(const F2BilinearForm& form, const std::vector<F2Vec>& basis,
                                      const std::vector<bool>& values) {
  const int n = form.dim();
  if (static_cast<int>(basis.size()) != n || values.size() != basis.size())
    throw std::invalid_argument("quadratic_on_basis: need dim basis vectors and values");
  F2Operator p = F2Operator::from_columns(basis);
  if (p.rank() != n) throw std::invalid_argument("quadratic_on_basis: vectors do not form a basis");
  F2Operator pinv = p.inverse();
  // q on the basis-coordinate side, then read off standard unit vectors.
  F2Operator gb = F2Operator::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && form(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)])) gb.set(i, j, true);
  F2Vec vb(n);
  for (int i = 0; i < n; ++i) vb.set(i, values[static_cast<std::size_t>(i)]);
  F2Quadratic in_basis(F2BilinearForm(gb), vb);
  F2Vec std_values(n);
  for (int k = 0; k < n; ++k) std_values.set(k, in_basis(pinv.apply(F2Vec::unit(n, k))));
  return F2Quadratic(form, std_values);
}

// T_u(v) = v + (u,v) u.
inline F2Operator transvection(const F2Vec& u, const F2BilinearForm& form) {
  if (u.is_zero()) throw std::invalid_argument("transvection: zero vector");
  if (u.dim() != form.dim()) throw std::invalid_argument("transvection: dimension mismatch");
  F2Vec w = form.gram().apply(u);  // (u, e_j) = w_j
  F2Operator t = F2Operator::identity(u.dim());
  for (int i = 0; i < u.dim(); ++i) {
    if (!u.get(i)) continue;
    for (int j = 0; j < u.dim(); ++j)
      if (w.get(j)) t.set(i, j, !t.get(i, j));
  }
  return t;
}

inline bool is_symplectic(const F2Operator& g, const F2BilinearForm& form) {
  // g^T G g == G
  return g.transpose() * form.gram() * g == form.gram();
}

inline bool preserves_q(const F2Operator& g, const F2Quadratic& q) {
  if (!is_symplectic(g, q.form())) throw std::invalid_argument("preserves_q: operator is not symplectic");
  for (int i = 0; i < q.dim(); ++i) {
    F2Vec e = F2Vec::unit(q.dim(), i);
    if (q(g.apply(e)) != q(e)) return false;
  }
  return true;
}

using SymplecticPairs = std::vector<std::pair<F2Vec, F2Vec>>;

// Symplectic Gram-Schmidt starting from the standard basis.
inline SymplecticPairs symplectic_basis(const F2BilinearForm& form) {
  const int n = form.dim();
  std::vector<F2Vec> rest;
  for (int i = 0; i < n; ++i) rest.push_back(F2Vec::unit(n, i));
  SymplecticPairs out;
  while (!rest.empty()) {
    F2Vec e = rest.front();
    rest.erase(rest.begin());
    if (e.is_zero()) continue;
    auto it = std::find_if(rest.begin(), rest.end(), [&](const F2Vec& v) { return form(e, v); });
    if (it == rest.end()) throw std::domain_error("symplectic_basis: form is degenerate");
    F2Vec f = *it;
    rest.erase(it);
    for (auto& v : rest) {
      // v <- v + (v,f) e + (v,e) f makes v orthogonal to e and f.
      bool vf = form(v, f);
      bool ve = form(v, e);
      if (vf) v += e;
      if (ve) v += f;
    }
    out.emplace_back(std::move(e), std::move(f));
  }
  return out;
}

inline bool is_symplectic_basis(const SymplecticPairs& pairs, const F2BilinearForm& form) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (form(pairs[i].first, pairs[j].second) != (i == j)) return false;
      if (form(pairs[i].first, pairs[j].first)) return false;
      if (form(pairs[i].second, pairs[j].second)) return false;
    }
  return true;
}

inline int arf_from_basis(const F2Quadratic& q, const SymplecticPairs& pairs) {
  int acc = 0;
  for (const auto& [e, f] : pairs) acc ^= (q(e) && q(f)) ? 1 : 0;
  return acc;
}

// Arf invariant sum_i q(e_i) q(f_i) over a symplectic basis.
inline int arf(const F2Quadratic& q) { return arf_from_basis(q, symplectic_basis(q.form())); }

inline constexpr int kArfOracleExhaustiveDim = 24;
inline constexpr int kArfOracleMaxDim = 48;

// Number of zeros of q, counted without any symplectic basis: direct Gray
// code enumeration up to kArfOracleExhaustiveDim, above that an exact split
// character sum  #zeros = sum_y (2^m + (-1)^{q1(y)} W(l_y)) / 2  with the
// Walsh transform W of (-1)^{q2} over the second half of the coordinates.
inline std::uint64_t count_zeros(const F2Quadratic& q) {
  const int n = q.dim();
  if (n > kArfOracleMaxDim) throw std::invalid_argument("count_zeros: dimension too large for the oracle");
  const F2Operator& g = q.form().gram();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = g.data()[static_cast<std::size_t>(i)];
  std::vector<int> qe(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) qe[static_cast<std::size_t>(i)] = q.basis_values().get(i) ? 1 : 0;

  // Gray-code walk over a coordinate range [lo, lo+len), calling f(mask, value).
  auto walk = [&](int lo, int len, auto&& f) {
    std::uint64_t v = 0;
    int val = 0;
    f(v, val);
    const std::uint64_t total = std::uint64_t{1} << len;
    for (std::uint64_t k = 1; k < total; ++k) {
      int bit = lo + std::countr_zero(k);
      // q(v + e) = q(v) + q(e) + (v, e)
      int pair = std::popcount(rows[static_cast<std::size_t>(bit)] & v) & 1;
      val ^= qe[static_cast<std::size_t>(bit)] ^ pair;
      v ^= std::uint64_t{1} << bit;
      f(v, val);
    }
  };

  if (n <= kArfOracleExhaustiveDim) {
    std::uint64_t zeros = 0;
    walk(0, n, [&](std::uint64_t, int val) { zeros += val == 0 ? 1 : 0; });
    return zeros;
  }
  const int m1 = n / 2;
  const int m2 = n - m1;
  const std::uint64_t size2 = std::uint64_t{1} << m2;
  std::vector<std::int64_t> walsh(size2);
  walk(m1, m2, [&](std::uint64_t v, int val) { walsh[v >> m1] = val ? -1 : 1; });
  for (std::uint64_t h = 1; h < size2; h <<= 1)
    for (std::uint64_t i = 0; i < size2; i += h << 1)
      for (std::uint64_t j = i; j < i + h; ++j) {
        std::int64_t x = walsh[j], y = walsh[j + h];
        walsh[j] = x + y;
        walsh[j + h] = x - y;
      }
  const std::uint64_t low_mask = (std::uint64_t{1} << m1) - 1;
  std::int64_t twice_zeros = 0;
  walk(0, m1, [&](std::uint64_t y, int val) {
    // l_y(z) = (y, z): bit j of l is parity(row_{m1+j} & y).
    std::uint64_t l = 0;
    for (int j = 0; j < m2; ++j)
      if (std::popcount(rows[static_cast<std::size_t>(m1 + j)] & y & low_mask) & 1) l |= std::uint64_t{1} << j;
    std::int64_t w = walsh[l];
    twice_zeros += static_cast<std::int64_t>(size2) + (val ? -w : w);
  });
  return static_cast<std::uint64_t>(twice_zeros / 2);
}

// Arf invariant from the zero count: 0 iff #zeros = 2^{2g-1} + 2^{g-1}.
inline int arf_oracle(const F2Quadratic& q) {
  const int n = q.dim();
  if (n % 2 != 0) throw std::domain_error("arf_oracle: odd dimension");
  const int g = n / 2;
  const std::uint64_t zeros = count_zeros(q);
  const std::uint64_t big = std::uint64_t{1} << (2 * g - 1);
  const std::uint64_t small = std::uint64_t{1} << (g - 1);
  if (zeros == big + small) return 0;
  if (zeros == big - small) return 1;
  throw std::domain_error("arf_oracle: zero count does not match a nondegenerate form");
}

// Sets of operators of one dimension stored flat, with an open-addressing
// index.  Insertion order is preserved.
class OperatorSet {
 public:
  explicit OperatorSet(int dim) : dim_(dim), stride_(static_cast<std::size_t>(dim) * detail::words_for(dim)) {
    slots_.assign(1024, 0);
  }

  int dim() const { return dim_; }
  std::size_t size() const { return count_; }

  bool contains(const F2Operator& g) const { return find(g.data().data()) != kNone; }

  bool insert(const F2Operator& g) {
    if (g.dim() != dim_) throw std::invalid_argument("OperatorSet: dimension mismatch");
    return insert_raw(g.data().data());
  }

  F2Operator at(std::size_t i) const {
    F2Operator g = F2Operator::zero(dim_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(i * stride_), stride_, g.data().begin());
    return g;
  }

  const std::uint64_t* raw(std::size_t i) const { return data_.data() + i * stride_; }

  bool insert_raw(const std::uint64_t* w) {
    if (find(w) != kNone) return false;
    if ((count_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    data_.insert(data_.end(), w, w + stride_);
    place(static_cast<std::uint32_t>(count_));
    ++count_;
    return true;
  }

  // Same elements, regardless of order.
  friend bool operator==(const OperatorSet& a, const OperatorSet& b) {
    if (a.dim_ != b.dim_ || a.count_ != b.count_) return false;
    for (std::size_t i = 0; i < a.count_; ++i)
      if (b.find(a.raw(i)) == kNone) return false;
    return true;
  }

  bool is_subset_of(const OperatorSet& b) const {
    for (std::size_t i = 0; i < count_; ++i)
      if (b.find(raw(i)) == kNone) return false;
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t find(const std::uint64_t* w) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = F2Operator::hash_words(w, stride_) & mask;; s = (s + 1) & mask) {
      std::uint32_t e = slots_[s];
      if (e == 0) return kNone;
      if (std::equal(w, w + stride_, raw(e - 1))) return e - 1;
    }
  }

  void place(std::uint32_t idx) {
    std::size_t mask = slots_.size() - 1;
    std::size_t s = F2Operator::hash_words(raw(idx), stride_) & mask;
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = idx + 1;
  }

  void rehash(std::size_t n) {
    slots_.assign(n, 0);
    for (std::size_t i = 0; i < count_; ++i) place(static_cast<std::uint32_t>(i));
  }

  int dim_;
  std::size_t stride_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> data_;
  std::vector<std::uint32_t> slots_;
};

// Group generated by `gens`, breadth-first from the identity.
inline OperatorSet group_closure(const std::vector<F2Operator>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("group_closure: no generators");
  const int n = gens.front().dim();
  for (const auto& g : gens)
    if (g.dim() != n) throw std::invalid_argument("group_closure: generators of different dimension");
  OperatorSet set(n);
  set.insert(F2Operator::identity(n));
  F2Operator buf = F2Operator::zero(n);
  const std::size_t wpr = detail::words_for(n);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (const auto& g : gens) {
      F2Operator::multiply_rows(set.raw(i), g.data().data(), buf.data().data(), n, wpr);
      if (!set.contains(buf)) {
        if (set.size() >= cap) throw ClosureCapExceeded(cap);
        set.insert_raw(buf.data().data());
      }
    }
  }
  return set;
}

// Every symplectic operator of a nondegenerate form, enumerated as the maps
// sending a fixed symplectic basis to each symplectic frame.  dim <= 20.
inline OperatorSet enumerate_symplectic_group(const F2BilinearForm& form) {
  const int n = form.dim();
  if (n > 20) throw std::invalid_argument("enumerate_symplectic_group: dimension too large");
  SymplecticPairs base = symplectic_basis(form);
  std::vector<F2Vec> base_cols;
  for (const auto& [e, f] : base) {
    base_cols.push_back(e);
    base_cols.push_back(f);
  }
  const F2Operator base_inv = F2Operator::from_columns(base_cols).inverse();
  std::vector<F2Vec> all;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) all.push_back(F2Vec::from_mask(n, m));

  OperatorSet out(n);
  std::vector<F2Vec> chosen;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(chosen.size()) == n) {
      out.insert(F2Operator::from_columns(chosen) * base_inv);
      return;
    }
    auto orthogonal = [&](const F2Vec& v) {
      return std::none_of(chosen.begin(), chosen.end(), [&](const F2Vec& c) { return form(v, c); });
    };
    for (const auto& e : all) {
      if (!orthogonal(e)) continue;
      for (const auto& f : all) {
        if (!orthogonal(f) || !form(e, f)) continue;
        chosen.push_back(e);
        chosen.push_back(f);
        rec();
        chosen.pop_back();
        chosen.pop_back();
      }
    }
  };
  rec();
  return out;
}

inline OperatorSet filter_preserving(const OperatorSet& group, const F2Quadratic& q) {
  OperatorSet out(group.dim());
  for (std::size_t i = 0; i < group.size(); ++i) {
    F2Operator g = group.at(i);
    if (preserves_q(g, q)) out.insert(g);
  }
  return out;
}

// |Sp(2g, 2)| = 2^{g^2} prod_{i=1..g} (4^i - 1).
inline std::uint64_t symplectic_group_order(int g) {
  std::uint64_t r = std::uint64_t{1} << (g * g);
  for (int i = 1; i <= g; ++i) r *= (std::uint64_t{1} << (2 * i)) - 1;
  return r;
}

// |O^e(2g, 2)| = 2 * 2^{g(g-1)} (2^g - e) prod_{i=1..g-1} (4^i - 1), with
// e = +1 for Arf 0 and e = -1 for Arf 1.
inline std::uint64_t orthogonal_group_order(int g, int arf_value) {
  std::uint64_t r = 2 * (std::uint64_t{1} << (g * (g - 1)));
  std::uint64_t two_g = std::uint64_t{1} << g;
  r *= arf_value == 0 ? two_g - 1 : two_g + 1;
  for (int i = 1; i < g; ++i) r *= (std::uint64_t{1} << (2 * i)) - 1;
  return r;
}

// ---------------------------------------------------------------------------
// The cross-shaped model of H_1(fibre; Z/2) for the horizontal fibration.

struct CrossSpace {
  int a = 2;
  int c = 2;
  std::vector<std::string> labels;  // s, a1.., b1.., c1.., d1..
  F2BilinearForm form;

  int dim() const { return static_cast<int>(labels.size()); }
  int genus() const { return 2 * a + 2 * c - 3; }

  int index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("CrossSpace: unknown label " + label);
    return static_cast<int>(it - labels.begin());
  }

  F2Vec vec(const std::string& label) const { return F2Vec::unit(dim(), index_of(label)); }

  // Sum of labeled basis vectors.
  F2Vec sum(const std::vector<std::string>& ls) const {
    F2Vec v(dim());
    for (const auto& l : ls) v += vec(l);
    return v;
  }

  std::vector<F2Vec> basis() const {
    std::vector<F2Vec> b;
    for (int i = 0; i < dim(); ++i) b.push_back(F2Vec::unit(dim(), i));
    return b;
  }

  // Chain lengths in the basis: alpha 2a-1, beta 2c-2, gamma 2a-2, delta 2c-2.
  static int chain_length(char chain, int a, int c) {
    switch (chain) {
      case 'a': return 2 * a - 1;
      case 'b': return 2 * c - 2;
      case 'c': return 2 * a - 2;
      case 'd': return 2 * c - 2;
    }
    throw std::invalid_argument("CrossSpace: unknown chain");
  }
};

// Basis s; a_1..a_{2a-1}; b_1..b_{2c-2}; c_1..c_{2a-2}; d_1..d_{2c-2}.
// Consecutive members of each chain meet once, s meets the first member of
// each chain once, nothing else meets.
inline CrossSpace build_cross_space(int a, int c) {
  if (a < 2 || c < 2) throw std::invalid_argument("build_cross_space: need a, c >= 2");
  CrossSpace sp;
  sp.a = a;
  sp.c = c;
  sp.labels.push_back("s");
  std::vector<std::pair<int, int>> edges;
  for (char chain : {'a', 'b', 'c', 'd'}) {
    const int len = CrossSpace::chain_length(chain, a, c);
    const int first = static_cast<int>(sp.labels.size());
    for (int k = 1; k <= len; ++k) sp.labels.push_back(std::string(1, chain) + std::to_string(k));
    edges.emplace_back(0, first);
    for (int k = 1; k < len; ++k) edges.emplace_back(first + k - 1, first + k);
  }
  if (sp.dim() != 4 * (a + c) - 6) throw std::logic_error("build_cross_space: dimension check failed");
  sp.form = F2BilinearForm::from_edges(sp.dim(), edges);
  return sp;
}

// q = 1 on every basis vector.
inline F2Quadratic quadratic_from_basis(const CrossSpace& sp) {
  F2Vec ones(sp.dim());
  for (int i = 0; i < sp.dim(); ++i) ones.set(i, true);
  return F2Quadratic(sp.form, ones);
}

// The three chain ends left out of the basis: b_{2c-1}, c_{2a-1}, d_{2c-1}.
enum class OmittedVector { kBEnd, kCEnd, kDEnd };

inline std::string omitted_label(OmittedVector which, int a, int c) {
  switch (which) {
    case OmittedVector::kBEnd: return "b" + std::to_string(2 * c - 1);
    case OmittedVector::kCEnd: return "c" + std::to_string(2 * a - 1);
    case OmittedVector::kDEnd: return "d" + std::to_string(2 * c - 1);
  }
  return "?";
}

// Each omitted chain end meets only the last basis member of its chain; the
// vector is the unique solution of those intersection conditions.
inline F2Vec omitted_vector(OmittedVector which, const CrossSpace& sp) {
  std::string neighbour;
  switch (which) {
    case OmittedVector::kBEnd: neighbour = "b" + std::to_string(2 * sp.c - 2); break;
    case OmittedVector::kCEnd: neighbour = "c" + std::to_string(2 * sp.a - 2); break;
    case OmittedVector::kDEnd: neighbour = "d" + std::to_string(2 * sp.c - 2); break;
  }
  // (x, e_k) = (G x)_k, so G x = e_neighbour.
  F2Vec rhs = sp.vec(neighbour);
  F2Vec x = solve(sp.form.gram(), rhs);
  for (int k = 0; k < sp.dim(); ++k)
    if (sp.form(x, F2Vec::unit(sp.dim(), k)) != rhs.get(k))
      throw std::logic_error("omitted_vector: inconsistent intersection system");
  return x;
}

inline std::vector<F2Vec> omitted_vectors(const CrossSpace& sp) {
  return {omitted_vector(OmittedVector::kBEnd, sp), omitted_vector(OmittedVector::kCEnd, sp),
          omitted_vector(OmittedVector::kDEnd, sp)};
}

// A symplectic basis of the (2,2) cross space written in labels; each pair
// (e, f) lists the labels summed in e and in f.
inline std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> cross_basis_22_labels() {
  return {{{"a3"}, {"a2"}},
          {{"a3", "a1"}, {"s"}},
          {{"a3", "a1", "b1"}, {"b2"}},
          {{"a3", "a1", "c1"}, {"c2"}},
          {{"a3", "a1", "d1"}, {"d2"}}};
}

// Forms whose standard basis has the intersection graph of a Dynkin diagram:
// "a<n>" (chain) and "e6", "e7", "e8" (branch at the third vertex).
inline F2BilinearForm dynkin_form(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("dynkin_form: unknown diagram " + name);
  const int n = std::stoi(name.substr(1));
  std::vector<std::pair<int, int>> edges;
  if (name[0] == 'a' && n >= 2) {
    for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
  } else if (name[0] == 'e' && n >= 6 && n <= 8) {
    // chain 0-1-...-(n-2) with vertex n-1 attached to vertex 2
    for (int k = 0; k + 2 < n; ++k) edges.emplace_back(k, k + 1);
    edges.emplace_back(2, n - 1);
  } else {
    throw std::invalid_argument("dynkin_form: unknown diagram " + name);
  }
  F2BilinearForm f = F2BilinearForm::from_edges(n, edges);
  if (!f.nondegenerate()) throw std::invalid_argument("dynkin_form: " + name + " is degenerate mod 2");
  return f;
}

// ---------------------------------------------------------------------------
// Classification of transvection groups containing the transvections of a
// basis, by the criterion on q-values and the intersection diagram.

enum class TransvectionVerdict { kFullSymplectic, kOrthogonalOfQ, kSpecialBasis };

inline std::string to_string(TransvectionVerdict v) {
  switch (v) {
    case TransvectionVerdict::kFullSymplectic: return "full_symplectic";
    case TransvectionVerdict::kOrthogonalOfQ: return "orthogonal_of_q";
    case TransvectionVerdict::kSpecialBasis: return "special_basis";
  }
  return "?";
}

enum class DiagramShape { kNotTree, kA, kD, kNonSpecialTree };

inline std::string to_string(DiagramShape s) {
  switch (s) {
    case DiagramShape::kNotTree: return "not_a_tree";
    case DiagramShape::kA: return "A_n";
    case DiagramShape::kD: return "D_n";
    case DiagramShape::kNonSpecialTree: return "non_special_tree";
  }
  return "?";
}

// Shape of the intersection graph of `vecs`.
inline DiagramShape diagram_shape(const std::vector<F2Vec>& vecs, const F2BilinearForm& form) {
  const int n = static_cast<int>(vecs.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (form(vecs[static_cast<std::size_t>(i)], vecs[static_cast<std::size_t>(j)])) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
        ++edges;
      }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n || edges != n - 1) return DiagramShape::kNotTree;
  int branch_vertex = -1;
  for (int v = 0; v < n; ++v) {
    std::size_t deg = adj[static_cast<std::size_t>(v)].size();
    if (deg > 3) return DiagramShape::kNonSpecialTree;
    if (deg == 3) {
      if (branch_vertex >= 0) return DiagramShape::kNonSpecialTree;
      branch_vertex = v;
    }
  }
  if (branch_vertex < 0) return DiagramShape::kA;
  // D_n: at least two of the three arms at the branch vertex are single leaves.
  int short_arms = 0;
  for (int w : adj[static_cast<std::size_t>(branch_vertex)])
    if (adj[static_cast<std::size_t>(w)].size() == 1) ++short_arms;
  return short_arms >= 2 ? DiagramShape::kD : DiagramShape::kNonSpecialTree;
}

struct TransvectionClassification {
  TransvectionVerdict verdict = TransvectionVerdict::kSpecialBasis;
  DiagramShape shape = DiagramShape::kNotTree;
  std::optional<std::size_t> zero_witness;  // index into the extra vectors with q = 0
  bool criterion_based = true;
};

// `basis` spans V and q is defined by q = 1 on it; `extra` are the other
// transvection vectors of the generating set.
inline TransvectionClassification classify_transvection_group(const std::vector<F2Vec>& basis, const std::vector<F2Vec>& extra,
                                                   const F2BilinearForm& form) {
  if (static_cast<int>(basis.size()) != form.dim() || F2Operator::from_columns(basis).rank() != form.dim())
    throw std::invalid_argument("classify_transvection_group: generators do not contain a basis");
  F2Quadratic q = quadratic_on_basis(form, basis, std::vector<bool>(basis.size(), true));
  TransvectionClassification out;
  out.shape = diagram_shape(basis, form);
  for (std::size_t k = 0; k < extra.size(); ++k)
    if (!q(extra[k])) {
      out.zero_witness = k;
      out.verdict = TransvectionVerdict::kFullSymplectic;
      return out;
    }
  out.verdict = out.shape == DiagramShape::kNonSpecialTree ? TransvectionVerdict::kOrthogonalOfQ
                                                           : TransvectionVerdict::kSpecialBasis;
  return out;
}

// ---------------------------------------------------------------------------

enum class HorizontalVerdict { kObstructed, kNoObstructionFullSymplectic, kNoObstructionSameArf, kDifferentGenus };

inline std::string to_string(HorizontalVerdict v) {
  switch (v) {
    case HorizontalVerdict::kObstructed: return "obstructed";
    case HorizontalVerdict::kNoObstructionFullSymplectic: return "no_obstruction_full_symplectic";
    case HorizontalVerdict::kNoObstructionSameArf: return "no_obstruction_same_arf";
    case HorizontalVerdict::kDifferentGenus: return "different_genus";
  }
  return "?";
}

struct HorizontalObstruction {
  HorizontalVerdict verdict = HorizontalVerdict::kNoObstructionSameArf;
  int arf_first = 0;
  int arf_second = 0;
};

// Compares the transvection monodromy of the horizontal fibres of two
// surfaces with parameters (a, c) and (a2, c2).  The Arf values are computed
// from the cross spaces, not from the parity of a.
inline HorizontalObstruction horizontal_obstruction(int a, int c, int a2, int c2) {
  if (a < 2 || c < 2 || a2 < 2 || c2 < 2) throw std::invalid_argument("horizontal_obstruction: need all >= 2");
  HorizontalObstruction r;
  r.arf_first = arf(quadratic_from_basis(build_cross_space(a, c)));
  r.arf_second = arf(quadratic_from_basis(build_cross_space(a2, c2)));
  if (a + c != a2 + c2) {
    r.verdict = HorizontalVerdict::kDifferentGenus;
  } else if ((a + c) % 2 != 0) {
    r.verdict = HorizontalVerdict::kNoObstructionFullSymplectic;
  } else if (r.arf_first != r.arf_second) {
    r.verdict = HorizontalVerdict::kObstructed;
  } else {
    r.verdict = HorizontalVerdict::kNoObstructionSameArf;
  }
  return r;
}

}  // namespace hurwitzkit

template <>
struct std::hash<hurwitzkit::F2Vec> {
  std::size_t operator()(const hurwitzkit::F2Vec& v) const noexcept { return v.hash(); }
};
template <>
struct std::hash<hurwitzkit::F2Operator> {
  std::size_t operator()(const hurwitzkit::F2Operator& g) const noexcept { return g.hash(); }
};
