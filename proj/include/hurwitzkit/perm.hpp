#pragma once

// Finite permutations of {1..n}.
//
// Composition is LEFT-TO-RIGHT throughout the library: `p * q` applies p
// first and then q, so (p * q)(x) = q(p(x)).  Factorization products
// a_1 * a_2 * ... * a_m are read in the same order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitzkit {

class Perm {
 public:
  Perm() = default;

  static Perm identity(int degree) {
    if (degree < 1) throw std::invalid_argument("Perm: degree must be positive");
    Perm p;
    p.images_.resize(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) p.images_[static_cast<std::size_t>(i)] = i;
    return p;
  }

  // images[i] is the image of point i+1, given 1-based.
  static Perm from_images(const std::vector<int>& images) {
    if (images.empty()) throw std::invalid_argument("Perm: empty image list");
    Perm p;
    p.images_.reserve(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int img : images) {
      if (img < 1 || img > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(img - 1)])
        throw std::invalid_argument("Perm: images are not a bijection of {1..n}");
      seen[static_cast<std::size_t>(img - 1)] = true;
      p.images_.push_back(img - 1);
    }
    return p;
  }

  // Product of disjoint or overlapping cycles, each given with 1-based
  // points; cycles are composed left to right.
  static Perm from_cycles(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
    Perm result = identity(degree);
    for (const auto& cyc : cycles) {
      std::vector<int> pts(cyc);
      Perm c = identity(degree);
      for (std::size_t k = 0; k < pts.size(); ++k) {
        int from = pts[k];
        int to = pts[(k + 1) % pts.size()];
        if (from < 1 || from > degree || to < 1 || to > degree)
          throw std::invalid_argument("Perm: cycle point out of range");
        c.images_[static_cast<std::size_t>(from - 1)] = to - 1;
      }
      result = result * c;
    }
    result.validate();
    return result;
  }

  static Perm transposition(int degree, int i, int j) {
    if (i == j) throw std::invalid_argument("Perm: transposition needs distinct points");
    return from_cycles(degree, {{i, j}});
  }

  int degree() const { return static_cast<int>(images_.size()); }

  // 1-based image.
  int operator()(int point) const {
    if (point < 1 || point > degree()) throw std::out_of_range("Perm: point out of range");
    return images_[static_cast<std::size_t>(point - 1)] + 1;
  }

  const std::vector<int>& images0() const { return images_; }

  std::vector<int> images1() const {
    std::vector<int> out(images_);
    for (int& x : out) ++x;
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  Perm inverse() const {
    Perm p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return p;
  }

  // Apply *this first, then q.
  friend Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("Perm: degree mismatch");
    Perm r;
    r.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < p.images_.size(); ++i)
      r.images_[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  // Sorted cycle lengths, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (done[i]) continue;
      int len = 0;
      for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(images_[j])) {
        done[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  // Cycle notation with 1-based points, "()" for the identity.
  std::string to_string() const {
    std::ostringstream os;
    std::vector<bool> done(images_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (done[i] || images_[i] == static_cast<int>(i)) continue;
      any = true;
      os << '(';
      bool first = true;
      for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(images_[j])) {
        done[j] = true;
        if (!first) os << ' ';
        os << j + 1;
        first = false;
      }
      os << ')';
    }
    return any ? os.str() : "()";
  }

  friend std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_string(); }

  std::size_t hash() const {
    std::size_t h = images_.size();
    for (int x : images_) h = h * 31 + static_cast<std::size_t>(x);
    return h;
  }

 private:
  void validate() const {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("Perm: not a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  std::vector<int> images_;  // 0-based
};

inline Perm compose(const Perm& p, const Perm& q) { return p * q; }

// g^{-1} p g.
inline Perm conjugate(const Perm& p, const Perm& g) { return g.inverse() * p * g; }

// The surjection S4 -> S3 with kernel the Klein four-group, realized by the
// action of S4 on the three pair-partitions of {1,2,3,4}.  The partitions
// are labeled {14|23} -> 1, {13|24} -> 2, {12|34} -> 3, which sends (12) and
// (34) to (12), (13) and (24) to (13), and (14) and (23) to (23).
inline Perm quotient_s4_to_s3(const Perm& p) {
  if (p.degree() != 4) throw std::invalid_argument("quotient_s4_to_s3: degree must be 4");
  // Partner of point 0 identifies the partition: 3 -> label 0, 2 -> 1, 1 -> 2.
  auto label_of = [](int x, int y) {
    int partner = x == 0 ? y : (y == 0 ? x : -1);
    if (partner < 0) {
      // Pair not containing 0: its complement contains 0.
      int other = 6 - x - y;  // 0+1+2+3 = 6
      partner = other;        // complement is {0, other}
    }
    return 3 - partner;
  };
  static constexpr int kPairs[3][2] = {{0, 3}, {0, 2}, {0, 1}};  // labels 0,1,2
  std::vector<int> img(3);
  for (int label = 0; label < 3; ++label) {
    int x = p.images0()[static_cast<std::size_t>(kPairs[label][0])];
    int y = p.images0()[static_cast<std::size_t>(kPairs[label][1])];
    img[static_cast<std::size_t>(label)] = label_of(x, y) + 1;
  }
  return Perm::from_images(img);
}

// Every element of S_n in lexicographic order of image lists.
inline std::vector<Perm> symmetric_group(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace hurwitzkit

template <>
struct std::hash<hurwitzkit::Perm> {
  std::size_t operator()(const hurwitzkit::Perm& p) const noexcept { return p.hash(); }
};
