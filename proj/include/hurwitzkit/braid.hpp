#pragma once

// Braid words on n strands and their exact comparison through the Artin
// action on the free group F_n = <g_1..g_n>.
//
// Convention.  The positive generator s_i acts on a tuple (x_1..x_n) of group
// elements by the Hurwitz move
//
//     (x_i, x_{i+1})  ->  (x_i x_{i+1} x_i^{-1}, x_i),
//
// and s_i^{-1} by the inverse move (x_i, x_{i+1}) -> (x_{i+1}, x_{i+1}^{-1} x_i x_{i+1}).
// Letters of a word act left to right.  The Artin representative of a word w
// is the image of the free basis (g_1..g_n) under this action; acting by w on
// any tuple in any group equals substituting the tuple into those images.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitzkit/free_group.hpp"
#include "hurwitzkit/perm.hpp"

namespace hurwitzkit {

inline constexpr std::size_t kDefaultLetterCap = 1'000'000;

class LetterCapExceeded : public std::runtime_error {
 public:
  explicit LetterCapExceeded(std::size_t letters)
      : std::runtime_error("Artin representative exceeds letter cap (" + std::to_string(letters) +
                           " letters)") {}
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands) : strands_(strands) { check_strands(); }
  BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    check_strands();
    for (int l : letters_) check_letter(l);
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push(int letter) {
    check_letter(letter);
    letters_.push_back(letter);
  }

  // Append `letter` |power| times, inverted when power < 0.
  void push_power(int generator, int power) {
    for (int k = 0; k < std::abs(power); ++k) push(power > 0 ? generator : -generator);
  }

  void append(const BraidWord& w) {
    require_same_strands(w);
    for (int l : w.letters_) letters_.push_back(l);
  }

  BraidWord inverse() const {
    BraidWord out(strands_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
    return out;
  }

  BraidWord freely_reduced() const {
    BraidWord out(strands_);
    for (int l : letters_) {
      if (!out.letters_.empty() && out.letters_.back() == -l)
        out.letters_.pop_back();
      else
        out.letters_.push_back(l);
    }
    return out;
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    BraidWord out = a;
    out.append(b);
    return out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  int exponent_sum() const {
    int s = 0;
    for (int l : letters_) s += l > 0 ? 1 : -1;
    return s;
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << 's' << std::abs(letters_[i]);
      if (letters_[i] < 0) os << "^-1";
    }
    return os.str();
  }

  void require_same_strands(const BraidWord& w) const {
    if (w.strands_ != strands_) throw std::invalid_argument("BraidWord: strand count mismatch");
  }

 private:
  void check_strands() const {
    if (strands_ < 2) throw std::invalid_argument("BraidWord: need at least 2 strands");
  }
  void check_letter(int l) const {
    if (l == 0 || std::abs(l) >= strands_)
      throw std::invalid_argument("BraidWord: generator index out of range");
  }

  int strands_ = 2;
  std::vector<int> letters_;
};

// Apply one Hurwitz move to a tuple held in a vector.  `letter` = +i is the
// forward move at (i, i+1), -i the inverse move; positions are 1-based.
template <class T, class Mul, class Inv>
void apply_hurwitz_letter(std::vector<T>& tuple, int letter, Mul mul, Inv inv) {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);
  if (i + 1 >= tuple.size()) throw std::out_of_range("Hurwitz move index out of range");
  T x = tuple[i];
  T y = tuple[i + 1];
  if (letter > 0) {
    tuple[i] = mul(mul(x, y), inv(x));
    tuple[i + 1] = std::move(x);
  } else {
    tuple[i] = y;
    tuple[i + 1] = mul(mul(inv(y), x), y);
  }
}

// An automorphism of F_n given by the images of the free generators,
// stored together with the images of its inverse.  Group product follows
// braid-word concatenation: artin_rep(u) * artin_rep(v) == artin_rep(u v).
class ArtinAuto {
 public:
  ArtinAuto() = default;

  static ArtinAuto identity(int rank, std::size_t letter_cap = kDefaultLetterCap) {
    ArtinAuto a;
    a.cap_ = letter_cap;
    for (int k = 1; k <= rank; ++k) {
      a.images_.push_back(FreeWord::generator(rank, k));
      a.inverse_images_.push_back(FreeWord::generator(rank, k));
    }
    return a;
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const std::vector<FreeWord>& inverse_images() const { return inverse_images_; }
  std::size_t letter_cap() const { return cap_; }

  std::size_t letter_count() const {
    std::size_t n = 0;
    for (const auto& w : images_) n += w.length();
    for (const auto& w : inverse_images_) n += w.length();
    return n;
  }

  bool is_identity() const {
    for (int k = 0; k < rank(); ++k)
      if (images_[static_cast<std::size_t>(k)].letters() != std::vector<int>{k + 1}) return false;
    return true;
  }

  // Right-multiply by a single Artin generator (letter +i or -i).
  void apply_letter(int letter) {
    if (letter == 0 || std::abs(letter) >= rank())
      throw std::invalid_argument("ArtinAuto: generator index out of range");
    auto mul = [](const FreeWord& a, const FreeWord& b) { return a * b; };
    auto inv = [](const FreeWord& a) { return a.inverse(); };
    apply_hurwitz_letter(images_, letter, mul, inv);
    // Inverse of (w * l) is l^{-1} * w^{-1}: substitute the images of l^{-1}.
    std::vector<FreeWord> step = generator_images(rank(), -letter);
    for (auto& w : inverse_images_) w = w.substitute(step);
    check_cap();
  }

  ArtinAuto inverse() const {
    ArtinAuto out = *this;
    std::swap(out.images_, out.inverse_images_);
    return out;
  }

  friend ArtinAuto operator*(const ArtinAuto& a, const ArtinAuto& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("ArtinAuto: rank mismatch");
    ArtinAuto out;
    out.cap_ = std::min(a.cap_, b.cap_);
    out.images_.reserve(b.images_.size());
    for (const auto& w : b.images_) out.images_.push_back(w.substitute(a.images_));
    for (const auto& w : a.inverse_images_) out.inverse_images_.push_back(w.substitute(b.inverse_images_));
    out.check_cap();
    return out;
  }

  // Equality of automorphisms; the inverse images are determined by the images.
  friend bool operator==(const ArtinAuto& a, const ArtinAuto& b) { return a.images_ == b.images_; }

  std::size_t hash() const {
    std::size_t h = images_.size();
    for (const auto& w : images_) h = h * 0x9e3779b97f4a7c15ULL + w.hash();
    return h;
  }

  // Image of the product g_1 g_2 ... g_n.
  FreeWord image_of_boundary() const {
    FreeWord out(rank());
    for (const auto& w : images_) out.append(w);
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int k = 0; k < rank(); ++k) {
      if (k) os << "; ";
      os << 'g' << k + 1 << " -> " << images_[static_cast<std::size_t>(k)].to_string();
    }
    return os.str();
  }

  // Images of g_1..g_n under a single generator letter.
  static std::vector<FreeWord> generator_images(int rank, int letter) {
    std::vector<FreeWord> out;
    for (int k = 1; k <= rank; ++k) out.push_back(FreeWord::generator(rank, k));
    auto mul = [](const FreeWord& a, const FreeWord& b) { return a * b; };
    auto inv = [](const FreeWord& a) { return a.inverse(); };
    apply_hurwitz_letter(out, letter, mul, inv);
    return out;
  }

 private:
  void check_cap() const {
    std::size_t n = letter_count();
    if (n > cap_) throw LetterCapExceeded(n);
  }

  std::vector<FreeWord> images_;
  std::vector<FreeWord> inverse_images_;
  std::size_t cap_ = kDefaultLetterCap;
};

inline ArtinAuto artin_rep(const BraidWord& w, std::size_t letter_cap = kDefaultLetterCap) {
  ArtinAuto a = ArtinAuto::identity(w.strands(), letter_cap);
  for (int l : w.letters()) a.apply_letter(l);
  return a;
}

inline bool braid_equal(const BraidWord& w1, const BraidWord& w2,
                        std::size_t letter_cap = kDefaultLetterCap) {
  w1.require_same_strands(w2);
  return artin_rep(w1, letter_cap) == artin_rep(w2, letter_cap);
}

// Underlying permutation: s_i -> (i, i+1), composed left to right.
inline Perm word_permutation(const BraidWord& w) {
  Perm p = Perm::identity(w.strands());
  for (int l : w.letters()) {
    int i = std::abs(l);
    p = p * Perm::transposition(w.strands(), i, i + 1);
  }
  return p;
}

// The snake half twist crossing the D/B boundary at positions 4d, 4d+1:
//   s_{4d} (s_{4d-1}^2 s_{4d+1}^2) s_{4d} (s_{4d+1}^{-2} s_{4d-1}^{-2}) s_{4d}^{-1}.
inline BraidWord snake_word(int d, int strands) {
  if (d < 1) throw std::invalid_argument("snake_word: d must be positive");
  if (strands < 4 * d + 2) throw std::invalid_argument("snake_word: need at least 4d+2 strands");
  const int m = 4 * d;
  BraidWord w(strands);
  w.push(m);
  w.push_power(m - 1, 2);
  w.push_power(m + 1, 2);
  w.push(m);
  w.push_power(m + 1, -2);
  w.push_power(m - 1, -2);
  w.push(-m);
  return w;
}

// Half twist along the arc from puncture r to puncture s passing above all
// punctures in between: (s_{s-1} ... s_{r+1}) s_r (s_{r+1}^{-1} ... s_{s-1}^{-1}).
inline BraidWord band_generator(int r, int s, int strands) {
  if (r < 1 || s > strands || r >= s) throw std::invalid_argument("band_generator: need 1 <= r < s <= n");
  BraidWord w(strands);
  for (int k = s - 1; k > r; --k) w.push(k);
  w.push(r);
  for (int k = r + 1; k < s; ++k) w.push(-k);
  return w;
}

// c * x * c^{-1} as a word.
inline BraidWord conjugated_word(const BraidWord& conj, const BraidWord& x) {
  return conj * x * conj.inverse();
}

// s_1 ... s_{n-1} s_{n-1} ... s_1, trivial in the sphere braid group but not
// in the disk braid group used for all comparisons here.
inline BraidWord sphere_relation_word(int strands) {
  BraidWord w(strands);
  for (int k = 1; k < strands; ++k) w.push(k);
  for (int k = strands - 1; k >= 1; --k) w.push(k);
  return w;
}

}  // namespace hurwitzkit

template <>
struct std::hash<hurwitzkit::ArtinAuto> {
  std::size_t operator()(const hurwitzkit::ArtinAuto& a) const noexcept { return a.hash(); }
};
