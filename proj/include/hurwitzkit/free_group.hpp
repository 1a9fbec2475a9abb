#pragma once

// Freely reduced words in the free group on generators g_1..g_n.  A letter is
// a nonzero signed integer: +k is g_k, -k is g_k^{-1}.

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitzkit {

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}
  FreeWord(int rank, const std::vector<int>& letters) : rank_(rank) {
    for (int l : letters) push(l);
  }

  static FreeWord generator(int rank, int k) { return FreeWord(rank, {k}); }

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Append one letter, cancelling against the tail.
  void push(int letter) {
    if (letter == 0 || std::abs(letter) > rank_)
      throw std::invalid_argument("FreeWord: letter out of range");
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }

  void append(const FreeWord& w) {
    for (int l : w.letters_) push(l);
  }

  void append_inverse(const FreeWord& w) {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
  }

  FreeWord inverse() const {
    FreeWord out(rank_);
    out.append_inverse(*this);
    return out;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord out = a;
    out.append(b);
    return out;
  }

  // Replace each generator g_k by images[k-1].
  FreeWord substitute(const std::vector<FreeWord>& images) const {
    FreeWord out(images.empty() ? rank_ : images.front().rank());
    for (int l : letters_) {
      const FreeWord& img = images.at(static_cast<std::size_t>(std::abs(l) - 1));
      if (l > 0)
        out.append(img);
      else
        out.append_inverse(img);
    }
    return out;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(rank_);
    for (int l : letters_) h = h * 1000003u + static_cast<std::size_t>(l + 64);
    return h;
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << 'g' << std::abs(letters_[i]);
      if (letters_[i] < 0) os << "^-1";
    }
    return os.str();
  }

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

}  // namespace hurwitzkit

template <>
struct std::hash<hurwitzkit::FreeWord> {
  std::size_t operator()(const hurwitzkit::FreeWord& w) const noexcept { return w.hash(); }
};
