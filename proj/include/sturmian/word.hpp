#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace sturmian {

using Letter = std::uint8_t;

/// Finite word over {0, 1}, stored as the characters '0' and '1'.
///
/// Ordering is lexicographic with 0 < 1, so sorted containers of words
/// print in the canonical order.
class Word {
 public:
  Word() = default;
  /// Throws ParseError on any character other than '0' or '1'.
  explicit Word(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i] - '0'); }
  Letter back() const { return static_cast<Letter>(letters_.back() - '0'); }
  const std::string& str() const noexcept { return letters_; }

  void push_back(Letter a) { letters_.push_back(a ? '1' : '0'); }

  Word prefix(std::size_t n) const { return from_raw(letters_.substr(0, n)); }
  Word suffix(std::size_t n) const {
    return from_raw(n >= size() ? letters_ : letters_.substr(size() - n));
  }
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return from_raw(letters_.substr(pos, len));
  }
  /// Drops the first n letters (the shift applied n times).
  Word drop(std::size_t n) const { return n >= size() ? Word() : from_raw(letters_.substr(n)); }

  bool starts_with(const Word& w) const { return letters_.starts_with(w.letters_); }
  bool ends_with(const Word& w) const { return letters_.ends_with(w.letters_); }
  bool contains(const Word& w) const { return letters_.find(w.letters_) != std::string::npos; }
  /// Position of the first occurrence at or after `from`, or npos.
  std::size_t find(const Word& w, std::size_t from = 0) const { return letters_.find(w.letters_, from); }

  friend Word operator+(const Word& a, const Word& b) { return from_raw(a.letters_ + b.letters_); }
  friend Word operator+(Letter a, const Word& b) { return from_raw(std::string(1, a ? '1' : '0') + b.letters_); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_.compare(b.letters_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.letters_; }

 private:
  static Word from_raw(std::string s) {
    Word w;
    w.letters_ = std::move(s);
    return w;
  }

  std::string letters_;
};

}  // namespace sturmian
