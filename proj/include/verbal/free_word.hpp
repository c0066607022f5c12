#ifndef VERBAL_FREE_WORD_HPP
#define VERBAL_FREE_WORD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "verbal/error.hpp"

namespace verbal {

// A freely reduced word over an arbitrary ordered symbol type.  Letters are
// (symbol, exponent) pairs; adjacent letters never share a symbol and no
// exponent is zero.
template <class Sym>
class FreeWord {
 public:
  struct Letter {
    Sym sym;
    long long exp;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  FreeWord() = default;

  static FreeWord from_letters(std::vector<Letter> raw) {
    FreeWord w;
    for (auto& l : raw) w.push(l.sym, l.exp);
    return w;
  }

  static FreeWord generator(Sym s, long long e = 1) {
    FreeWord w;
    w.push(std::move(s), e);
    return w;
  }

  // Appends sym^e, merging and cancelling against the current tail.
  void push(Sym sym, long long e) {
    if (e == 0) return;
    if (!letters_.empty() && letters_.back().sym == sym) {
      letters_.back().exp += e;
      if (letters_.back().exp == 0) letters_.pop_back();
      return;
    }
    letters_.push_back(Letter{std::move(sym), e});
  }

  void append(const FreeWord& other) {
    for (const auto& l : other.letters_) push(l.sym, l.exp);
  }

  FreeWord operator*(const FreeWord& other) const {
    FreeWord r = *this;
    r.append(other);
    return r;
  }

  FreeWord inverse() const {
    FreeWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(Letter{it->sym, -it->exp});
    return r;  // reversal of a reduced word is reduced
  }

  FreeWord pow(long long n) const {
    if (n == 0) return FreeWord{};
    FreeWord base = n > 0 ? *this : inverse();
    long long k = n > 0 ? n : -n;
    FreeWord r;
    for (long long i = 0; i < k; ++i) r.append(base);
    return r;
  }

  // a^b = b^-1 a b
  FreeWord conjugate_by(const FreeWord& b) const {
    return b.inverse() * (*this) * b;
  }

  // [a,b] = a^-1 b^-1 a b
  static FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    return a.inverse() * b.inverse() * a * b;
  }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Total number of single-symbol letters, counting multiplicity.
  long long length() const {
    long long n = 0;
    for (const auto& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
  }

  std::map<Sym, long long> abelianization() const {
    std::map<Sym, long long> img;
    for (const auto& l : letters_) {
      img[l.sym] += l.exp;
      if (img[l.sym] == 0) img.erase(l.sym);
    }
    return img;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace verbal

#endif
