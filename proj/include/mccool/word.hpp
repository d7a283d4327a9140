#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mccool {

/// A generator x_index (sign +1) or its inverse (sign -1). Indices are 1-based.
struct Letter {
  int index = 1;
  int sign = 1;

  Letter inverse() const { return {index, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group of the given rank.
///
/// Words are values: every constructor path goes through free reduction, so
/// two words are equal as group elements exactly when they compare equal.
/// Ranks are part of the value; mixing ranks is an error, and the inclusion
/// F_m ⊂ F_n is the explicit raised().
class Word {
 public:
  Word() = default;
  explicit Word(int rank);

  static Word generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Same letters viewed in a free group of larger rank.
  Word raised(int new_rank) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word reduce(std::span<const Letter> raw, int rank);

  int rank_ = 0;
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw, int rank);
Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);

/// [a,b] = a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

struct ConjugateShape {
  Word conjugator;  // U in w = U^-1 x_j^sign U
  int generator = 0;
  int sign = 1;

  friend bool operator==(const ConjugateShape&, const ConjugateShape&) = default;
};

/// Writes w as U^-1 x_j^{±1} U with U as short as possible, if w has that shape.
std::optional<ConjugateShape> peel_conjugate(const Word& w);

/// Tokens `x<k>` / `X<k>` separated by whitespace or `*`; empty text is the identity.
Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& w);

}  // namespace mccool
