#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mccool/integer.hpp"

namespace mccool {

// Free Lie algebras over Z on letters 1..m, with the Lyndon basis.
//
// Lie elements are kept in Lyndon coordinates. Products are computed in the
// free associative algebra (where [a,b] = ab - ba) and brought back to the
// Lyndon basis using the triangularity of the standard bracketing: the
// expansion of the bracket P_w of a Lyndon word w is w plus lexicographically
// larger words of the same length.

/// A word over letters 0..m-1 (letter 0 prints as x1).
using LieWord = std::vector<std::uint8_t>;

/// 1-based letter -> display name.
using LetterNames = std::function<std::string(int)>;
std::string default_letter_name(int letter);

bool is_lyndon(std::span<const std::uint8_t> w);

/// w = u v with v the longest proper Lyndon suffix. Requires |w| >= 2.
std::pair<LieWord, LieWord> standard_factorization(const LieWord& w);

/// Lyndon words of length d over m letters, in lexicographic order.
std::vector<LieWord> lyndon_words(int m, int d);

struct LyndonBracket {
  int alphabet = 0;
  LieWord word;

  int degree() const { return static_cast<int>(word.size()); }
  /// Standard bracketing, e.g. "[x1,[x1,x2]]".
  std::string bracketing(const LetterNames& names = default_letter_name) const;
};

std::vector<LyndonBracket> lyndon_basis(int m, int d);

/// Rank of the degree-d part of the free Lie algebra on m generators.
Integer witt_rank(int m, int d);

/// Homogeneous-or-not polynomial in the free associative algebra.
class AssocPoly {
 public:
  AssocPoly() = default;
  explicit AssocPoly(int alphabet) : alphabet_(alphabet) {}

  int alphabet() const { return alphabet_; }
  const std::map<LieWord, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const LieWord& w, const Integer& c);
  AssocPoly& operator+=(const AssocPoly& other);
  AssocPoly& operator-=(const AssocPoly& other);
  AssocPoly scaled(const Integer& c) const;

  friend AssocPoly operator*(const AssocPoly& a, const AssocPoly& b);
  friend bool operator==(const AssocPoly&, const AssocPoly&) = default;

 private:
  int alphabet_ = 0;
  std::map<LieWord, Integer> terms_;
};

/// ab - ba.
AssocPoly commutator(const AssocPoly& a, const AssocPoly& b);

/// Associative expansion of the standard bracketing of a Lyndon word.
const AssocPoly& lyndon_expansion(const LieWord& lyndon, int alphabet);

class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(int alphabet) : alphabet_(alphabet) {}

  /// The generator x_letter, 1-based.
  static LieElement generator(int alphabet, int letter);
  static LieElement basis_element(int alphabet, LieWord lyndon);

  /// Lyndon coordinates of a Lie polynomial; throws if p is not one.
  static LieElement from_assoc(const AssocPoly& p);

  int alphabet() const { return alphabet_; }
  const std::map<LieWord, Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(const LieWord& lyndon) const;

  /// Degree if homogeneous and nonzero.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  LieElement homogeneous_part(int d) const;

  AssocPoly expand() const;

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Integer& c);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator-(LieElement a) { return a *= Integer(-1); }
  friend LieElement operator*(const Integer& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  void add_term(const LieWord& w, const Integer& c);

  int alphabet_ = 0;
  std::map<LieWord, Integer> coeffs_;
};

LieElement bracket(const LieElement& a, const LieElement& b);

/// e.g. "2*[x1,x2] - [x1,[x1,x2]]"; "0" for zero.
std::string format_lie(const LieElement& e, const LetterNames& names = default_letter_name);

/// A derivation of the free Lie algebra, determined by generator images that
/// are homogeneous of degree 1 + shift (zero images allowed).
class Derivation {
 public:
  Derivation() = default;
  Derivation(int alphabet, int shift, std::vector<LieElement> images);

  static Derivation zero(int alphabet, int shift);

  int alphabet() const { return alphabet_; }
  int shift() const { return shift_; }
  /// Image of the 1-based generator.
  const LieElement& image(int letter) const {
    return images_.at(static_cast<std::size_t>(letter - 1));
  }
  const std::vector<LieElement>& images() const { return images_; }
  bool is_zero() const;

  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  int alphabet_ = 0;
  int shift_ = 0;
  std::vector<LieElement> images_;
};

/// D_{k,i}: x_k -> [x_k, x_i], every other generator -> 0.
Derivation derivation_from_chi(int k, int i, int n);

/// Leibniz extension: D[x,y] = [Dx,y] + [x,Dy].
LieElement apply_derivation(const Derivation& d, const LieElement& e);
AssocPoly apply_derivation(const Derivation& d, const AssocPoly& p);

/// [D,E]: x -> D(E(x)) - E(D(x)).
Derivation bracket_derivations(const Derivation& d, const Derivation& e);

}  // namespace mccool
