#pragma once

#include <string>
#include <vector>

#include "mccool/automorphism.hpp"
#include "mccool/word.hpp"

namespace mccool {

// Automorphisms of permutation-conjugacy type, x_i -> w_i^-1 x_{lambda(i)} w_i,
// and their splitting into a permutation and a basis-conjugating part.

class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] = lambda(i); throws unless a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition (a b).
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p ∘ q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// One-line notation, e.g. "[2, 1, 3]".
std::string format_permutation(const Permutation& p);

/// x_i -> x_{lambda(i)}.
Endomorphism permutation_endomorphism(const Permutation& lambda);

struct PermConjData {
  Permutation lambda;
  std::vector<Word> conjugators;  // w_1..w_n
};

/// Throws Error("not permutation-conjugacy type: ...") when f has another shape.
PermConjData detect(const Endomorphism& f);

/// Rebuilds x_i -> w_i^-1 x_{lambda(i)} w_i.
Endomorphism reassemble(const PermConjData& data);

struct Splitting {
  Endomorphism pure;  // f ∘ Xi_{lambda^-1}
  Permutation lambda;
};

/// f = compose(pure, permutation_endomorphism(lambda)).
Splitting split(const Endomorphism& f);

/// Product of the transpositions (i, i+1) of the xi[i] and s[i] factors.
Permutation rho(const GroupExpression& e);

/// Every x_i goes to a conjugate of x_i.
bool is_pure_conjugation(const Endomorphism& f);

}  // namespace mccool
