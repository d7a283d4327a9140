#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mccool/word.hpp"

namespace mccool {

// Named automorphisms of F_n. Every generator acts on the left, f(x), and
// products compose as (f∘g)(x) = f(g(x)).

/// x_k -> x_i^-1 x_k x_i.
struct Chi {
  int k = 0;
  int i = 0;
  friend bool operator==(const Chi&, const Chi&) = default;
};

/// x_k -> x_k [x_s, x_t], s < t.
struct Theta {
  int k = 0;
  int s = 0;
  int t = 0;
  friend bool operator==(const Theta&, const Theta&) = default;
};

/// Transposition of x_i and x_{i+1}.
struct Xi {
  int i = 0;
  friend bool operator==(const Xi&, const Xi&) = default;
};

/// x_i -> x_i^-1.
struct Tau {
  int i = 0;
  friend bool operator==(const Tau&, const Tau&) = default;
};

/// x_1 -> x_1 x_2.
struct Delta {
  friend bool operator==(const Delta&, const Delta&) = default;
};

/// x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
struct Sigma {
  int i = 0;
  friend bool operator==(const Sigma&, const Sigma&) = default;
};

using AutGenerator = std::variant<Chi, Theta, Xi, Tau, Delta, Sigma>;

/// Throws Error unless the generator's indices are valid in rank n.
void validate(const AutGenerator& g, int n);

struct Factor {
  AutGenerator generator;
  int exponent = 1;

  Factor inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A formal product g_1^{e_1} ... g_m^{e_m}; evaluates to g_1 ∘ ... ∘ g_m.
class GroupExpression {
 public:
  GroupExpression() = default;
  explicit GroupExpression(int rank) : rank_(rank) {}
  GroupExpression(int rank, std::vector<Factor> factors);

  int rank() const { return rank_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  GroupExpression& append(const AutGenerator& g, int exponent = 1);
  GroupExpression& append(const GroupExpression& tail);

  /// Same factors, reinterpreted in a larger rank (no revalidation needed).
  GroupExpression with_rank(int new_rank) const;

  friend bool operator==(const GroupExpression&, const GroupExpression&) = default;

 private:
  int rank_ = 0;
  std::vector<Factor> factors_;
};

GroupExpression operator*(const GroupExpression& a, const GroupExpression& b);

/// Cancels adjacent g^e g^-e pairs.
GroupExpression freely_reduce(const GroupExpression& e);
GroupExpression invert_expression(const GroupExpression& e);

/// [a,b] = a^-1 b^-1 a b as a formal expression.
GroupExpression commutator(const GroupExpression& a, const GroupExpression& b);

/// An endomorphism of F_n, stored as the images of x_1..x_n.
class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);

  int rank() const { return rank_; }
  /// Image of x_i, 1-based.
  const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

Endomorphism generator_endomorphism(const AutGenerator& g, int exponent, int n);
Word apply(const Endomorphism& f, const Word& w);
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);
Endomorphism evaluate(const GroupExpression& e);
bool equal(const Endomorphism& f, const Endomorphism& g);
bool is_identity(const Endomorphism& f);

/// `c[k,i]`, `th[k;s,t]`, `xi[i]`, `tau[i]`, `delta`, `s[i]`, optional `^-1`,
/// separated by `*` or whitespace.
GroupExpression parse_expression(std::string_view text, int rank);
std::string format_generator(const AutGenerator& g);
std::string format_expression(const GroupExpression& e);

}  // namespace mccool
