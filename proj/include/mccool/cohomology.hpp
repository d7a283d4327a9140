#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mccool/graded.hpp"
#include "mccool/integer.hpp"

namespace mccool {

// Integral cohomology of the upper triangular basis-conjugating group: the
// graded-commutative ring on degree-1 classes d[i,j] (j < i) with
//   d[i,k]^2 = 0 and d[i,j] (d[i,k] - d[j,k]) = 0 for k < j < i.
// Admissible monomials (strictly increasing rows) form a basis.

struct DualGenerator {
  int i = 2;  // row
  int j = 1;  // column, j < i

  friend auto operator<=>(const DualGenerator&, const DualGenerator&) = default;
};

void validate(const DualGenerator& g, int n);

/// Ordered product of generators; admissible when rows strictly increase.
using Monomial = std::vector<DualGenerator>;

bool is_admissible(const Monomial& m);

class CohomologyClass {
 public:
  CohomologyClass() = default;
  CohomologyClass(int n, int degree);

  static CohomologyClass unit(int n);
  /// A single admissible monomial with coefficient 1.
  static CohomologyClass monomial(int n, const Monomial& m);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;

  /// Adds c times an admissible monomial of the class degree.
  void add(const Monomial& m, const Integer& c);

  CohomologyClass& operator+=(const CohomologyClass& other);
  CohomologyClass& operator-=(const CohomologyClass& other);
  CohomologyClass& operator*=(const Integer& c);
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

 private:
  int n_ = 0;
  int degree_ = 0;
  std::map<Monomial, Integer> terms_;
};

/// Normal form of coefficient * (product of factors).
CohomologyClass normalize(int n, const Monomial& factors, const Integer& coefficient = 1);

/// Same result as normalize, reached by applying rewrite steps to a randomly
/// chosen applicable adjacent pair at every step.
CohomologyClass normalize_random(int n, const Monomial& factors, const Integer& coefficient,
                                 std::mt19937_64& rng);

CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b);

/// Admissible monomials of degree k, lexicographic.
std::vector<Monomial> basis(int n, int k);

/// Basis counts by degree, checked against prod_{k=1}^{n-1} (1 + k t).
TruncatedSeries poincare_polynomial(int n);

/// Coefficients of prod_{k=1}^{n-1} (1 + k t).
TruncatedSeries poincare_product(int n);

/// Ranks over Q of the exterior algebra on the d[i,j] modulo the ideal of the
/// second relation family, degrees 0..max_degree, by linear algebra alone.
std::vector<std::int64_t> oracle_reduce(int n, int max_degree);

/// "d[i,j]*d[k,l]"; "1" for the empty monomial.
std::string format_monomial(const Monomial& m);
Monomial parse_monomial(std::string_view text, int n);
/// e.g. "-d[2,1]*d[3,2]"; "0" for zero.
std::string format_class(const CohomologyClass& c);

}  // namespace mccool
