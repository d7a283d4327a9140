#pragma once

#include <random>
#include <vector>

#include "mccool/automorphism.hpp"
#include "mccool/cohomology.hpp"
#include "mccool/lie.hpp"
#include "mccool/subgroup.hpp"
#include "mccool/word.hpp"

namespace mccool::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline int random_sign(Rng& rng) { return uniform(rng, 0, 1) ? 1 : -1; }

/// Reduced word of exactly the given length.
inline Word random_reduced_word(Rng& rng, int rank, int length) {
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < length) {
    const Letter l{uniform(rng, 1, rank), random_sign(rng)};
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return reduce(letters, rank);
}

/// Raw letters, reduced afterwards; usually shorter than length.
inline std::vector<Letter> random_letters(Rng& rng, int rank, int length) {
  std::vector<Letter> letters;
  for (int i = 0; i < length; ++i) letters.push_back({uniform(rng, 1, rank), random_sign(rng)});
  return letters;
}

inline Chi random_chi(Rng& rng, int n, Variant variant) {
  while (true) {
    const int k = uniform(rng, 1, n);
    const int i = uniform(rng, 1, n);
    if (k == i) continue;
    if (variant == Variant::plus && i > k) continue;
    return {k, i};
  }
}

inline GroupExpression random_chi_expression(Rng& rng, int n, int length, Variant variant) {
  GroupExpression e(n);
  for (int t = 0; t < length; ++t) e.append(random_chi(rng, n, variant), random_sign(rng));
  return e;
}

inline AutGenerator random_generator(Rng& rng, int n) {
  switch (uniform(rng, 0, 5)) {
    case 0: return random_chi(rng, n, Variant::full);
    case 1: {
      if (n < 3) return Tau{uniform(rng, 1, n)};
      while (true) {
        const int k = uniform(rng, 1, n), s = uniform(rng, 1, n), t = uniform(rng, 1, n);
        if (k != s && k != t && s < t) return Theta{k, s, t};
      }
    }
    case 2: return Xi{uniform(rng, 1, n - 1)};
    case 3: return Tau{uniform(rng, 1, n)};
    case 4: return Delta{};
    default: return Sigma{uniform(rng, 1, n - 1)};
  }
}

/// Any named generators; at n = 2 theta is replaced by tau.
inline GroupExpression random_expression(Rng& rng, int n, int length) {
  GroupExpression e(n);
  for (int t = 0; t < length; ++t) e.append(random_generator(rng, n), random_sign(rng));
  return e;
}

inline GroupExpression random_bp_expression(Rng& rng, int n, int length) {
  GroupExpression e(n);
  for (int t = 0; t < length; ++t) {
    const int i = uniform(rng, 1, n - 1);
    if (uniform(rng, 0, 1)) {
      e.append(Xi{i}, random_sign(rng));
    } else {
      e.append(Sigma{i}, random_sign(rng));
    }
  }
  return e;
}

/// Factors c[n,i] and c[i,n].
inline GroupExpression random_kernel_expression(Rng& rng, int n, int length) {
  GroupExpression e(n);
  for (int t = 0; t < length; ++t) {
    const int i = uniform(rng, 1, n - 1);
    e.append(uniform(rng, 0, 1) ? Chi{n, i} : Chi{i, n}, random_sign(rng));
  }
  return e;
}

/// Random homogeneous element with a few Lyndon terms and small coefficients.
inline LieElement random_lie(Rng& rng, int alphabet, int degree, int terms = 3) {
  const auto words = lyndon_words(alphabet, degree);
  LieElement e(alphabet);
  if (words.empty()) return e;
  for (int t = 0; t < terms; ++t) {
    const auto& w = words[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(words.size()) - 1))];
    e += Integer(uniform(rng, -3, 3)) * LieElement::basis_element(alphabet, w);
  }
  return e;
}

inline Monomial random_factors(Rng& rng, int n, int length) {
  Monomial f;
  for (int p = 0; p < length; ++p) {
    const int i = uniform(rng, 2, n);
    f.push_back({i, uniform(rng, 1, i - 1)});
  }
  return f;
}

}  // namespace mccool::testing
