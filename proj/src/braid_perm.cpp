#include "mccool/braid_perm.hpp"

#include <algorithm>

#include "mccool/error.hpp"

namespace mccool {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw Error("negative permutation size");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n) throw Error("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(out));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error("composing permutations of different sizes");
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) out[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(out));
}

std::string format_permutation(const Permutation& p) {
  std::string out = "[";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ", ";
    out += std::to_string(p(i));
  }
  return out + "]";
}

Endomorphism permutation_endomorphism(const Permutation& lambda) {
  const int n = lambda.size();
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images.push_back(Word::generator(n, lambda(i)));
  return Endomorphism(n, std::move(images));
}

PermConjData detect(const Endomorphism& f) {
  const int n = f.rank();
  std::vector<int> targets;
  std::vector<Word> conjugators;
  for (int i = 1; i <= n; ++i) {
    const auto shape = peel_conjugate(f.image(i));
    if (!shape) {
      throw Error("not permutation-conjugacy type: image of x" + std::to_string(i) +
                  " is not a conjugate of a generator");
    }
    if (shape->sign != 1) {
      throw Error("not permutation-conjugacy type: image of x" + std::to_string(i) +
                  " is a conjugate of an inverse generator");
    }
    targets.push_back(shape->generator);
    conjugators.push_back(shape->conjugator);
  }
  std::vector<int> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i <= n; ++i) {
    if (sorted[static_cast<std::size_t>(i - 1)] != i) {
      throw Error("not permutation-conjugacy type: generator targets are not a permutation");
    }
  }
  return {Permutation(std::move(targets)), std::move(conjugators)};
}

Endomorphism reassemble(const PermConjData& data) {
  const int n = data.lambda.size();
  if (static_cast<int>(data.conjugators.size()) != n) throw Error("need one conjugator per generator");
  std::vector<Word> images;
  for (int i = 1; i <= n; ++i) {
    const Word& w = data.conjugators[static_cast<std::size_t>(i - 1)];
    images.push_back(invert(w) * Word::generator(n, data.lambda(i)) * w);
  }
  return Endomorphism(n, std::move(images));
}

Splitting split(const Endomorphism& f) {
  Permutation lambda = detect(f).lambda;
  Endomorphism pure = compose(f, permutation_endomorphism(lambda.inverse()));
  return {std::move(pure), std::move(lambda)};
}

Permutation rho(const GroupExpression& e) {
  const int n = e.rank();
  Permutation out = Permutation::identity(n);
  for (const Factor& f : e.factors()) {
    int i = 0;
    if (const auto* x = std::get_if<Xi>(&f.generator)) {
      i = x->i;
    } else if (const auto* s = std::get_if<Sigma>(&f.generator)) {
      i = s->i;
    } else {
      throw Error("rho accepts only xi[i] and s[i] factors, found " + format_generator(f.generator));
    }
    out = compose(out, Permutation::transposition(n, i, i + 1));
  }
  return out;
}

bool is_pure_conjugation(const Endomorphism& f) {
  for (int i = 1; i <= f.rank(); ++i) {
    const auto shape = peel_conjugate(f.image(i));
    if (!shape || shape->generator != i || shape->sign != 1) return false;
  }
  return true;
}

}  // namespace mccool
