#include "mccool/automorphism.hpp"

#include "mccool/error.hpp"

namespace mccool {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

bool in_range(int v, int lo, int hi) { return lo <= v && v <= hi; }

Word x(int n, int i, int sign = 1) { return Word::generator(n, i, sign); }

}  // namespace

void validate(const AutGenerator& g, int n) {
  std::visit(
      overloaded{
          [n](const Chi& c) {
            require(in_range(c.k, 1, n) && in_range(c.i, 1, n) && c.k != c.i,
                    "c[" + std::to_string(c.k) + "," + std::to_string(c.i) +
                        "] invalid for n=" + std::to_string(n));
          },
          [n](const Theta& t) {
            require(in_range(t.k, 1, n) && in_range(t.s, 1, n) && in_range(t.t, 1, n) &&
                        t.k != t.s && t.k != t.t && t.s < t.t,
                    "th[" + std::to_string(t.k) + ";" + std::to_string(t.s) + "," +
                        std::to_string(t.t) + "] invalid for n=" + std::to_string(n));
          },
          [n](const Xi& g) {
            require(in_range(g.i, 1, n - 1),
                    "xi[" + std::to_string(g.i) + "] invalid for n=" + std::to_string(n));
          },
          [n](const Tau& g) {
            require(in_range(g.i, 1, n),
                    "tau[" + std::to_string(g.i) + "] invalid for n=" + std::to_string(n));
          },
          [n](const Delta&) { require(n >= 2, "delta needs n >= 2"); },
          [n](const Sigma& g) {
            require(in_range(g.i, 1, n - 1),
                    "s[" + std::to_string(g.i) + "] invalid for n=" + std::to_string(n));
          },
      },
      g);
}

GroupExpression::GroupExpression(int rank, std::vector<Factor> factors)
    : rank_(rank), factors_(std::move(factors)) {
  for (const Factor& f : factors_) {
    if (f.exponent != 1 && f.exponent != -1) throw Error("exponents must be +1 or -1");
    validate(f.generator, rank_);
  }
}

GroupExpression& GroupExpression::append(const AutGenerator& g, int exponent) {
  if (exponent != 1 && exponent != -1) throw Error("exponents must be +1 or -1");
  validate(g, rank_);
  factors_.push_back({g, exponent});
  return *this;
}

GroupExpression& GroupExpression::append(const GroupExpression& tail) {
  if (tail.rank_ != rank_) throw Error("expression rank mismatch");
  factors_.insert(factors_.end(), tail.factors_.begin(), tail.factors_.end());
  return *this;
}

GroupExpression GroupExpression::with_rank(int new_rank) const {
  return GroupExpression(new_rank, factors_);
}

GroupExpression operator*(const GroupExpression& a, const GroupExpression& b) {
  GroupExpression out = a;
  out.append(b);
  return out;
}

GroupExpression freely_reduce(const GroupExpression& e) {
  std::vector<Factor> out;
  for (const Factor& f : e.factors()) {
    if (!out.empty() && out.back() == f.inverse()) {
      out.pop_back();
    } else {
      out.push_back(f);
    }
  }
  return GroupExpression(e.rank(), std::move(out));
}

GroupExpression invert_expression(const GroupExpression& e) {
  std::vector<Factor> out;
  out.reserve(e.size());
  for (auto it = e.factors().rbegin(); it != e.factors().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return GroupExpression(e.rank(), std::move(out));
}

GroupExpression commutator(const GroupExpression& a, const GroupExpression& b) {
  return invert_expression(a) * invert_expression(b) * a * b;
}

Endomorphism::Endomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank_) {
    throw Error("endomorphism needs exactly " + std::to_string(rank_) + " images");
  }
  for (const Word& w : images_) {
    if (w.rank() != rank_) throw Error("endomorphism image has wrong rank");
  }
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(x(rank, i));
  return Endomorphism(rank, std::move(images));
}

Endomorphism generator_endomorphism(const AutGenerator& g, int exponent, int n) {
  if (exponent != 1 && exponent != -1) throw Error("exponents must be +1 or -1");
  validate(g, n);
  Endomorphism id = Endomorphism::identity(n);
  std::vector<Word> images = id.images();
  auto set = [&](int i, Word w) { images[static_cast<std::size_t>(i - 1)] = std::move(w); };
  const bool forward = exponent > 0;
  std::visit(
      overloaded{
          [&](const Chi& c) {
            const Word xi = x(n, c.i);
            const Word xk = x(n, c.k);
            set(c.k, forward ? invert(xi) * xk * xi : xi * xk * invert(xi));
          },
          [&](const Theta& t) {
            const Word comm = commutator(x(n, t.s), x(n, t.t));
            set(t.k, x(n, t.k) * (forward ? comm : invert(comm)));
          },
          [&](const Xi& g) {
            set(g.i, x(n, g.i + 1));
            set(g.i + 1, x(n, g.i));
          },
          [&](const Tau& g) { set(g.i, x(n, g.i, -1)); },
          [&](const Delta&) { set(1, x(n, 1) * x(n, 2, forward ? 1 : -1)); },
          [&](const Sigma& g) {
            const Word a = x(n, g.i);
            const Word b = x(n, g.i + 1);
            if (forward) {
              set(g.i, b);
              set(g.i + 1, invert(b) * a * b);
            } else {
              set(g.i, a * b * invert(a));
              set(g.i + 1, a);
            }
          },
      },
      g);
  return Endomorphism(n, std::move(images));
}

Word apply(const Endomorphism& f, const Word& w) {
  if (f.rank() != w.rank()) throw Error("apply: rank mismatch");
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    const Word& img = f.image(l.index);
    if (l.sign > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    }
  }
  return reduce(raw, w.rank());
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) throw Error("compose: rank mismatch");
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const Word& w : g.images()) images.push_back(apply(f, w));
  return Endomorphism(f.rank(), std::move(images));
}

Endomorphism evaluate(const GroupExpression& e) {
  Endomorphism result = Endomorphism::identity(e.rank());
  for (const Factor& factor : e.factors()) {
    result = compose(result, generator_endomorphism(factor.generator, factor.exponent, e.rank()));
  }
  return result;
}

bool equal(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) throw Error("equal: rank mismatch");
  return f.images() == g.images();
}

bool is_identity(const Endomorphism& f) { return f == Endomorphism::identity(f.rank()); }

}  // namespace mccool
