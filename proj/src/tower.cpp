#include "mccool/tower.hpp"

#include <algorithm>

#include "mccool/error.hpp"

namespace mccool {

namespace {

const Chi& as_chi(const Factor& f) {
  const Chi* c = std::get_if<Chi>(&f.generator);
  if (c == nullptr) {
    throw Error("tower operations accept only c[k,i] factors, found " +
                format_generator(f.generator));
  }
  return *c;
}

}  // namespace

Variant parse_variant(std::string_view text) {
  if (text == "plus") return Variant::plus;
  if (text == "full") return Variant::full;
  throw Error("variant must be plus or full, got '" + std::string(text) + "'");
}

void check_level(const GroupExpression& e, const TowerLevel& level) {
  if (level.n < 2) throw Error("tower level needs n >= 2");
  if (e.rank() != level.n) {
    throw Error("expression has rank " + std::to_string(e.rank()) + ", level is " +
                std::to_string(level.n));
  }
  for (const Factor& f : e.factors()) {
    const Chi& c = as_chi(f);
    if (level.variant == Variant::plus && c.i >= c.k) {
      throw Error("c[" + std::to_string(c.k) + "," + std::to_string(c.i) +
                  "] is not in the upper triangular subgroup");
    }
  }
}

Variant infer_variant(const GroupExpression& e) {
  for (const Factor& f : e.factors()) {
    if (as_chi(f).i >= as_chi(f).k) return Variant::full;
  }
  return Variant::plus;
}

GroupExpression project(const GroupExpression& e, const TowerLevel& level) {
  check_level(e, level);
  std::vector<Factor> kept;
  for (const Factor& f : e.factors()) {
    const Chi& c = as_chi(f);
    if (c.k != level.n && c.i != level.n) kept.push_back(f);
  }
  return GroupExpression(level.n - 1, std::move(kept));
}

GroupExpression lift(const GroupExpression& e) { return e.with_rank(e.rank() + 1); }

bool in_kernel(const GroupExpression& e, const TowerLevel& level) {
  return is_identity(evaluate(project(e, level)));
}

Decomposition decompose(const GroupExpression& e, const TowerLevel& level) {
  GroupExpression head = lift(project(e, level));
  GroupExpression tail = freely_reduce(invert_expression(head) * e);
  return {std::move(head), std::move(tail)};
}

GroupExpression phi(const Word& w) {
  const int n = w.rank() + 1;
  GroupExpression out(n);
  for (const Letter& l : w.letters()) out.append(Chi{n, l.index}, l.sign);
  return out;
}

Word retract_plus(const Endomorphism& f) {
  const int n = f.rank();
  if (n < 2) throw Error("retract_plus needs n >= 2");
  for (int i = 1; i < n; ++i) {
    if (f.image(i) != Word::generator(n, i)) {
      throw Error("not in K_n^+: x" + std::to_string(i) + " is moved");
    }
  }
  const auto shape = peel_conjugate(f.image(n));
  if (!shape || shape->generator != n || shape->sign != 1) {
    throw Error("not in K_n^+: image of x" + std::to_string(n) + " is not a conjugate of x" +
                std::to_string(n));
  }
  const auto& letters = shape->conjugator.letters();
  if (std::any_of(letters.begin(), letters.end(), [n](const Letter& l) { return l.index == n; })) {
    throw Error("not in K_n^+: conjugator involves x" + std::to_string(n));
  }
  return reduce(letters, n - 1);
}

GroupExpression kernel_word(const Decomposition& d) {
  return phi(retract_plus(evaluate(d.x_tail)));
}

std::vector<long> gamma(const GroupExpression& e) {
  const int n = e.rank();
  std::vector<long> out(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  for (const Factor& f : e.factors()) {
    const Chi& c = as_chi(f);
    if (c.i == n) {
      out[static_cast<std::size_t>(c.k - 1)] += f.exponent;
    } else if (c.k != n) {
      throw Error("gamma: c[" + std::to_string(c.k) + "," + std::to_string(c.i) +
                  "] is not a kernel generator");
    }
  }
  return out;
}

bool in_gamma_kernel(const GroupExpression& e) {
  const auto v = gamma(e);
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

}  // namespace mccool
