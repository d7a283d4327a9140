#include "mccool/graded.hpp"

#include <algorithm>
#include <limits>

#include "mccool/error.hpp"

namespace mccool {

namespace {

void check_n(int n) {
  if (n < 2) throw Error("graded models need n >= 2, got " + std::to_string(n));
}

LetterNames row_names(int k) {
  return [k](int t) { return "c[" + std::to_string(k) + "," + std::to_string(t) + "]"; };
}

// Row r generator j acting on row s > r: c[s,r] -> [c[s,r], c[s,j]].
Derivation row_action(int r, int j, int s) {
  const int alphabet = s - 1;
  std::vector<LieElement> images(static_cast<std::size_t>(alphabet), LieElement(alphabet));
  images[static_cast<std::size_t>(r - 1)] =
      bracket(LieElement::generator(alphabet, r), LieElement::generator(alphabet, j));
  return Derivation(alphabet, 1, std::move(images));
}

// ad of the standard bracketing of a Lyndon word in row r, applied to a row-s polynomial.
AssocPoly act_lyndon(const LieWord& w, int r, int s, const AssocPoly& target) {
  if (w.size() == 1) return apply_derivation(row_action(r, w[0] + 1, s), target);
  auto [u, v] = standard_factorization(w);
  AssocPoly out = act_lyndon(u, r, s, act_lyndon(v, r, s, target));
  out -= act_lyndon(v, r, s, act_lyndon(u, r, s, target));
  return out;
}

// [a, b] for a in row r, b in row s, r < s; the result lies in row s.
LieElement act(const LieElement& a, int r, const LieElement& b, int s) {
  const AssocPoly target = b.expand();
  AssocPoly out(s - 1);
  for (const auto& [w, c] : a.coefficients()) out += act_lyndon(w, r, s, target).scaled(c);
  return LieElement::from_assoc(out);
}

LieWord decode_word(std::uint64_t code, int alphabet, int degree) {
  LieWord w(static_cast<std::size_t>(degree));
  for (int p = degree - 1; p >= 0; --p) {
    w[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(code % static_cast<unsigned>(alphabet));
    code /= static_cast<unsigned>(alphabet);
  }
  return w;
}

AssocPoly from_sparse_row(const SparseRow& row, int alphabet, int degree) {
  AssocPoly p(alphabet);
  for (const auto& [code, c] : row) p.add(decode_word(code, alphabet, degree), c);
  return p;
}

}  // namespace

Integer model_rank(int n, int d) {
  check_n(n);
  Integer total = 0;
  for (int k = 2; k <= n; ++k) total += witt_rank(k - 1, d);
  return total;
}

RankTable model_ranks(int n, int max_degree) {
  RankTable out;
  for (int d = 1; d <= max_degree; ++d) out[d] = model_rank(n, d).get_si();
  return out;
}

ModelElement::ModelElement(int n) : n_(n) { check_n(n); }

ModelElement ModelElement::generator(int n, int k, int j) {
  if (!(1 <= j && j < k && k <= n)) {
    throw Error("c[" + std::to_string(k) + "," + std::to_string(j) +
                "] is not an upper triangular generator for n=" + std::to_string(n));
  }
  return in_row(n, k, LieElement::generator(k - 1, j));
}

ModelElement ModelElement::in_row(int n, int k, LieElement payload) {
  ModelElement e(n);
  if (k < 2 || k > n) throw Error("row " + std::to_string(k) + " out of range");
  if (payload.alphabet() != k - 1) throw Error("row payload has the wrong alphabet");
  e.add_row(k, payload);
  return e;
}

LieElement ModelElement::row(int k) const {
  auto it = rows_.find(k);
  return it == rows_.end() ? LieElement(k - 1) : it->second;
}

void ModelElement::add_row(int k, const LieElement& e) {
  if (e.is_zero()) return;
  auto [it, inserted] = rows_.try_emplace(k, e);
  if (!inserted) {
    it->second += e;
    if (it->second.is_zero()) rows_.erase(it);
  }
}

ModelElement& ModelElement::operator+=(const ModelElement& other) {
  if (n_ != other.n_) throw Error("model elements of different n");
  for (const auto& [k, e] : other.rows_) add_row(k, e);
  return *this;
}

ModelElement& ModelElement::operator-=(const ModelElement& other) {
  if (n_ != other.n_) throw Error("model elements of different n");
  for (const auto& [k, e] : other.rows_) add_row(k, -e);
  return *this;
}

ModelElement& ModelElement::operator*=(const Integer& c) {
  if (c == 0) {
    rows_.clear();
    return *this;
  }
  for (auto& kv : rows_) kv.second *= c;
  return *this;
}

ModelElement model_bracket(const ModelElement& a, const ModelElement& b) {
  if (a.n() != b.n()) throw Error("model_bracket: rank mismatch");
  ModelElement out(a.n());
  for (const auto& [r, x] : a.rows()) {
    for (const auto& [s, y] : b.rows()) {
      if (r == s) {
        out += ModelElement::in_row(a.n(), r, bracket(x, y));
      } else if (r < s) {
        out += ModelElement::in_row(a.n(), s, act(x, r, y, s));
      } else {
        out -= ModelElement::in_row(a.n(), r, act(y, s, x, r));
      }
    }
  }
  return out;
}

std::string format_model(const ModelElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [k, payload] : e.rows()) {
    std::string part = format_lie(payload, row_names(k));
    if (out.empty()) {
      out = part;
    } else if (part.front() == '-') {
      out += " - " + part.substr(1);
    } else {
      out += " + " + part;
    }
  }
  return out;
}

int QuotientPresentation::letter(int k, int i) const {
  for (std::size_t t = 0; t < generators.size(); ++t) {
    if (generators[t].k == k && generators[t].i == i) return static_cast<int>(t) + 1;
  }
  throw Error("c[" + std::to_string(k) + "," + std::to_string(i) + "] is not a generator of the " +
              to_string(variant) + " presentation");
}

LieElement QuotientPresentation::generator(int k, int i) const {
  return LieElement::generator(alphabet(), letter(k, i));
}

LetterNames QuotientPresentation::names() const {
  return [gens = generators](int t) {
    const Chi& c = gens.at(static_cast<std::size_t>(t - 1));
    return "c[" + std::to_string(c.k) + "," + std::to_string(c.i) + "]";
  };
}

QuotientPresentation quotient_presentation(int n, Variant variant) {
  check_n(n);
  QuotientPresentation p;
  p.n = n;
  p.variant = variant;
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      if (i == k || (variant == Variant::plus && i > k)) continue;
      p.generators.push_back({k, i});
    }
  }
  auto g = [&p](int k, int i) { return p.generator(k, i); };
  auto has = [&p](int k, int i) {
    return std::any_of(p.generators.begin(), p.generators.end(),
                       [&](const Chi& c) { return c.k == k && c.i == i; });
  };
  auto disjoint = [](int a, int b, int c, int d) { return a != c && a != d && b != c && b != d; };
  auto add = [&p](LieElement rel) {
    if (!rel.is_zero()) p.relations.push_back(std::move(rel));
  };

  const auto& gens = p.generators;
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (std::size_t y = x + 1; y < gens.size(); ++y) {
      const Chi a = gens[x];
      const Chi b = gens[y];
      // [c[k,j], c[s,t]] = 0 when {j,k} and {s,t} are disjoint.
      if (disjoint(a.k, a.i, b.k, b.i)) add(bracket(g(a.k, a.i), g(b.k, b.i)));
      // [c[i,j], c[k,j]] = 0: same conjugator.
      if (a.i == b.i) add(bracket(g(a.k, a.i), g(b.k, b.i)));
    }
  }
  // [c[i,k], c[i,j] + c[k,j]] = 0; in the plus variant only j < k < i.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (!has(i, k) || !has(i, j) || !has(k, j)) continue;
        add(bracket(g(i, k), g(i, j) + g(k, j)));
      }
    }
  }
  return p;
}

std::uint64_t encode_word(const LieWord& w, int alphabet) {
  std::uint64_t code = 0;
  const auto base = static_cast<std::uint64_t>(alphabet);
  for (auto l : w) {
    if (code > (std::numeric_limits<std::uint64_t>::max() - l) / base) {
      throw Error("word too long to index as a matrix column");
    }
    code = code * base + l;
  }
  return code;
}

SparseRow to_sparse_row(const AssocPoly& p) {
  SparseRow row;
  row.reserve(p.terms().size());
  std::size_t degree = p.is_zero() ? 0 : p.terms().begin()->first.size();
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != degree) throw Error("to_sparse_row needs a homogeneous polynomial");
    row.emplace_back(encode_word(w, p.alphabet()), c);
  }
  // Same-length words: lexicographic map order is numeric code order.
  return row;
}

LieQuotient::LieQuotient(QuotientPresentation presentation, int max_degree)
    : presentation_(std::move(presentation)) {
  if (max_degree < 1) throw Error("quotient needs max degree >= 1");
  const int m = presentation_.alphabet();
  ideal_.resize(static_cast<std::size_t>(max_degree));
  for (int d = 1; d <= max_degree; ++d) {
    RowSpace& space = ideal_[static_cast<std::size_t>(d - 1)];
    for (const LieElement& rel : presentation_.relations) {
      if (rel.degree() == d) space.insert(to_sparse_row(rel.expand()));
    }
    if (d < 2) continue;
    // An ideal of a Lie algebra generated in degree 1 is spanned by the
    // relations and the iterated brackets [..[[r, x_a], x_b]..].
    const RowSpace& below = ideal_[static_cast<std::size_t>(d - 2)];
    for (const SparseRow& v : below.basis()) {
      const AssocPoly pv = from_sparse_row(v, m, d - 1);
      for (int x = 0; x < m; ++x) {
        AssocPoly letter(m);
        letter.add(LieWord{static_cast<std::uint8_t>(x)}, 1);
        space.insert(to_sparse_row(commutator(pv, letter)));
      }
    }
  }
}

const RowSpace& LieQuotient::ideal(int d) const {
  if (d < 1 || d > max_degree()) {
    throw Error("degree " + std::to_string(d) + " outside computed range 1.." +
                std::to_string(max_degree()));
  }
  return ideal_[static_cast<std::size_t>(d - 1)];
}

std::size_t LieQuotient::ideal_rank(int d) const { return ideal(d).rank(); }

std::int64_t LieQuotient::rank(int d) const {
  const Integer free_rank = witt_rank(presentation_.alphabet(), d);
  return free_rank.get_si() - static_cast<std::int64_t>(ideal(d).rank());
}

RankTable LieQuotient::ranks() const {
  RankTable out;
  for (int d = 1; d <= max_degree(); ++d) out[d] = rank(d);
  return out;
}

bool LieQuotient::is_zero_class(const LieElement& e) const {
  if (e.is_zero()) return true;
  const auto d = e.degree();
  if (!d) throw Error("is_zero_class needs a homogeneous element");
  return ideal(*d).contains(to_sparse_row(e.expand()));
}

RankTable quotient_ranks(int n, Variant variant, int max_degree) {
  return LieQuotient(quotient_presentation(n, variant), max_degree).ranks();
}

LieElement nonvanishing_element(const QuotientPresentation& full, int i, int j, int k) {
  return bracket(full.generator(k, i), full.generator(j, i) + full.generator(j, k));
}

bool nonvanishing_witness(int n, int i, int j, int k) {
  if (i == j || j == k || i == k || std::min({i, j, k}) < 1 || std::max({i, j, k}) > n) {
    throw Error("nonvanishing_witness needs distinct indices in 1..n");
  }
  const LieQuotient q(quotient_presentation(n, Variant::full), 2);
  return !q.is_zero_class(nonvanishing_element(q.presentation(), i, j, k));
}

TruncatedSeries uea_series(const RankTable& ranks, int max_degree) {
  if (max_degree < 0) throw Error("series truncation must be >= 0");
  TruncatedSeries s;
  s.coefficients.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  s.coefficients[0] = 1;
  for (int d = 1; d <= max_degree; ++d) {
    auto it = ranks.find(d);
    if (it == ranks.end()) throw Error("rank table has no entry for degree " + std::to_string(d));
    if (it->second < 0) throw Error("negative rank in table");
    if (it->second == 0) continue;
    // (1 - t^d)^(-r) = sum_j binom(r + j - 1, j) t^(dj)
    std::vector<Integer> factor(s.coefficients.size(), 0);
    for (int j = 0; j * d <= max_degree; ++j) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(it->second + j - 1),
                   static_cast<unsigned long>(j));
      factor[static_cast<std::size_t>(j * d)] = b;
    }
    std::vector<Integer> product(s.coefficients.size(), 0);
    for (std::size_t a = 0; a < product.size(); ++a) {
      if (s.coefficients[a] == 0) continue;
      for (std::size_t b = 0; a + b < product.size(); ++b) {
        product[a + b] += s.coefficients[a] * factor[b];
      }
    }
    s.coefficients = std::move(product);
  }
  return s;
}

TruncatedSeries closed_form_series(int n, int max_degree) {
  check_n(n);
  if (max_degree < 0) throw Error("series truncation must be >= 0");
  TruncatedSeries s;
  s.coefficients.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  s.coefficients[0] = 1;
  for (int k = 1; k <= n - 1; ++k) {
    // multiply by 1/(1 - k t)
    for (std::size_t i = 1; i < s.coefficients.size(); ++i) {
      s.coefficients[i] += k * s.coefficients[i - 1];
    }
  }
  return s;
}

}  // namespace mccool
