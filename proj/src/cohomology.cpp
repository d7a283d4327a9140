#include "mccool/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "mccool/error.hpp"
#include "mccool/row_space.hpp"

namespace mccool {

namespace {

void check_n(int n) {
  if (n < 2) throw Error("cohomology needs n >= 2, got " + std::to_string(n));
}

std::string name(const DualGenerator& g) {
  return "d[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
}

struct Rewrite {
  Monomial factors;
  int sign = 1;
  bool zero = false;
};

// Positions p where the pair (p, p+1) admits a rewrite step.
std::vector<std::size_t> applicable(const Monomial& f) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p + 1 < f.size(); ++p) {
    if (f[p].i >= f[p + 1].i) out.push_back(p);
  }
  return out;
}

void step(Rewrite& r, std::size_t p) {
  DualGenerator& a = r.factors[p];
  DualGenerator& b = r.factors[p + 1];
  if (a.i > b.i) {
    std::swap(a, b);
    r.sign = -r.sign;
  } else if (a == b) {
    r.zero = true;
  } else if (a.j > b.j) {
    // d[i,a] d[i,b] = d[i,a] d[a,b] for b < a < i
    b = {a.j, b.j};
  } else {
    // d[i,a] d[i,b] = -d[i,b] d[i,a] = -d[i,b] d[b,a] for a < b < i
    const int lo = a.j;
    a = {a.i, b.j};
    b = {b.j, lo};
    r.sign = -r.sign;
  }
}

CohomologyClass finish(int n, const Rewrite& r, const Integer& coefficient) {
  CohomologyClass out(n, static_cast<int>(r.factors.size()));
  if (!r.zero && coefficient != 0) out.add(r.factors, r.sign * coefficient);
  return out;
}

void check_factors(int n, const Monomial& factors) {
  check_n(n);
  for (const auto& g : factors) validate(g, n);
}

std::size_t generator_index(int i, int j) {
  // generators ordered (2,1), (3,1), (3,2), (4,1), ...
  return static_cast<std::size_t>((i - 1) * (i - 2) / 2 + (j - 1));
}

// Wedge of two basis monomials given as bitmasks; 0 if they overlap.
int wedge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  // Moving each generator of b left past the larger generators of a.
  int swaps = 0;
  for (std::uint64_t rest = b; rest != 0; rest &= rest - 1) {
    const std::uint64_t bit = rest & (~rest + 1);
    swaps += std::popcount(a & ~((bit << 1) - 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

void validate(const DualGenerator& g, int n) {
  if (!(1 <= g.j && g.j < g.i && g.i <= n)) {
    throw Error("invalid generator " + name(g) + " for n=" + std::to_string(n));
  }
}

bool is_admissible(const Monomial& m) {
  for (std::size_t p = 0; p + 1 < m.size(); ++p) {
    if (m[p].i >= m[p + 1].i) return false;
  }
  return true;
}

CohomologyClass::CohomologyClass(int n, int degree) : n_(n), degree_(degree) {
  check_n(n);
  if (degree < 0) throw Error("negative cohomological degree");
}

CohomologyClass CohomologyClass::unit(int n) {
  CohomologyClass c(n, 0);
  c.add({}, 1);
  return c;
}

CohomologyClass CohomologyClass::monomial(int n, const Monomial& m) {
  CohomologyClass c(n, static_cast<int>(m.size()));
  c.add(m, 1);
  return c;
}

Integer CohomologyClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CohomologyClass::add(const Monomial& m, const Integer& c) {
  if (static_cast<int>(m.size()) != degree_) throw Error("monomial degree differs from class degree");
  for (const auto& g : m) validate(g, n_);
  if (!is_admissible(m)) throw Error("monomial " + format_monomial(m) + " is not admissible");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
  if (n_ != other.n_ || degree_ != other.degree_) throw Error("adding classes of different n or degree");
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& other) {
  if (n_ != other.n_ || degree_ != other.degree_) throw Error("subtracting classes of different n or degree");
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

CohomologyClass& CohomologyClass::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

CohomologyClass normalize(int n, const Monomial& factors, const Integer& coefficient) {
  check_factors(n, factors);
  Rewrite r{factors};
  while (!r.zero) {
    const auto positions = applicable(r.factors);
    if (positions.empty()) break;
    // Sort by row first; only then resolve the leftmost same-row pair.
    auto swap_at = std::find_if(positions.begin(), positions.end(), [&](std::size_t p) {
      return r.factors[p].i > r.factors[p + 1].i;
    });
    step(r, swap_at != positions.end() ? *swap_at : positions.front());
  }
  return finish(n, r, coefficient);
}

CohomologyClass normalize_random(int n, const Monomial& factors, const Integer& coefficient,
                                 std::mt19937_64& rng) {
  check_factors(n, factors);
  Rewrite r{factors};
  while (!r.zero) {
    const auto positions = applicable(r.factors);
    if (positions.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
    step(r, positions[pick(rng)]);
  }
  return finish(n, r, coefficient);
}

CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.n() != b.n()) throw Error("multiply: classes for different n");
  CohomologyClass out(a.n(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial f = ma;
      f.insert(f.end(), mb.begin(), mb.end());
      out += normalize(a.n(), f, ca * cb);
    }
  }
  return out;
}

std::vector<Monomial> basis(int n, int k) {
  check_n(n);
  if (k < 0 || k > n - 1) throw Error("degree must lie in 0..n-1");
  std::vector<Monomial> out;
  Monomial current;
  auto extend = [&](auto&& self, int min_row) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int i = min_row; i <= n; ++i) {
      for (int j = 1; j < i; ++j) {
        current.push_back({i, j});
        self(self, i + 1);
        current.pop_back();
      }
    }
  };
  extend(extend, 2);
  return out;
}

TruncatedSeries poincare_product(int n) {
  check_n(n);
  TruncatedSeries s;
  s.coefficients = {1};
  for (int k = 1; k <= n - 1; ++k) {
    s.coefficients.push_back(0);
    for (std::size_t d = s.coefficients.size() - 1; d >= 1; --d) {
      s.coefficients[d] += k * s.coefficients[d - 1];
    }
  }
  return s;
}

TruncatedSeries poincare_polynomial(int n) {
  check_n(n);
  TruncatedSeries counted;
  for (int k = 0; k <= n - 1; ++k) counted.coefficients.emplace_back(basis(n, k).size());
  if (counted != poincare_product(n)) {
    throw Error("admissible basis count disagrees with the product formula for n=" +
                std::to_string(n));
  }
  return counted;
}

std::vector<std::int64_t> oracle_reduce(int n, int max_degree) {
  check_n(n);
  if (n > 6) throw Error("oracle_reduce supports n <= 6");
  if (max_degree < 0) throw Error("max degree must be >= 0");
  const int count = n * (n - 1) / 2;

  std::vector<SparseRow> relations;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      for (int k = 1; k < j; ++k) {
        // d[i,j] d[i,k] - d[i,j] d[j,k]
        const std::uint64_t ij = std::uint64_t{1} << generator_index(i, j);
        const std::uint64_t ik = std::uint64_t{1} << generator_index(i, k);
        const std::uint64_t jk = std::uint64_t{1} << generator_index(j, k);
        SparseRow row{{ij | ik, wedge_sign(ij, ik)}, {ij | jk, -wedge_sign(ij, jk)}};
        std::sort(row.begin(), row.end());
        relations.push_back(std::move(row));
      }
    }
  }

  std::vector<std::int64_t> ranks;
  for (int d = 0; d <= max_degree; ++d) {
    Integer total;
    mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(count), static_cast<unsigned long>(d));
    RowSpace ideal;
    if (d >= 2) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << count); ++m) {
        if (std::popcount(m) != d - 2) continue;
        for (const SparseRow& rel : relations) {
          SparseRow row;
          for (const auto& [mask, c] : rel) {
            const int s = wedge_sign(mask, m);
            if (s != 0) row.emplace_back(mask | m, s * c);
          }
          std::sort(row.begin(), row.end());
          // Two terms may collapse onto one column.
          SparseRow merged;
          for (auto& [col, c] : row) {
            if (!merged.empty() && merged.back().first == col) {
              merged.back().second += c;
              if (merged.back().second == 0) merged.pop_back();
            } else {
              merged.emplace_back(col, c);
            }
          }
          if (!merged.empty()) ideal.insert(std::move(merged));
        }
      }
    }
    ranks.push_back(total.get_si() - static_cast<std::int64_t>(ideal.rank()));
  }
  return ranks;
}

std::string format_monomial(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& g : m) {
    if (!out.empty()) out += "*";
    out += name(g);
  }
  return out;
}

Monomial parse_monomial(std::string_view text, int n) {
  Monomial out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  auto number = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos - start > 6) throw ParseError("expected an index", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  const auto first = text.find_first_not_of(" \t\n");
  const auto last = text.find_last_not_of(" \t\n");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "1") return out;
  while (true) {
    skip_space();
    const std::size_t start = pos;
    expect('d');
    expect('[');
    const int i = number();
    expect(',');
    const int j = number();
    expect(']');
    DualGenerator g{i, j};
    try {
      validate(g, n);
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
    out.push_back(g);
    skip_space();
    if (pos == text.size()) break;
    expect('*');
  }
  return out;
}

std::string format_class(const CohomologyClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [m, coeff] : c.terms()) {
    const bool negative = coeff < 0;
    const Integer magnitude = abs(coeff);
    std::string term = magnitude == 1 ? format_monomial(m)
                                      : magnitude.get_str() + (m.empty() ? "" : "*" + format_monomial(m));
    if (m.empty() && magnitude == 1) term = "1";
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

}  // namespace mccool
