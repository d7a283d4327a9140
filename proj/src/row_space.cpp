#include "mccool/row_space.hpp"

namespace mccool {

namespace {

// a*row - b*pivot, merged over sorted columns.
SparseRow combine(const Integer& a, const SparseRow& row, const Integer& b,
                  const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto r = row.begin();
  auto p = pivot.begin();
  while (r != row.end() || p != pivot.end()) {
    if (p == pivot.end() || (r != row.end() && r->first < p->first)) {
      out.emplace_back(r->first, a * r->second);
      ++r;
    } else if (r == row.end() || p->first < r->first) {
      out.emplace_back(p->first, -b * p->second);
      ++p;
    } else {
      Integer v = a * r->second - b * p->second;
      if (v != 0) out.emplace_back(r->first, std::move(v));
      ++r;
      ++p;
    }
  }
  return out;
}

}  // namespace

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g == 1) return;
  for (auto& entry : row) mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), g.get_mpz_t());
}

SparseRow RowSpace::reduce(SparseRow row) const {
  make_primitive(row);
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = pivot_.find(row[pos].first);
    if (it == pivot_.end()) {
      ++pos;
      continue;
    }
    const SparseRow& pivot = rows_[it->second];
    Integer g;
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row[pos].second.get_mpz_t());
    const Integer a = pivot.front().second / g;
    const Integer b = row[pos].second / g;
    row = combine(a, row, b, pivot);
    make_primitive(row);
  }
  return row;
}

bool RowSpace::insert(SparseRow row) {
  SparseRow rest = reduce(std::move(row));
  if (rest.empty()) return false;
  // No column of a remainder is a pivot column, so its leading column is free.
  pivot_.emplace(rest.front().first, rows_.size());
  rows_.push_back(std::move(rest));
  return true;
}

}  // namespace mccool
