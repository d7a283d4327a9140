#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mccool/integer.hpp"

namespace mccool {

/// Sparse integer vector, entries sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::uint64_t, Integer>>;

/// Incrementally built row echelon basis of a subspace of Q^(columns).
///
/// Elimination is fraction-free: rows stay integral and are kept primitive
/// (content 1), so ranks are exact ranks over Q.
class RowSpace {
 public:
  /// Remainder of row after elimination against the basis; empty iff row is in the span.
  SparseRow reduce(SparseRow row) const;

  /// Adds row to the span; true if the rank went up.
  bool insert(SparseRow row);
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& basis() const { return rows_; }

 private:
  std::unordered_map<std::uint64_t, std::size_t> pivot_;
  std::vector<SparseRow> rows_;
};

/// Divides out the gcd of the entries and makes the leading entry positive.
void make_primitive(SparseRow& row);

}  // namespace mccool
