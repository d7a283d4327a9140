#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mccool/automorphism.hpp"
#include "mccool/integer.hpp"
#include "mccool/lie.hpp"
#include "mccool/row_space.hpp"
#include "mccool/subgroup.hpp"

namespace mccool {

/// Coefficients c_0..c_D of a power series truncated after t^D.
struct TruncatedSeries {
  std::vector<Integer> coefficients;

  int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// degree -> rank.
using RankTable = std::map<int, std::int64_t>;

// ---------------------------------------------------------------------------
// Row model of the associated graded Lie algebra of the upper triangular group.
//
// Row k (2 <= k <= n) is the free Lie algebra on c[k,1], ..., c[k,k-1]; the
// algebra is their direct sum as a module. Within a row the bracket is the
// free one. A generator c[r,j] of row r acts on a higher row s as the
// derivation c[s,r] -> [c[s,r], c[s,j]], c[s,t] -> 0 (t != r), and a general
// element of row r acts through the Lie homomorphism these generators
// determine. Brackets between rows land in the higher row.
// ---------------------------------------------------------------------------

/// Sum of Witt ranks of the rows: rank of degree d in the row model.
Integer model_rank(int n, int d);

class ModelElement {
 public:
  ModelElement() = default;
  explicit ModelElement(int n);

  /// The class of c[k,j], j < k.
  static ModelElement generator(int n, int k, int j);
  /// A row-k element; payload letters are 1..k-1 standing for c[k,1..k-1].
  static ModelElement in_row(int n, int k, LieElement payload);

  int n() const { return n_; }
  const std::map<int, LieElement>& rows() const { return rows_; }
  LieElement row(int k) const;
  bool is_zero() const { return rows_.empty(); }

  ModelElement& operator+=(const ModelElement& other);
  ModelElement& operator-=(const ModelElement& other);
  ModelElement& operator*=(const Integer& c);
  friend ModelElement operator+(ModelElement a, const ModelElement& b) { return a += b; }
  friend ModelElement operator-(ModelElement a, const ModelElement& b) { return a -= b; }
  friend ModelElement operator-(ModelElement a) { return a *= Integer(-1); }
  friend bool operator==(const ModelElement&, const ModelElement&) = default;

 private:
  void add_row(int k, const LieElement& e);

  int n_ = 0;
  std::map<int, LieElement> rows_;
};

ModelElement model_bracket(const ModelElement& a, const ModelElement& b);
std::string format_model(const ModelElement& e);

// ---------------------------------------------------------------------------
// Free Lie algebra on the c[k,i] modulo the degree-2 relations that hold in
// the associated graded Lie algebra. For the plus variant this is an
// independent presentation of the row model; for the full variant its ranks
// are upper bounds for the graded ranks of the whole basis-conjugating group.
// ---------------------------------------------------------------------------

struct QuotientPresentation {
  int n = 0;
  Variant variant = Variant::plus;
  std::vector<Chi> generators;        // letter t+1 <-> generators[t]
  std::vector<LieElement> relations;  // all of degree 2

  int alphabet() const { return static_cast<int>(generators.size()); }
  /// 1-based letter of c[k,i]; throws if c[k,i] is not a generator.
  int letter(int k, int i) const;
  LieElement generator(int k, int i) const;
  LetterNames names() const;
};

QuotientPresentation quotient_presentation(int n, Variant variant);

/// Degreewise ideal spans I_1..I_D of a QuotientPresentation.
class LieQuotient {
 public:
  LieQuotient(QuotientPresentation presentation, int max_degree);

  const QuotientPresentation& presentation() const { return presentation_; }
  int max_degree() const { return static_cast<int>(ideal_.size()); }

  /// Rank of degree d of the quotient, 1 <= d <= max_degree.
  std::int64_t rank(int d) const;
  std::size_t ideal_rank(int d) const;
  RankTable ranks() const;

  /// Whether a homogeneous element of degree <= max_degree lies in the ideal.
  bool is_zero_class(const LieElement& e) const;

 private:
  const RowSpace& ideal(int d) const;

  QuotientPresentation presentation_;
  std::vector<RowSpace> ideal_;  // ideal_[d-1] spans I_d
};

RankTable quotient_ranks(int n, Variant variant, int max_degree);

/// Whether [c[k,i], c[j,i] + c[j,k]] has nonzero class in degree 2 of the full quotient.
bool nonvanishing_witness(int n, int i, int j, int k);

/// The witness element [c[k,i], c[j,i] + c[j,k]] in the full presentation.
LieElement nonvanishing_element(const QuotientPresentation& full, int i, int j, int k);

RankTable model_ranks(int n, int max_degree);

/// Graded dimensions of the universal enveloping algebra: the expansion of
/// prod_d (1 - t^d)^(-ranks[d]) through t^D.
TruncatedSeries uea_series(const RankTable& ranks, int max_degree);

/// prod_{k=1}^{n-1} 1/(1 - k t) through t^D.
TruncatedSeries closed_form_series(int n, int max_degree);

/// Column code of a homogeneous associative word (lexicographic = numeric order).
std::uint64_t encode_word(const LieWord& w, int alphabet);
SparseRow to_sparse_row(const AssocPoly& p);

}  // namespace mccool
