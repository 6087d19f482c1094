#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

// (column, value) entries sorted by column, values nonzero
using SparseRow = std::vector<std::pair<int, Rational>>;

// Reduced row echelon form over Q, maintained incrementally.  Rows are
// normalized to leading coefficient 1 and fully back-reduced, so the stored
// basis is the canonical RREF of the row space regardless of insertion
// order; pivots are the column-minimal choice.
class SparseRref {
 public:
  explicit SparseRref(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseRow>& rows() const { return rows_; }

  // fully reduce against the current basis without inserting
  SparseRow reduce(SparseRow row) const;
  // reduce, then adopt the residual as a new pivot row; false if dependent
  bool insert(SparseRow row);

  // One basis vector per free column, in ascending column order, scaled to
  // primitive integer entries with positive leading sign.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  int cols_;
  std::map<int, SparseRow> rows_;  // pivot column -> row
};

// row += s * other (sparse merge)
SparseRow sparse_axpy(const SparseRow& row, const Rational& s, const SparseRow& other);

// Scale a rational vector to coprime integers with the first nonzero entry
// positive; the zero vector stays zero.
void normalize_primitive(std::vector<Rational>& v);

// Dense echelon basis that remembers how each basis row was built from the
// inserted rows, so a successful reduction yields explicit coefficients
// over the original inserts.
class ProvenanceSpan {
 public:
  explicit ProvenanceSpan(int cols) : cols_(cols) {}

  int inserted() const { return n_inserted_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  void insert(const std::vector<Rational>& row);

  struct Reduction {
    bool member = false;
    std::vector<Rational> residual;
    // row == sum_j coefficients[j] * inserted_row_j + residual
    std::vector<Rational> coefficients;
  };
  Reduction reduce(const std::vector<Rational>& row) const;

 private:
  struct BasisRow {
    std::vector<Rational> row;    // leading coefficient 1 at pivot
    std::vector<Rational> combo;  // over original inserts
    int pivot = 0;
  };
  int cols_;
  int n_inserted_ = 0;
  std::vector<BasisRow> rows_;  // ascending pivot
};

}  // namespace bergman
