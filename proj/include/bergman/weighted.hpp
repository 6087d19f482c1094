#pragma once

#include <optional>
#include <vector>

#include "bergman/balancing.hpp"
#include "bergman/linalg.hpp"

namespace bergman {

struct CofaceRef {
  int cell = 0;   // index into Skeleton::cells()
  Flat new_flat;  // the unique flat of the coface missing from the boundary cone
};

struct BoundaryCone {
  FlagOfFlats flag;
  std::vector<CofaceRef> cofaces;  // ascending cell index
};

// The k-skeleton of a Bergman fan: all k-dimensional cones as cells, all
// (k-1)-dimensional cones as boundary, with coface incidence.
class Skeleton {
 public:
  Skeleton(const BergmanFan& fan, int k);

  const Matroid& matroid() const { return matroid_; }
  int k() const { return k_; }
  const std::vector<FlagOfFlats>& cells() const { return cells_; }
  const std::vector<BoundaryCone>& boundary() const { return boundary_; }
  // index of a cell flag (input_error if absent)
  int cell_index(const FlagOfFlats& flag) const;

 private:
  Matroid matroid_;
  int k_;
  std::vector<FlagOfFlats> cells_;
  std::vector<BoundaryCone> boundary_;
};

inline Skeleton skeleton(const BergmanFan& fan, int k) { return Skeleton(fan, k); }

// Rational weight per cell of one skeleton, aligned with Skeleton::cells().
class WeightFunction {
 public:
  WeightFunction(const Skeleton& s, std::vector<Rational> values);
  static WeightFunction constant(const Skeleton& s, const Rational& value);

  int k() const { return k_; }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](int cell) const { return values_[cell]; }

 private:
  int k_;
  std::vector<Rational> values_;
};

struct BoundaryCheck {
  FlagOfFlats flag;
  RationalVector sum;  // sum of w(coface) * e_{new flat}
  bool pass = false;   // sum lies in the span of the boundary cone
  std::optional<std::vector<Rational>> decomposition;  // span coefficients when pass
};

struct WeightedReport {
  std::vector<BoundaryCheck> checks;
  bool all_pass = true;
};

// At every boundary cone τ: sum over cofaces σ of w(σ) e_{F_new(σ,τ)} must
// lie in span(τ).  e_{F_new} is the primitive vector of σ modulo τ; any
// representative differing by span(τ) gives the same verdict.
WeightedReport check_weighted(const Skeleton& s, const WeightFunction& w);

struct WeightBasis {
  int dim = 0;
  std::vector<WeightFunction> basis;  // canonical nullspace basis
};

// All weight functions passing check_weighted, as an exact rational
// nullspace; constraints reduce each boundary sum modulo the span of the
// boundary cone and require the residual to vanish.
WeightBasis solve_weights(const Skeleton& s);

// The formal weighted relation at one boundary cone: sum of w(σ)·[F_new].
FlatCombination weighted_boundary_relation(const Skeleton& s,
                                           const WeightFunction& w,
                                           int boundary_index);

struct GeneratorRef {
  FlagOfFlats flag;
  int i = 0;
  int k = 1;
};

struct RelationMatrix {
  std::vector<FlatCombination> rows;
  std::vector<GeneratorRef> provenance;  // rows[j] is the ledger of provenance[j]
};

RelationMatrix relation_matrix(const Matroid& m,
                               const std::vector<GeneratorRef>& generators);

// Every admissible (flag, i, k) of the fan.  The ledger of a relation only
// depends on the interval (F_i, F_{i+1}) and k, so this list is highly
// redundant; all_interval_refs gives one representative per interval.
std::vector<GeneratorRef> all_relation_refs(const BergmanFan& fan);
std::vector<GeneratorRef> all_interval_refs(const BergmanFan& fan);

struct SpanTestResult {
  bool member = false;
  // target = sum coeff_j * ledger_j + sum anchor_coeff_j * [F_j] + residual
  std::vector<Rational> generator_coefficients;
  std::vector<Rational> anchor_coefficients;  // aligned with anchor.chain()
  FlatCombination residual;                   // empty iff member
};

// Decides whether the target (a formal combination of flat symbols) is a
// rational combination of generator ledgers, modulo the anchor cone's flat
// symbols.  Working modulo the anchor symbols makes the raw weighted sum
// sum w·[F_new] testable directly: subtracting its span(anchor) part is
// exactly a combination of anchor symbols, and membership then forces the
// vector sum into span(anchor) since ledger vectors are all zero.
SpanTestResult relation_span_test(const Matroid& m, const FlatCombination& target,
                                  const FlagOfFlats& anchor,
                                  const std::vector<GeneratorRef>& generators);

}  // namespace bergman
