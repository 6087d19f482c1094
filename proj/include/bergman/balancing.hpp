#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bergman/fan.hpp"

namespace bergman {

// All chains f = F^(0) <: F^(1) <: ... <: F^(len) with every step a cover
// and every entry contained in g; deterministic order.
std::vector<std::vector<Flat>> chains_between(const Matroid& m, const Flat& f,
                                              const Flat& g, int len);

struct Codim1Sum {
  RationalVector vector;  // sum of e_{F'} over the covers of F_i inside F_{i+1}
  int cover_count = 0;
};
Codim1Sum codim1_sum(const Matroid& m, const FlagOfFlats& flag, int i);

// One signed summand: coefficient * (e_plus - e_minus), together with the
// chain that indexes it.  Terms on the empty flat are kept (their vector is
// zero) so reports list the relation term for term.
struct RelationTerm {
  enum class Kind { chain_step, middle_sum, constant };
  Kind kind = Kind::constant;
  int level = 0;  // chain length: k for chain_step, l for middle_sum, 0 for constant
  std::vector<Flat> chain;
  int coefficient = 1;  // +1 or -1
  Flat plus, minus;
};

struct BalancingRelation {
  FlagOfFlats flag;
  int i = 0;
  int k = 1;
  std::vector<RelationTerm> terms;
  RationalVector lhs;  // always the signed sum of terms; zero iff balanced
};

// The higher balancing relation at position i with chain length k,
// 1 <= k <= r_{i+1} - r_i:
//
//   sum_{len-k chains} (e_{F^(k)} - e_{F^(k-1)})
//     + sum_{l=1}^{k-1} (-1)^{k-l} sum_{len-l chains} (e_{F_{i+1}} - e_{F^(l-1)})
//     + (-1)^k (e_{F_{i+1}} - e_{F_i})
//
// with every chain starting at F_i and bounded by F_{i+1} (non-strict).
BalancingRelation balancing_lhs(const Matroid& m, const FlagOfFlats& flag, int i,
                                int k);

// Formal signed combination of e_F symbols, keyed by flat.  Relations are
// zero as vectors, so identities between them live here.
using FlatCombination = std::map<Flat, Rational>;

FlatCombination formal_combination(const BalancingRelation& r);
void add_scaled(FlatCombination& acc, const FlatCombination& c, const Rational& s);
RationalVector evaluate(const FlatCombination& c, int dim);

struct BalancingReport {
  long long relations_checked = 0;
  std::vector<BalancingRelation> violations;
  // (cone type, (i, k)) -> number of relations of that shape
  std::map<ConeType, std::map<std::pair<int, int>, long long>, ConeTypeLess>
      by_type;
  // types carrying some relation with k strictly below r_{i+1} - r_i
  std::set<ConeType, ConeTypeLess> nontrivial_types;
};

// Every flag of the fan, every 0 <= i <= d-1, every 1 <= k <= r_{i+1}-r_i.
// Violations are collected, never aborted on, so a systematic error shows
// up across all types at once.
BalancingReport verify_all(const BergmanFan& fan);

struct GeometricForm {
  RationalVector sum;  // equals e_{F_{i+1}} + (count-1) e_{F_i}
  int count = 0;       // number of covers of F_i inside F_{i+1}
  // nonnegative cone decomposition of sum over the flag (the witness)
  std::vector<Rational> lambda;
  // the flags with one rank-(r_i + 1) flat inserted; empty when
  // r_{i+1} = r_i + 1 since strict insertion is impossible there
  std::vector<FlagOfFlats> inserted_flags;
};

// Cover-sum at position i read as a sum over cones one dimension up
// (strict insertion), with the in-cone witness computed and checked.
GeometricForm geometric_i1_form(const Matroid& m, const FlagOfFlats& flag, int i);

// The leftover double sum in the degenerate case k = r_{i+1} - r_i > 1:
//
//   sum_{l=2}^{k} (-1)^k sum_{len-l chains} e_{F^(l-1)}
//
// which always lands in the linear span of the flag's cone.
RationalVector residual_sum(const Matroid& m, const FlagOfFlats& flag, int i,
                            int k);

}  // namespace bergman
