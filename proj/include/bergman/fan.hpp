#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bergman/matroid.hpp"
#include "bergman/vector.hpp"

namespace bergman {

// Rank sequence (r_0, ..., r_d) of a flag; compares by length first, so
// lower-dimensional cone types sort before higher-dimensional ones.
using ConeType = std::vector<int>;

struct ConeTypeLess {
  bool operator()(const ConeType& a, const ConeType& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string type_to_string(const ConeType& t);  // "(0,1,3)"

// Strictly nested chain of flats from the empty flat to the full ground set.
// The cone it spans is  sum_j  R>=0 * e_{F_j}  (j < d)  +  R * e_{F_d}.
class FlagOfFlats {
 public:
  // pre: chain is strictly nested, starts at the empty flat, ends at E,
  // every entry carries its true rank.  Use flag_of_flats() for checked
  // construction from raw sets.
  static FlagOfFlats unchecked(std::vector<Flat> chain) {
    return FlagOfFlats(std::move(chain));
  }

  const std::vector<Flat>& chain() const { return chain_; }
  // number of proper flats, which is also the cone dimension
  int dim() const { return static_cast<int>(chain_.size()) - 1; }
  const Flat& at(int j) const { return chain_.at(j); }

  ConeType type() const {
    ConeType t;
    for (const Flat& f : chain_) t.push_back(f.rank);
    return t;
  }

  bool operator==(const FlagOfFlats&) const = default;
  // canonical order: dimension, then the mask sequence lexicographically
  bool operator<(const FlagOfFlats& o) const;

 private:
  explicit FlagOfFlats(std::vector<Flat> chain) : chain_(std::move(chain)) {}
  std::vector<Flat> chain_;
};

// Checked construction: every set must be a flat of m (in particular the
// chain must start at {} and end at E, so a matroid with loops admits no
// flags at all), and the sets must be strictly nested.
FlagOfFlats flag_of_flats(const Matroid& m, const std::vector<ElementSet>& sets);

// faces of the cone of b are exactly the subchains of b
bool is_face(const FlagOfFlats& a, const FlagOfFlats& b);

// the intersection of two cones is the cone of the common subchain
FlagOfFlats intersect(const FlagOfFlats& a, const FlagOfFlats& b);

class BergmanFan {
 public:
  BergmanFan(Matroid m, std::vector<Flat> flats, std::vector<FlagOfFlats> cones);

  const Matroid& matroid() const { return matroid_; }
  const std::vector<Flat>& flats() const { return flats_; }
  bool has_flat(ElementSet s) const { return flat_rank_.count(s.bits()) != 0; }
  // not_a_flat when absent
  Flat flat(ElementSet s) const;

  // all cones in canonical order (dimension, then lexicographic)
  const std::vector<FlagOfFlats>& cones() const { return cones_; }
  std::vector<FlagOfFlats> cones_of_dim(int d) const;
  // dimension of the fan: every maximal cone has dim = rank(M)
  int dim() const { return matroid_.rank(); }

  const std::map<ConeType, int, ConeTypeLess>& counts_by_type() const {
    return counts_by_type_;
  }

 private:
  Matroid matroid_;
  std::vector<Flat> flats_;
  std::unordered_map<std::uint32_t, int> flat_rank_;
  std::vector<FlagOfFlats> cones_;
  std::map<ConeType, int, ConeTypeLess> counts_by_type_;
};

// Enumerates all flats (refusing with size_limit beyond max_flats) and all
// flags between the empty flat and E.  A matroid with loops yields an empty
// cone list: its empty set is not a flat, so no flag can start.
BergmanFan build_fan(const Matroid& m, std::size_t max_flats = 65536);

// Layer decomposition of x over the flag: x = sum_j lambda_j e_{F_j} iff x
// is constant on every layer F_j \ F_{j-1}.  nullopt when x is not in the
// linear span.
std::optional<std::vector<Rational>> span_coefficients(const FlagOfFlats& flag,
                                                       const RationalVector& x);

// span membership plus lambda_j >= 0 for all j < d (the last coefficient,
// on e_E, is unconstrained)
bool in_cone(const FlagOfFlats& flag, const RationalVector& x);
bool in_span(const FlagOfFlats& flag, const RationalVector& x);

// The unique cone containing x in its relative interior, via the upper
// level sets of x; nullopt when some level set is not a flat.
std::optional<FlagOfFlats> classify_point(const BergmanFan& fan,
                                          const RationalVector& x);

// x = indicator(f) lies in the support iff f is a flat (for loopless M)
bool member_of_support(const BergmanFan& fan, ElementSet f);

}  // namespace bergman
