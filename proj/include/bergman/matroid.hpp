#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bergman/element_set.hpp"
#include "bergman/error.hpp"

namespace bergman {

// Ordered list of distinct external labels; element i of the ground set is
// labels()[i].  All internal arithmetic uses the indices.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  // labels "0", "1", ..., "n-1"
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_.at(e); }
  // input_error if the label is unknown
  int index_of(const std::string& label) const;
  ElementSet all() const { return ElementSet::full(size()); }

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

struct Flat {
  ElementSet set;
  int rank = 0;

  bool operator==(const Flat&) const = default;
  // canonical order: by rank, then by mask
  bool operator<(const Flat& o) const {
    return rank != o.rank ? rank < o.rank : set < o.set;
  }
};

class Matroid {
 public:
  // Validates the basis-exchange axiom; exhaustive over all basis pairs up
  // to 5000 bases, sampled with a fixed seed beyond that.
  static Matroid from_bases(GroundSet ground, std::vector<ElementSet> bases);
  static Matroid uniform(int r, int n);
  static Matroid uniform(int r, GroundSet ground);
  // Vertex labels are arbitrary strings; parallel edges and self-loops are
  // allowed (a self-loop never lies in a spanning forest).  Element labels
  // default to "e0", "e1", ... unless a ground set of matching size is given.
  static Matroid graphic(
      const std::vector<std::pair<std::string, std::string>>& edges,
      std::optional<GroundSet> ground = std::nullopt);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  ElementSet ground_mask() const { return ground_.all(); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  int rank() const { return rank_; }
  bool exchange_check_sampled() const { return exchange_sampled_; }

  int rank(ElementSet s) const;
  ElementSet closure(ElementSet s) const;
  bool is_flat(ElementSet s) const;
  // not_a_flat unless closure(s) == s
  Flat flat(ElementSet s) const;

  // All flats in canonical (rank, mask) order.  Enumeration walks the
  // lattice upward from closure(empty); max_count caps it (size_limit).
  std::vector<Flat> flats(
      std::optional<std::size_t> max_count = std::nullopt) const;

  // Flats F' with f covered by F' (rank f + 1) and F' contained in g.
  std::vector<Flat> covers_within(const Flat& f, const Flat& g) const;

  // Restriction to a flat; element labels carry over.
  Matroid restriction(const Flat& f) const;

 private:
  Matroid(GroundSet ground, std::vector<ElementSet> bases, bool sampled);

  GroundSet ground_;
  std::vector<ElementSet> bases_;
  int rank_ = 0;
  bool exchange_sampled_ = false;
};

// The partition axiom for the interval [f, g]: the sets F' \ f over the
// covers f <: F' <= g partition g \ f.  True for every valid matroid.
bool flat_partition_check(const Matroid& m, const Flat& f, const Flat& g);

// "{a,b}" using ground-set labels, "{}" for the empty set.
std::string render_set(const GroundSet& ground, ElementSet s);

}  // namespace bergman
