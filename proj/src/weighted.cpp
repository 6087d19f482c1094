#include "bergman/weighted.hpp"

#include <algorithm>
#include <map>

namespace bergman {

Skeleton::Skeleton(const BergmanFan& fan, int k) : matroid_(fan.matroid()), k_(k) {
  if (k < 1 || k > fan.dim())
    fail(errc::k_out_of_range, "skeleton dimension k=" + std::to_string(k) +
                                   " outside 1.." + std::to_string(fan.dim()));
  cells_ = fan.cones_of_dim(k);

  std::map<std::vector<std::uint32_t>, int> boundary_index;
  for (const FlagOfFlats& tau : fan.cones_of_dim(k - 1)) {
    std::vector<std::uint32_t> key;
    for (const Flat& f : tau.chain()) key.push_back(f.set.bits());
    boundary_index.emplace(std::move(key), static_cast<int>(boundary_.size()));
    boundary_.push_back(BoundaryCone{tau, {}});
  }

  // each facet of a cell drops exactly one inner flat
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c) {
    const std::vector<Flat>& chain = cells_[c].chain();
    for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
      std::vector<std::uint32_t> key;
      for (std::size_t l = 0; l < chain.size(); ++l)
        if (l != j) key.push_back(chain[l].set.bits());
      boundary_[boundary_index.at(key)].cofaces.push_back(CofaceRef{c, chain[j]});
    }
  }
}

int Skeleton::cell_index(const FlagOfFlats& flag) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), flag);
  if (it == cells_.end() || !(*it == flag))
    fail(errc::input_error, "flag is not a cell of this skeleton");
  return static_cast<int>(it - cells_.begin());
}

WeightFunction::WeightFunction(const Skeleton& s, std::vector<Rational> values)
    : k_(s.k()), values_(std::move(values)) {
  if (values_.size() != s.cells().size())
    fail(errc::domain_mismatch,
         "weight function has " + std::to_string(values_.size()) +
             " values for " + std::to_string(s.cells().size()) + " cells");
}

WeightFunction WeightFunction::constant(const Skeleton& s, const Rational& value) {
  return WeightFunction(s, std::vector<Rational>(s.cells().size(), value));
}

WeightedReport check_weighted(const Skeleton& s, const WeightFunction& w) {
  if (w.k() != s.k() || w.size() != static_cast<int>(s.cells().size()))
    fail(errc::domain_mismatch, "weight function belongs to a different skeleton");
  int n = s.matroid().n();
  WeightedReport report;
  for (const BoundaryCone& tau : s.boundary()) {
    BoundaryCheck check{tau.flag, RationalVector(n), false, std::nullopt};
    for (const CofaceRef& cf : tau.cofaces)
      check.sum += w[cf.cell] * indicator(cf.new_flat.set, n);
    auto lambda = span_coefficients(tau.flag, check.sum);
    check.pass = lambda.has_value();
    check.decomposition = lambda;
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

WeightBasis solve_weights(const Skeleton& s) {
  int n = s.matroid().n();
  SparseRref rref(static_cast<int>(s.cells().size()));
  for (const BoundaryCone& tau : s.boundary()) {
    // Reducing modulo span(tau) = span of the (disjoint) layer indicators:
    // subtract from each coordinate the value at its layer's lowest element.
    // The residual of  sum mu_sigma e_{F_new}  must vanish coordinatewise.
    std::vector<int> layer_pivot(n, -1);
    for (int j = 1; j <= tau.flag.dim(); ++j) {
      ElementSet layer = tau.flag.at(j).set - tau.flag.at(j - 1).set;
      int pivot = layer.elements().front();
      for (int e : layer.elements()) layer_pivot[e] = pivot;
    }
    for (int e = 0; e < n; ++e) {
      if (layer_pivot[e] == e) continue;  // pivot coordinates vanish identically
      SparseRow row;
      for (const CofaceRef& cf : tau.cofaces) {
        int coeff = (cf.new_flat.set.contains(e) ? 1 : 0) -
                    (cf.new_flat.set.contains(layer_pivot[e]) ? 1 : 0);
        if (coeff != 0) row.emplace_back(cf.cell, Rational(coeff));
      }
      if (!row.empty()) rref.insert(std::move(row));
    }
  }
  WeightBasis out;
  for (auto& v : rref.nullspace()) out.basis.push_back(WeightFunction(s, std::move(v)));
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

FlatCombination weighted_boundary_relation(const Skeleton& s,
                                           const WeightFunction& w,
                                           int boundary_index) {
  if (boundary_index < 0 ||
      boundary_index >= static_cast<int>(s.boundary().size()))
    fail(errc::index_out_of_range, "boundary cone index out of range");
  FlatCombination out;
  for (const CofaceRef& cf : s.boundary()[boundary_index].cofaces) {
    if (w[cf.cell] == 0) continue;
    out[cf.new_flat] += w[cf.cell];
    if (out[cf.new_flat] == 0) out.erase(cf.new_flat);
  }
  return out;
}

RelationMatrix relation_matrix(const Matroid& m,
                               const std::vector<GeneratorRef>& generators) {
  RelationMatrix out;
  for (const GeneratorRef& g : generators) {
    out.rows.push_back(formal_combination(balancing_lhs(m, g.flag, g.i, g.k)));
    out.provenance.push_back(g);
  }
  return out;
}

std::vector<GeneratorRef> all_relation_refs(const BergmanFan& fan) {
  std::vector<GeneratorRef> out;
  for (const FlagOfFlats& flag : fan.cones())
    for (int i = 0; i < flag.dim(); ++i) {
      int gap = flag.at(i + 1).rank - flag.at(i).rank;
      for (int k = 1; k <= gap; ++k) out.push_back(GeneratorRef{flag, i, k});
    }
  return out;
}

std::vector<GeneratorRef> all_interval_refs(const BergmanFan& fan) {
  std::vector<GeneratorRef> out;
  if (!fan.has_flat(ElementSet())) return out;  // loops: no flags at all
  const std::vector<Flat>& flats = fan.flats();
  for (const Flat& lo : flats)
    for (const Flat& hi : flats) {
      if (!(lo.set.subset_of(hi.set)) || lo.set == hi.set) continue;
      // the minimal flag through this interval; it always exists
      std::vector<Flat> chain;
      if (!lo.set.empty()) chain.push_back(fan.flat(ElementSet()));
      chain.push_back(lo);
      chain.push_back(hi);
      if (!(hi.set == fan.matroid().ground_mask()))
        chain.push_back(fan.flat(fan.matroid().ground_mask()));
      FlagOfFlats flag = FlagOfFlats::unchecked(std::move(chain));
      int i = lo.set.empty() ? 0 : 1;
      for (int k = 1; k <= hi.rank - lo.rank; ++k)
        out.push_back(GeneratorRef{flag, i, k});
    }
  return out;
}

SpanTestResult relation_span_test(const Matroid& m, const FlatCombination& target,
                                  const FlagOfFlats& anchor,
                                  const std::vector<GeneratorRef>& generators) {
  ElementSet all = m.ground_mask();
  if (!(anchor.chain().back().set == all))
    fail(errc::domain_mismatch, "anchor flag has a different ground set");
  for (const GeneratorRef& g : generators)
    if (!(g.flag.chain().back().set == all))
      fail(errc::domain_mismatch, "generator flag has a different ground set");
  for (const auto& [flat, coeff] : target)
    if (!m.is_flat(flat.set) || m.rank(flat.set) != flat.rank)
      fail(errc::domain_mismatch,
           "target mentions " + render_set(m.ground(), flat.set) +
               ", which is not a flat of this matroid");

  RelationMatrix mat = relation_matrix(m, generators);

  // column space: every flat mentioned anywhere
  std::map<Flat, int> col;
  auto claim = [&](const Flat& f) { col.emplace(f, 0); };
  for (const auto& [f, c] : target) claim(f);
  for (const FlatCombination& row : mat.rows)
    for (const auto& [f, c] : row) claim(f);
  for (const Flat& f : anchor.chain()) claim(f);
  int ncols = 0;
  for (auto& [f, idx] : col) idx = ncols++;

  auto dense = [&](const FlatCombination& c) {
    std::vector<Rational> row(ncols);
    for (const auto& [f, v] : c) row[col.at(f)] = v;
    return row;
  };

  ProvenanceSpan span(ncols);
  for (const FlatCombination& row : mat.rows) span.insert(dense(row));
  for (const Flat& f : anchor.chain()) {
    FlatCombination unit;
    unit[f] = 1;
    span.insert(dense(unit));
  }

  auto red = span.reduce(dense(target));
  SpanTestResult out;
  out.member = red.member;
  out.generator_coefficients.assign(red.coefficients.begin(),
                                    red.coefficients.begin() + mat.rows.size());
  out.anchor_coefficients.assign(red.coefficients.begin() + mat.rows.size(),
                                 red.coefficients.end());
  if (!red.member)
    for (const auto& [f, idx] : col)
      if (red.residual[idx] != 0) out.residual[f] = red.residual[idx];
  return out;
}

}  // namespace bergman
