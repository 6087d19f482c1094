#include "bergman/fan.hpp"

#include <algorithm>
#include <cstdlib>

namespace bergman {

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  if (dim() != o.dim()) fail(errc::dimension_mismatch, "vector dimensions differ");
  for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  if (dim() != o.dim()) fail(errc::dimension_mismatch, "vector dimensions differ");
  for (int i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }

RationalVector indicator(ElementSet s, int dim) {
  RationalVector v(dim);
  for (int e : s.elements()) {
    if (e >= dim) fail(errc::dimension_mismatch, "indicator set exceeds dimension");
    v[e] = 1;
  }
  return v;
}

RationalVector tropical_combine(const Rational& a, const RationalVector& x,
                                const Rational& b, const RationalVector& y) {
  if (x.dim() != y.dim()) fail(errc::dimension_mismatch, "vector dimensions differ");
  RationalVector z(x.dim());
  for (int i = 0; i < x.dim(); ++i) z[i] = std::min(a + x[i], b + y[i]);
  return z;
}

std::string type_to_string(const ConeType& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

bool FlagOfFlats::operator<(const FlagOfFlats& o) const {
  if (chain_.size() != o.chain_.size()) return chain_.size() < o.chain_.size();
  for (std::size_t j = 0; j < chain_.size(); ++j)
    if (!(chain_[j].set == o.chain_[j].set)) return chain_[j].set < o.chain_[j].set;
  return false;
}

FlagOfFlats flag_of_flats(const Matroid& m, const std::vector<ElementSet>& sets) {
  if (sets.empty()) fail(errc::input_error, "a flag needs at least one flat");
  if (!sets.front().empty())
    fail(errc::not_nested, "a flag must start at the empty flat");
  if (!(sets.back() == m.ground_mask()))
    fail(errc::not_nested, "a flag must end at the full ground set");
  std::vector<Flat> chain;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (j > 0 && !(sets[j - 1].subset_of(sets[j]) && !(sets[j - 1] == sets[j])))
      fail(errc::not_nested, render_set(m.ground(), sets[j - 1]) +
                                 " does not nest strictly inside " +
                                 render_set(m.ground(), sets[j]));
    chain.push_back(m.flat(sets[j]));
  }
  return FlagOfFlats::unchecked(std::move(chain));
}

bool is_face(const FlagOfFlats& a, const FlagOfFlats& b) {
  // two-pointer subchain test over the nested (hence mask-sorted) chains
  std::size_t i = 0;
  for (const Flat& f : b.chain()) {
    if (i < a.chain().size() && a.chain()[i].set == f.set) ++i;
  }
  return i == a.chain().size();
}

FlagOfFlats intersect(const FlagOfFlats& a, const FlagOfFlats& b) {
  std::vector<Flat> common;
  std::size_t i = 0, j = 0;
  while (i < a.chain().size() && j < b.chain().size()) {
    const Flat& fa = a.chain()[i];
    const Flat& fb = b.chain()[j];
    if (fa.set == fb.set) {
      common.push_back(fa);
      ++i, ++j;
    } else if (fa.set.bits() < fb.set.bits()) {
      ++i;
    } else {
      ++j;
    }
  }
  return FlagOfFlats::unchecked(std::move(common));
}

BergmanFan::BergmanFan(Matroid m, std::vector<Flat> flats,
                       std::vector<FlagOfFlats> cones)
    : matroid_(std::move(m)), flats_(std::move(flats)), cones_(std::move(cones)) {
  for (const Flat& f : flats_) flat_rank_.emplace(f.set.bits(), f.rank);
  for (const FlagOfFlats& c : cones_) ++counts_by_type_[c.type()];
}

Flat BergmanFan::flat(ElementSet s) const {
  auto it = flat_rank_.find(s.bits());
  if (it == flat_rank_.end())
    fail(errc::not_a_flat, render_set(matroid_.ground(), s) + " is not a flat");
  return Flat{s, it->second};
}

std::vector<FlagOfFlats> BergmanFan::cones_of_dim(int d) const {
  std::vector<FlagOfFlats> out;
  for (const FlagOfFlats& c : cones_)
    if (c.dim() == d) out.push_back(c);
  return out;
}

BergmanFan build_fan(const Matroid& m, std::size_t max_flats) {
  std::vector<Flat> flats = m.flats(max_flats);

  // supersets[i]: indices of flats strictly containing flats[i]; flats are
  // (rank, mask)-sorted, so supersets always come later
  int nf = static_cast<int>(flats.size());
  std::vector<std::vector<int>> supersets(nf);
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j)
      if (flats[i].set.subset_of(flats[j].set) && !(flats[i].set == flats[j].set))
        supersets[i].push_back(j);

  std::vector<FlagOfFlats> cones;
  if (!flats.empty() && flats.front().set.empty()) {
    // depth-first chain enumeration from the empty flat to E
    std::vector<Flat> chain{flats.front()};
    auto dfs = [&](auto&& self, int i) -> void {
      if (flats[i].set == m.ground_mask()) {
        cones.push_back(FlagOfFlats::unchecked(chain));
        return;
      }
      for (int j : supersets[i]) {
        chain.push_back(flats[j]);
        self(self, j);
        chain.pop_back();
      }
    };
    dfs(dfs, 0);
  }
  std::sort(cones.begin(), cones.end());
  return BergmanFan(m, std::move(flats), std::move(cones));
}

std::optional<std::vector<Rational>> span_coefficients(const FlagOfFlats& flag,
                                                       const RationalVector& x) {
  int d = flag.dim();
  if (!(flag.at(d).set == ElementSet::full(x.dim())))
    fail(errc::dimension_mismatch, "vector dimension does not match the flag");
  // layer values v_j (x restricted to F_j \ F_{j-1} must be constant)
  std::vector<Rational> v(d);
  for (int j = 1; j <= d; ++j) {
    ElementSet layer = flag.at(j).set - flag.at(j - 1).set;
    std::vector<int> members = layer.elements();
    for (int e : members)
      if (x[e] != x[members.front()]) return std::nullopt;
    v[j - 1] = x[members.front()];
  }
  std::vector<Rational> lambda(d);
  for (int j = 0; j < d; ++j)
    lambda[j] = (j + 1 < d) ? v[j] - v[j + 1] : v[j];
  return lambda;
}

bool in_cone(const FlagOfFlats& flag, const RationalVector& x) {
  auto lambda = span_coefficients(flag, x);
  if (!lambda) return false;
  for (int j = 0; j + 1 < static_cast<int>(lambda->size()); ++j)
    if ((*lambda)[j] < 0) return false;
  return true;
}

bool in_span(const FlagOfFlats& flag, const RationalVector& x) {
  return span_coefficients(flag, x).has_value();
}

std::optional<FlagOfFlats> classify_point(const BergmanFan& fan,
                                          const RationalVector& x) {
  int n = fan.matroid().n();
  if (x.dim() != n)
    fail(errc::dimension_mismatch, "point dimension " + std::to_string(x.dim()) +
                                       " does not match n=" + std::to_string(n));
  // upper level sets at the distinct values of x, largest first
  std::vector<Rational> values(x.coords());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<ElementSet> sets{ElementSet()};
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    ElementSet level;
    for (int e = 0; e < n; ++e)
      if (x[e] >= values[j]) level = level.with(e);
    sets.push_back(level);
  }
  sets.push_back(fan.matroid().ground_mask());

  std::vector<Flat> chain;
  for (ElementSet s : sets) {
    if (!fan.has_flat(s)) return std::nullopt;
    chain.push_back(fan.flat(s));
  }
  return FlagOfFlats::unchecked(std::move(chain));
}

bool member_of_support(const BergmanFan& fan, ElementSet f) {
  if (!f.subset_of(fan.matroid().ground_mask()))
    fail(errc::out_of_ground, "set outside the ground set");
  return classify_point(fan, indicator(f, fan.matroid().n())).has_value();
}

}  // namespace bergman
