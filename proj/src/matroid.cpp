#include "bergman/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace bergman {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  int n = static_cast<int>(labels_.size());
  if (n < 1) fail(errc::input_error, "ground set must have at least one element");
  if (n > ElementSet::max_elements)
    fail(errc::input_error, "ground set larger than " +
                                std::to_string(ElementSet::max_elements) +
                                " elements is not supported");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      fail(errc::input_error, "duplicate ground set label \"" + l + "\"");
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  fail(errc::input_error, "unknown ground set label \"" + label + "\"");
}

std::string render_set(const GroundSet& ground, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += ground.label(e);
    first = false;
  }
  return out + "}";
}

namespace {

// One basis-exchange pair: for every x in b1 \ b2 there must be y in b2 \ b1
// with b1 - x + y again a basis.
bool exchange_holds(ElementSet b1, ElementSet b2,
                    const std::unordered_set<std::uint32_t>& basis_set,
                    int* bad_x) {
  for (int x : (b1 - b2).elements()) {
    bool found = false;
    for (int y : (b2 - b1).elements()) {
      ElementSet candidate = (b1 - ElementSet::single(x)).with(y);
      if (basis_set.count(candidate.bits())) {
        found = true;
        break;
      }
    }
    if (!found) {
      *bad_x = x;
      return false;
    }
  }
  return true;
}

}  // namespace

Matroid::Matroid(GroundSet ground, std::vector<ElementSet> bases, bool sampled)
    : ground_(std::move(ground)),
      bases_(std::move(bases)),
      exchange_sampled_(sampled) {
  rank_ = bases_.front().size();
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<ElementSet> bases) {
  if (bases.empty()) fail(errc::empty_bases, "a matroid needs at least one basis");
  ElementSet all = ground.all();
  int card = bases.front().size();
  for (ElementSet b : bases) {
    if (!b.subset_of(all))
      fail(errc::out_of_ground, "a basis contains elements outside the ground set");
    if (b.size() != card)
      fail(errc::unequal_cardinality, "bases of different sizes (" +
                                          std::to_string(card) + " and " +
                                          std::to_string(b.size()) + ")");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  std::unordered_set<std::uint32_t> basis_set;
  for (ElementSet b : bases) basis_set.insert(b.bits());

  const std::size_t exhaustive_limit = 5000;
  bool sampled = bases.size() > exhaustive_limit;
  auto report = [&](ElementSet b1, ElementSet b2, int x) {
    fail(errc::exchange_axiom_violated,
         "exchange fails for bases " + render_set(ground, b1) + ", " +
             render_set(ground, b2) + " at element " + ground.label(x));
  };
  int bad_x = -1;
  if (!sampled) {
    for (std::size_t i = 0; i < bases.size(); ++i)
      for (std::size_t j = 0; j < bases.size(); ++j) {
        if (i == j) continue;
        if (!exchange_holds(bases[i], bases[j], basis_set, &bad_x))
          report(bases[i], bases[j], bad_x);
      }
  } else {
    std::mt19937_64 rng(0x6265726721ull);
    std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
    for (int trial = 0; trial < 20000; ++trial) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      if (!exchange_holds(bases[i], bases[j], basis_set, &bad_x))
        report(bases[i], bases[j], bad_x);
    }
  }
  return Matroid(std::move(ground), std::move(bases), sampled);
}

Matroid Matroid::uniform(int r, int n) { return uniform(r, GroundSet::numbered(n)); }

Matroid Matroid::uniform(int r, GroundSet ground) {
  int n = ground.size();
  if (r < 0 || r > n)
    fail(errc::invalid_rank, "uniform matroid needs 0 <= r <= n, got r=" +
                                 std::to_string(r) + ", n=" + std::to_string(n));
  // all r-subsets; provably a matroid, so the exchange check is skipped
  std::vector<ElementSet> bases;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == r) bases.push_back(ElementSet(mask));
  return Matroid(std::move(ground), std::move(bases), false);
}

Matroid Matroid::graphic(
    const std::vector<std::pair<std::string, std::string>>& edges,
    std::optional<GroundSet> ground) {
  int m = static_cast<int>(edges.size());
  if (m < 1) fail(errc::input_error, "graphic matroid needs at least one edge");
  if (m > ElementSet::max_elements)
    fail(errc::input_error, "graphic matroid with more than " +
                                std::to_string(ElementSet::max_elements) +
                                " edges is not supported");
  if (ground && ground->size() != m)
    fail(errc::input_error, "ground set size does not match the edge count");

  std::map<std::string, int> vertex_id;
  std::vector<std::pair<int, int>> ends;
  for (const auto& [u, v] : edges) {
    auto id = [&](const std::string& name) {
      auto [it, _] = vertex_id.emplace(name, static_cast<int>(vertex_id.size()));
      return it->second;
    };
    ends.emplace_back(id(u), id(v));
  }
  int nv = static_cast<int>(vertex_id.size());

  // spanning forests by brute force over edge subsets (m <= 20)
  auto forest_size = [&](std::uint32_t mask) -> int {
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    int used = 0;
    for (std::uint32_t b = mask; b; b &= b - 1) {
      auto [u, v] = ends[std::countr_zero(b)];
      int ru = find(u), rv = find(v);
      if (ru == rv) return -1;  // cycle (covers self-loops too)
      parent[ru] = rv;
      ++used;
    }
    return used;
  };

  int best = 0;
  std::vector<ElementSet> bases;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int sz = forest_size(mask);
    if (sz < 0) continue;
    if (sz > best) {
      best = sz;
      bases.clear();
    }
    if (sz == best) bases.push_back(ElementSet(mask));
  }

  GroundSet gs = ground ? std::move(*ground) : [&] {
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i));
    return GroundSet(std::move(labels));
  }();
  std::sort(bases.begin(), bases.end());
  return Matroid(std::move(gs), std::move(bases), false);
}

int Matroid::rank(ElementSet s) const {
  if (!s.subset_of(ground_mask()))
    fail(errc::out_of_ground, "rank of a set outside the ground set");
  int best = 0;
  for (ElementSet b : bases_) best = std::max(best, (b & s).size());
  return best;
}

ElementSet Matroid::closure(ElementSet s) const {
  int r = rank(s);
  ElementSet out = s;
  for (int e : (ground_mask() - s).elements())
    if (rank(s.with(e)) == r) out = out.with(e);
  return out;
}

bool Matroid::is_flat(ElementSet s) const { return closure(s) == s; }

Flat Matroid::flat(ElementSet s) const {
  if (!is_flat(s))
    fail(errc::not_a_flat, render_set(ground_, s) + " is not a flat");
  return Flat{s, rank(s)};
}

std::vector<Flat> Matroid::flats(std::optional<std::size_t> max_count) const {
  std::vector<Flat> out;
  std::set<ElementSet> level{closure(ElementSet())};
  int r = rank(ElementSet());
  while (true) {
    for (ElementSet f : level) {
      out.push_back(Flat{f, r});
      if (max_count && out.size() > *max_count)
        fail(errc::size_limit, "flat count exceeds the configured bound of " +
                                   std::to_string(*max_count));
    }
    if (level.count(ground_mask())) break;
    std::set<ElementSet> next;
    for (ElementSet f : level)
      for (int e : (ground_mask() - f).elements()) next.insert(closure(f.with(e)));
    level = std::move(next);
    ++r;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Flat> Matroid::covers_within(const Flat& f, const Flat& g) const {
  if (!is_flat(f.set) || rank(f.set) != f.rank)
    fail(errc::not_a_flat, render_set(ground_, f.set) + " is not a flat");
  if (!is_flat(g.set) || rank(g.set) != g.rank)
    fail(errc::not_a_flat, render_set(ground_, g.set) + " is not a flat");
  if (!f.set.subset_of(g.set))
    fail(errc::not_nested, render_set(ground_, f.set) + " is not contained in " +
                               render_set(ground_, g.set));
  std::set<ElementSet> covers;
  for (int e : (g.set - f.set).elements()) covers.insert(closure(f.set.with(e)));
  std::vector<Flat> out;
  for (ElementSet c : covers)
    if (c.subset_of(g.set)) out.push_back(Flat{c, f.rank + 1});
  std::sort(out.begin(), out.end());
  return out;
}

Matroid Matroid::restriction(const Flat& f) const {
  if (!is_flat(f.set))
    fail(errc::not_a_flat,
         "restriction is defined for flats only, got " + render_set(ground_, f.set));
  std::vector<int> kept = f.set.elements();
  std::vector<std::string> labels;
  for (int e : kept) labels.push_back(ground_.label(e));

  int r = rank(f.set);
  std::set<ElementSet> sub_bases;
  for (ElementSet b : bases_) {
    ElementSet inter = b & f.set;
    if (inter.size() != r) continue;
    ElementSet reindexed;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (inter.contains(kept[i])) reindexed = reindexed.with(static_cast<int>(i));
    sub_bases.insert(reindexed);
  }
  // a restriction of a matroid is a matroid, no re-validation needed
  return Matroid(GroundSet(std::move(labels)),
                 std::vector<ElementSet>(sub_bases.begin(), sub_bases.end()), false);
}

bool flat_partition_check(const Matroid& m, const Flat& f, const Flat& g) {
  ElementSet seen;
  for (const Flat& c : m.covers_within(f, g)) {
    ElementSet part = c.set - f.set;
    if (!(seen & part).empty()) return false;  // overlap
    seen = seen | part;
  }
  return seen == g.set - f.set;
}

}  // namespace bergman
