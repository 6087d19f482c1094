#include "bergman/balancing.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace bergman {

namespace {

// Memoizes covers_within per (f, g) pair.  Chain walks revisit the same
// intervals constantly (every flag sharing a gap does), and covers_within
// re-validates its arguments each call, so this is the main speed lever of
// verify_all.
class CoverCache {
 public:
  explicit CoverCache(const Matroid& m) : m_(m) {}

  const std::vector<Flat>& covers(const Flat& f, const Flat& g) {
    std::uint64_t key =
        (std::uint64_t(f.set.bits()) << 32) | std::uint64_t(g.set.bits());
    auto it = memo_.find(key);
    if (it == memo_.end())
      it = memo_.emplace(key, m_.covers_within(f, g)).first;
    return it->second;
  }

 private:
  const Matroid& m_;
  std::unordered_map<std::uint64_t, std::vector<Flat>> memo_;
};

// Calls visit(chain) for every cover chain of the given length from f
// staying inside g; chain includes f as its first entry.
void walk_chains(CoverCache& cov, const Flat& g, int len,
                 std::vector<Flat>& chain,
                 const std::function<void(const std::vector<Flat>&)>& visit) {
  if (len == 0) {
    visit(chain);
    return;
  }
  for (const Flat& c : cov.covers(chain.back(), g)) {
    chain.push_back(c);
    walk_chains(cov, g, len - 1, chain, visit);
    chain.pop_back();
  }
}

void check_position(const FlagOfFlats& flag, int i) {
  if (i < 0 || i >= flag.dim())
    fail(errc::index_out_of_range,
         "position i=" + std::to_string(i) + " outside 0.." +
             std::to_string(flag.dim() - 1));
}

BalancingRelation balancing_lhs_cached(const Matroid& m, CoverCache& cov,
                                       const FlagOfFlats& flag, int i, int k) {
  check_position(flag, i);
  const Flat& lo = flag.at(i);
  const Flat& hi = flag.at(i + 1);
  int gap = hi.rank - lo.rank;
  if (k < 1 || k > gap)
    fail(errc::k_out_of_range, "k=" + std::to_string(k) + " outside 1.." +
                                   std::to_string(gap));

  BalancingRelation rel{flag, i, k, {}, RationalVector(m.n())};
  auto add_term = [&](RelationTerm::Kind kind, int level,
                      const std::vector<Flat>& chain, int coeff,
                      const Flat& plus, const Flat& minus) {
    rel.terms.push_back(RelationTerm{kind, level, chain, coeff, plus, minus});
    for (int e : plus.set.elements()) rel.lhs[e] += coeff;
    for (int e : minus.set.elements()) rel.lhs[e] -= coeff;
  };

  std::vector<Flat> chain{lo};
  walk_chains(cov, hi, k, chain, [&](const std::vector<Flat>& c) {
    add_term(RelationTerm::Kind::chain_step, k, c, 1, c[k], c[k - 1]);
  });
  for (int l = 1; l < k; ++l) {
    int sign = ((k - l) % 2 == 0) ? 1 : -1;
    walk_chains(cov, hi, l, chain, [&](const std::vector<Flat>& c) {
      add_term(RelationTerm::Kind::middle_sum, l, c, sign, hi, c[l - 1]);
    });
  }
  int sign_k = (k % 2 == 0) ? 1 : -1;
  add_term(RelationTerm::Kind::constant, 0, {lo}, sign_k, hi, lo);
  return rel;
}

}  // namespace

std::vector<std::vector<Flat>> chains_between(const Matroid& m, const Flat& f,
                                              const Flat& g, int len) {
  if (len < 0) fail(errc::input_error, "chain length must be nonnegative");
  // entry validation; the walk itself revalidates nothing
  m.flat(f.set);
  m.flat(g.set);
  if (!f.set.subset_of(g.set))
    fail(errc::not_nested, render_set(m.ground(), f.set) + " is not contained in " +
                               render_set(m.ground(), g.set));
  CoverCache cov(m);
  std::vector<std::vector<Flat>> out;
  std::vector<Flat> chain{f};
  walk_chains(cov, g, len, chain,
              [&](const std::vector<Flat>& c) { out.push_back(c); });
  return out;
}

Codim1Sum codim1_sum(const Matroid& m, const FlagOfFlats& flag, int i) {
  check_position(flag, i);
  Codim1Sum out{RationalVector(m.n()), 0};
  for (const Flat& c : m.covers_within(flag.at(i), flag.at(i + 1))) {
    out.vector += indicator(c.set, m.n());
    ++out.cover_count;
  }
  return out;
}

BalancingRelation balancing_lhs(const Matroid& m, const FlagOfFlats& flag, int i,
                                int k) {
  CoverCache cov(m);
  return balancing_lhs_cached(m, cov, flag, i, k);
}

FlatCombination formal_combination(const BalancingRelation& r) {
  FlatCombination out;
  for (const RelationTerm& t : r.terms) {
    out[t.plus] += t.coefficient;
    out[t.minus] -= t.coefficient;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void add_scaled(FlatCombination& acc, const FlatCombination& c, const Rational& s) {
  if (s == 0) return;
  for (const auto& [flat, coeff] : c) {
    auto it = acc.emplace(flat, Rational(0)).first;
    it->second += s * coeff;
    if (it->second == 0) acc.erase(it);
  }
}

RationalVector evaluate(const FlatCombination& c, int dim) {
  RationalVector v(dim);
  for (const auto& [flat, coeff] : c)
    for (int e : flat.set.elements()) v[e] += coeff;
  return v;
}

BalancingReport verify_all(const BergmanFan& fan) {
  const Matroid& m = fan.matroid();
  BalancingReport report;
  CoverCache cov(m);
  for (const FlagOfFlats& flag : fan.cones()) {
    ConeType type = flag.type();
    for (int i = 0; i < flag.dim(); ++i) {
      int gap = flag.at(i + 1).rank - flag.at(i).rank;
      for (int k = 1; k <= gap; ++k) {
        BalancingRelation rel = balancing_lhs_cached(m, cov, flag, i, k);
        ++report.relations_checked;
        ++report.by_type[type][{i, k}];
        if (k < gap) report.nontrivial_types.insert(type);
        if (!rel.lhs.is_zero()) report.violations.push_back(std::move(rel));
      }
    }
  }
  return report;
}

GeometricForm geometric_i1_form(const Matroid& m, const FlagOfFlats& flag, int i) {
  check_position(flag, i);
  const Flat& lo = flag.at(i);
  const Flat& hi = flag.at(i + 1);

  GeometricForm out;
  out.sum = RationalVector(m.n());
  std::vector<Flat> covers = m.covers_within(lo, hi);
  out.count = static_cast<int>(covers.size());
  for (const Flat& c : covers) out.sum += indicator(c.set, m.n());

  if (hi.rank - lo.rank > 1) {
    // read each cover as the flag one dimension up that contains this cone
    for (const Flat& c : covers) {
      std::vector<Flat> chain = flag.chain();
      chain.insert(chain.begin() + i + 1, c);
      out.inserted_flags.push_back(FlagOfFlats::unchecked(std::move(chain)));
    }
  }

  RationalVector closed =
      indicator(hi.set, m.n()) + Rational(out.count - 1) * indicator(lo.set, m.n());
  auto lambda = span_coefficients(flag, out.sum);
  if (!(out.sum == closed) || !lambda || !in_cone(flag, out.sum))
    throw std::logic_error("cover sum failed its closed form or cone membership");
  out.lambda = *lambda;
  return out;
}

RationalVector residual_sum(const Matroid& m, const FlagOfFlats& flag, int i,
                            int k) {
  check_position(flag, i);
  const Flat& lo = flag.at(i);
  const Flat& hi = flag.at(i + 1);
  int gap = hi.rank - lo.rank;
  if (k != gap || k <= 1)
    fail(errc::k_out_of_range,
         "the residual sum needs k = r_{i+1} - r_i > 1, got k=" +
             std::to_string(k) + " with gap " + std::to_string(gap));

  int sign = (k % 2 == 0) ? 1 : -1;
  RationalVector out(m.n());
  CoverCache cov(m);
  std::vector<Flat> chain{lo};
  for (int l = 2; l <= k; ++l) {
    walk_chains(cov, hi, l, chain, [&](const std::vector<Flat>& c) {
      for (int e : c[l - 1].set.elements()) out[e] += sign;
    });
  }
  return out;
}

}  // namespace bergman
