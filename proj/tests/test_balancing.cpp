#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "bergman/balancing.hpp"
#include "bergman/error.hpp"
#include "bergman/fan.hpp"
#include "bergman/matroid.hpp"

using namespace bergman;

namespace {

ElementSet mask(std::initializer_list<int> elements) {
  ElementSet s;
  for (int e : elements) s = s.with(e);
  return s;
}

RationalVector vec(std::initializer_list<int> values) {
  std::vector<Rational> c;
  for (int v : values) c.emplace_back(v);
  return RationalVector(std::move(c));
}

RationalVector term_sum(const BalancingRelation& rel, RelationTerm::Kind kind,
                        int dim) {
  RationalVector acc(dim);
  for (const RelationTerm& t : rel.terms)
    if (t.kind == kind)
      acc += Rational(t.coefficient) *
             (indicator(t.plus.set, dim) - indicator(t.minus.set, dim));
  return acc;
}

FlagOfFlats flag3(const Matroid& m, std::initializer_list<int> inner) {
  std::vector<ElementSet> sets;
  sets.push_back(ElementSet());
  ElementSet s;
  for (int e : inner) s = s.with(e);
  if (s.size() > 0) sets.push_back(s);
  sets.push_back(m.ground_mask());
  return flag_of_flats(m, sets);
}

}  // namespace

TEST_CASE("cover chains between flats") {
  Matroid u = Matroid::uniform(3, 4);
  Flat bottom = u.flat(ElementSet());
  Flat top = u.flat(u.ground_mask());

  auto maximal = chains_between(u, bottom, top, 3);
  CHECK(maximal.size() == 12);

  auto len2 = chains_between(u, bottom, top, 2);
  CHECK(len2.size() == 12);  // 4 singletons x 3 pairs above each
  for (const auto& c : len2) {
    REQUIRE(c.size() == 3);
    CHECK(c[0].set == ElementSet());
    CHECK(c[1].rank == 1);
    CHECK(c[2].rank == 2);
    CHECK(c[1].set.subset_of(c[2].set));
  }

  auto len0 = chains_between(u, bottom, top, 0);
  REQUIRE(len0.size() == 1);
  CHECK(len0[0] == std::vector<Flat>{bottom});

  CHECK(chains_between(u, bottom, u.flat(mask({0, 1})), 1).size() == 2);
  CHECK(chains_between(u, bottom, u.flat(mask({0, 1})), 2).size() == 2);
  CHECK(chains_between(u, bottom, bottom, 1).empty());
  CHECK_THROWS_AS(chains_between(u, u.flat(mask({0})), u.flat(mask({1, 2})), 1),
                  error);
  CHECK_THROWS_AS(chains_between(u, bottom, top, -1), error);
}

TEST_CASE("codimension-1 cover sums") {
  Matroid u = Matroid::uniform(3, 4);

  Codim1Sum c1 = codim1_sum(u, flag3(u, {0}), 1);
  CHECK(c1.vector == vec({3, 1, 1, 1}));
  CHECK(c1.cover_count == 3);

  Codim1Sum c2 = codim1_sum(u, flag3(u, {0, 1}), 0);
  CHECK(c2.vector == vec({1, 1, 0, 0}));
  CHECK(c2.cover_count == 2);

  // unique cover across a rank-1 step
  FlagOfFlats full = flag_of_flats(
      u, {ElementSet(), mask({0}), mask({0, 1}), u.ground_mask()});
  Codim1Sum c3 = codim1_sum(u, full, 0);
  CHECK(c3.vector == indicator(mask({0}), 4));
  CHECK(c3.cover_count == 1);

  CHECK_THROWS_AS(codim1_sum(u, full, 3), error);
  CHECK_THROWS_AS(codim1_sum(u, full, -1), error);
}

TEST_CASE("cover sums satisfy the closed form with a cone witness") {
  for (const Matroid& m :
       {Matroid::uniform(3, 4), Matroid::uniform(2, 5),
        Matroid::graphic({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}})}) {
    BergmanFan fan = build_fan(m);
    for (const FlagOfFlats& flag : fan.cones())
      for (int i = 0; i < flag.dim(); ++i) {
        Codim1Sum c = codim1_sum(m, flag, i);
        RationalVector closed =
            indicator(flag.at(i + 1).set, m.n()) +
            Rational(c.cover_count - 1) * indicator(flag.at(i).set, m.n());
        CHECK(c.vector == closed);
        CHECK(c.cover_count >= 1);
        CHECK(in_cone(flag, c.vector));
      }
  }
}

TEST_CASE("worked-example relations vanish under every relabeling") {
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    Matroid u = Matroid::uniform(3, 4);
    int i = perm[0], j = perm[1];

    BalancingRelation r1 = balancing_lhs(u, flag3(u, {i}), 1, 1);
    CHECK(r1.lhs.is_zero());

    BalancingRelation r2 = balancing_lhs(u, flag3(u, {i, j}), 0, 1);
    CHECK(r2.lhs.is_zero());

    BalancingRelation r3 = balancing_lhs(u, flag3(u, {}), 0, 1);
    CHECK(r3.lhs.is_zero());

    BalancingRelation r4 = balancing_lhs(u, flag3(u, {}), 0, 2);
    CHECK(r4.lhs.is_zero());
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("the (0,2) relation at the lineality flag, term by term") {
  Matroid u = Matroid::uniform(3, 4);
  BalancingRelation rel = balancing_lhs(u, flag3(u, {}), 0, 2);
  CHECK(rel.lhs.is_zero());

  CHECK(term_sum(rel, RelationTerm::Kind::chain_step, 4) == vec({3, 3, 3, 3}));
  CHECK(term_sum(rel, RelationTerm::Kind::middle_sum, 4) ==
        vec({-4, -4, -4, -4}));
  CHECK(term_sum(rel, RelationTerm::Kind::constant, 4) == vec({1, 1, 1, 1}));

  // 12 length-2 chains, 4 length-1 chains, 1 constant
  int by_kind[3] = {0, 0, 0};
  for (const RelationTerm& t : rel.terms) ++by_kind[static_cast<int>(t.kind)];
  CHECK(by_kind[static_cast<int>(RelationTerm::Kind::chain_step)] == 12);
  CHECK(by_kind[static_cast<int>(RelationTerm::Kind::middle_sum)] == 4);
  CHECK(by_kind[static_cast<int>(RelationTerm::Kind::constant)] == 1);

  for (const RelationTerm& t : rel.terms) {
    CHECK((t.coefficient == 1 || t.coefficient == -1));
    if (t.kind == RelationTerm::Kind::middle_sum) {
      CHECK(t.coefficient == -1);  // (-1)^(k-l) with k=2, l=1
      CHECK(t.level == 1);
      CHECK(t.plus.set == u.ground_mask());
    }
  }
}

TEST_CASE("lhs always equals the signed sum of recorded terms") {
  Matroid u = Matroid::uniform(3, 5);
  BergmanFan fan = build_fan(u);
  for (const FlagOfFlats& flag : fan.cones())
    for (int i = 0; i < flag.dim(); ++i) {
      int gap = flag.at(i + 1).rank - flag.at(i).rank;
      for (int k = 1; k <= gap; ++k) {
        BalancingRelation rel = balancing_lhs(u, flag, i, k);
        RationalVector acc(u.n());
        for (const RelationTerm& t : rel.terms)
          acc += Rational(t.coefficient) *
                 (indicator(t.plus.set, u.n()) - indicator(t.minus.set, u.n()));
        CHECK(acc == rel.lhs);
        CHECK(rel.lhs.is_zero());
      }
    }
}

TEST_CASE("k=1 agrees with the cover-sum formulation") {
  for (const Matroid& m : {Matroid::uniform(3, 4), Matroid::uniform(2, 5)}) {
    BergmanFan fan = build_fan(m);
    for (const FlagOfFlats& flag : fan.cones())
      for (int i = 0; i < flag.dim(); ++i) {
        BalancingRelation rel = balancing_lhs(m, flag, i, 1);
        Codim1Sum c = codim1_sum(m, flag, i);
        // chain terms are exactly the cover sum recentered at F_i
        CHECK(term_sum(rel, RelationTerm::Kind::chain_step, m.n()) ==
              c.vector - Rational(c.cover_count) *
                             indicator(flag.at(i).set, m.n()));
        CHECK(rel.lhs.is_zero());
        CHECK(c.vector == indicator(flag.at(i + 1).set, m.n()) +
                              Rational(c.cover_count - 1) *
                                  indicator(flag.at(i).set, m.n()));
      }
  }
}

TEST_CASE("length-k chains split as cover steps times shorter chains") {
  Matroid u = Matroid::uniform(3, 5);
  Flat bottom = u.flat(ElementSet());
  Flat top = u.flat(u.ground_mask());
  for (int k = 1; k <= 3; ++k) {
    auto whole = chains_between(u, bottom, top, k);
    std::vector<std::vector<Flat>> glued;
    for (const Flat& first : u.covers_within(bottom, top))
      for (const auto& tail : chains_between(u, first, top, k - 1)) {
        std::vector<Flat> chain;
        chain.push_back(bottom);
        chain.insert(chain.end(), tail.begin(), tail.end());
        glued.push_back(std::move(chain));
      }
    auto key = [](const std::vector<Flat>& c) {
      std::vector<std::uint32_t> k2;
      for (const Flat& f : c) k2.push_back(f.set.bits());
      return k2;
    };
    std::vector<std::vector<std::uint32_t>> a, b;
    for (const auto& c : whole) a.push_back(key(c));
    for (const auto& c : glued) b.push_back(key(c));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("degenerate top-k relation is a signed rearrangement of k-1") {
  auto check_degenerate = [](const Matroid& m) {
    BergmanFan fan = build_fan(m);
    for (const FlagOfFlats& flag : fan.cones())
      for (int i = 0; i < flag.dim(); ++i) {
        int gap = flag.at(i + 1).rank - flag.at(i).rank;
        if (gap <= 1) continue;
        FlatCombination top = formal_combination(balancing_lhs(m, flag, i, gap));
        FlatCombination below =
            formal_combination(balancing_lhs(m, flag, i, gap - 1));
        add_scaled(top, below, 1);
        CHECK(top.empty());
      }
  };
  check_degenerate(Matroid::uniform(3, 4));
  check_degenerate(Matroid::uniform(2, 4));
}

TEST_CASE("gap-1 relations cancel literally") {
  Matroid u = Matroid::uniform(3, 4);
  FlagOfFlats full = flag_of_flats(
      u, {ElementSet(), mask({0}), mask({0, 1}), u.ground_mask()});
  BalancingRelation rel = balancing_lhs(u, full, 1, 1);
  REQUIRE(rel.terms.size() == 2);
  CHECK(rel.terms[0].plus == rel.terms[1].plus);
  CHECK(rel.terms[0].minus == rel.terms[1].minus);
  CHECK(rel.terms[0].coefficient + rel.terms[1].coefficient == 0);
  CHECK(formal_combination(rel).empty());
}

TEST_CASE("residual sums stay in the span of the flag") {
  Matroid u = Matroid::uniform(3, 4);

  RationalVector r1 = residual_sum(u, flag3(u, {}), 0, 3);
  CHECK(r1 == vec({-9, -9, -9, -9}));
  CHECK(in_span(flag3(u, {}), r1));

  RationalVector r2 = residual_sum(u, flag3(u, {0}), 1, 2);
  CHECK(r2 == vec({3, 1, 1, 1}));
  CHECK(in_span(flag3(u, {0}), r2));
  auto lam = span_coefficients(flag3(u, {0}), r2);
  REQUIRE(lam.has_value());
  CHECK(*lam == std::vector<Rational>{2, 1});

  CHECK_THROWS_AS(residual_sum(u, flag3(u, {}), 0, 2), error);   // k != gap
  CHECK_THROWS_AS(residual_sum(u, flag3(u, {0}), 0, 1), error);  // gap 1

  for (const Matroid& m : {Matroid::uniform(3, 4), Matroid::uniform(2, 4),
                           Matroid::uniform(3, 5)}) {
    BergmanFan fan = build_fan(m);
    for (const FlagOfFlats& flag : fan.cones())
      for (int i = 0; i < flag.dim(); ++i) {
        int gap = flag.at(i + 1).rank - flag.at(i).rank;
        if (gap > 1) CHECK(in_span(flag, residual_sum(m, flag, i, gap)));
      }
  }
}

TEST_CASE("geometric reading of the cover sum") {
  Matroid u = Matroid::uniform(3, 4);

  GeometricForm g1 = geometric_i1_form(u, flag3(u, {0}), 1);
  CHECK(g1.count == 3);
  CHECK(g1.sum == vec({3, 1, 1, 1}));
  CHECK(g1.lambda == std::vector<Rational>{2, 1});
  REQUIRE(g1.inserted_flags.size() == 3);
  for (const FlagOfFlats& f : g1.inserted_flags) {
    CHECK(f.dim() == 3);
    CHECK(is_face(flag3(u, {0}), f));
    CHECK(f.at(2).rank == 2);
  }

  GeometricForm g2 = geometric_i1_form(u, flag3(u, {}), 0);
  CHECK(g2.count == 4);
  CHECK(g2.sum == vec({1, 1, 1, 1}));
  CHECK(g2.lambda == std::vector<Rational>{1});
  CHECK(g2.inserted_flags.size() == 4);

  // gap 1: the unique cover is F_{i+1} itself, nothing to insert
  FlagOfFlats full = flag_of_flats(
      u, {ElementSet(), mask({0}), mask({0, 1}), u.ground_mask()});
  GeometricForm g3 = geometric_i1_form(u, full, 0);
  CHECK(g3.count == 1);
  CHECK(g3.sum == indicator(mask({0}), 4));
  CHECK(g3.inserted_flags.empty());

  // witness nonnegativity across a whole fan
  BergmanFan fan = build_fan(Matroid::uniform(3, 5));
  for (const FlagOfFlats& flag : fan.cones())
    for (int i = 0; i < flag.dim(); ++i) {
      GeometricForm g = geometric_i1_form(fan.matroid(), flag, i);
      REQUIRE(static_cast<int>(g.lambda.size()) == flag.dim());
      for (int j = 0; j + 1 < flag.dim(); ++j) CHECK(g.lambda[j] >= 0);
      RationalVector rebuilt(fan.matroid().n());
      for (int j = 0; j < flag.dim(); ++j)
        rebuilt += g.lambda[j] * indicator(flag.at(j + 1).set, fan.matroid().n());
      CHECK(rebuilt == g.sum);
      CHECK(static_cast<int>(g.inserted_flags.size()) ==
            (flag.at(i + 1).rank - flag.at(i).rank > 1 ? g.count : 0));
    }
}

TEST_CASE("full survey of U(3,4)") {
  BergmanFan fan = build_fan(Matroid::uniform(3, 4));
  BalancingReport report = verify_all(fan);
  CHECK(report.relations_checked == 69);
  CHECK(report.violations.empty());

  std::set<ConeType, ConeTypeLess> expected_nontrivial;
  expected_nontrivial.insert({0, 3});
  expected_nontrivial.insert({0, 1, 3});
  expected_nontrivial.insert({0, 2, 3});
  CHECK(report.nontrivial_types == expected_nontrivial);

  const auto& t013 = report.by_type.at({0, 1, 3});
  CHECK(t013.at({0, 1}) == 4);
  CHECK(t013.at({1, 1}) == 4);
  CHECK(t013.at({1, 2}) == 4);
  const auto& t03 = report.by_type.at({0, 3});
  CHECK(t03.at({0, 1}) == 1);
  CHECK(t03.at({0, 2}) == 1);
  CHECK(t03.at({0, 3}) == 1);

  long long total = 0;
  for (const auto& [type, by_ik] : report.by_type)
    for (const auto& [ik, count] : by_ik) total += count;
  CHECK(total == 69);
}

TEST_CASE("surveys of other small matroids are clean") {
  for (int n = 1; n <= 4; ++n) {
    BalancingReport r = verify_all(build_fan(Matroid::uniform(1, n)));
    CHECK(r.relations_checked == 1);
    CHECK(r.violations.empty());
    CHECK(r.nontrivial_types.empty());
  }
  // complete graph on four vertices
  Matroid k4 = Matroid::graphic(
      {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  BalancingReport r = verify_all(build_fan(k4));
  CHECK(r.relations_checked > 0);
  CHECK(r.violations.empty());

  BalancingReport loopy = verify_all(build_fan(Matroid::graphic({{"a", "a"}})));
  CHECK(loopy.relations_checked == 0);
  CHECK(loopy.violations.empty());
}

TEST_CASE("relation index preconditions") {
  Matroid u = Matroid::uniform(3, 4);
  FlagOfFlats flag = flag3(u, {0});
  CHECK_THROWS_AS(balancing_lhs(u, flag, -1, 1), error);
  CHECK_THROWS_AS(balancing_lhs(u, flag, 2, 1), error);
  CHECK_THROWS_AS(balancing_lhs(u, flag, 0, 0), error);
  CHECK_THROWS_AS(balancing_lhs(u, flag, 0, 2), error);  // gap at i=0 is 1
  CHECK_THROWS_AS(balancing_lhs(u, flag, 1, 3), error);  // gap at i=1 is 2
  CHECK(balancing_lhs(u, flag, 1, 2).lhs.is_zero());
}

TEST_CASE("formal combinations evaluate back to vectors") {
  Matroid u = Matroid::uniform(3, 4);
  BalancingRelation rel = balancing_lhs(u, flag3(u, {0}), 1, 2);
  FlatCombination c = formal_combination(rel);
  CHECK(evaluate(c, 4) == rel.lhs);
  CHECK(evaluate(c, 4).is_zero());
  CHECK(!c.empty());  // zero vector, nonzero ledger

  FlatCombination doubled = c;
  add_scaled(doubled, c, -1);
  CHECK(doubled.empty());
  add_scaled(doubled, c, Rational(1, 2));
  CHECK(evaluate(doubled, 4).is_zero());
}
