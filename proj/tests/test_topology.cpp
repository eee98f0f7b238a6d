#include <doctest.h>

#include <algorithm>

#include "ebs/oracle.hpp"
#include "ebs/topology.hpp"
#include "generators.hpp"

using namespace ebs;
using oracle::Window;

namespace {

SequencePair standard() { return SequencePair({{2}, 2}, {{3}, 2}); }

std::vector<Element> members_on(const NbhdDescriptor& u, Window win) {
  std::vector<Element> out;
  for (const auto& p : oracle::enumerate(win))
    if (nbhd_member(u, p)) out.push_back(p);
  return out;
}

NbhdDescriptor random_lcshift(const SequencePair& s, Int w, Int k) {
  return NbhdDescriptor::lcshift(s, testing::random_apexes(w, k));
}

}  // namespace

TEST_CASE("topology kind names") {
  for (auto k : {TopologyKind::Discrete, TopologyKind::LCShift, TopologyKind::MinShift,
                 TopologyKind::MinInverse})
    CHECK(parse_topology_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_topology_kind("lc"), ParseError);
}

TEST_CASE("neighbourhood membership examples") {
  CHECK_FALSE(nbhd_member(NbhdDescriptor::min_shift({{1, 1}}), Element{0, 0}));
  const auto mi = NbhdDescriptor::min_inverse(-1, 2);
  CHECK(nbhd_member(mi, Element{3, 4}));
  CHECK_FALSE(nbhd_member(mi, Element{0, 1}));
  const auto lc = NbhdDescriptor::lcshift(standard(), {{1, 1}});
  CHECK_FALSE(nbhd_member(lc, Element{-2, -2}));
  CHECK(nbhd_member(lc, Element{2, 2}));
  CHECK(nbhd_member(NbhdDescriptor::discrete(), Element::zero()));
  CHECK_FALSE(nbhd_member(NbhdDescriptor::discrete(), Element{0, 0}));
}

TEST_CASE("descriptor construction") {
  const auto u = NbhdDescriptor::min_shift({{2, 2}, {1, 3}, {2, 2}});
  CHECK(std::vector<Pair>(u.apexes().begin(), u.apexes().end()) == std::vector<Pair>{{1, 3}, {2, 2}});
  CHECK_THROWS_AS(NbhdDescriptor::min_shift({}), DomainError);
  CHECK_THROWS_AS(NbhdDescriptor::with_apexes(TopologySpec::min_inverse(), {{1, 1}}), DomainError);
  CHECK_THROWS_AS(u.threshold_a(), DomainError);
  CHECK(describe(NbhdDescriptor::min_inverse(-1, 2)) == "min_i a=-1 b=2");
}

TEST_CASE("zero lies in every basic set and membership matches the oracle") {
  oracle::Evaluator ev(Window{7});
  for (int t = 0; t < 40; ++t) {
    const SequencePair s = t % 4 == 0 ? standard() : testing::random_sequence_pair();
    const std::vector<NbhdDescriptor> us{
        random_lcshift(s, 5, 4), NbhdDescriptor::min_shift(testing::random_apexes(5, 4)),
        NbhdDescriptor::min_inverse(testing::uniform(-5, 5), testing::uniform(-5, 5))};
    for (const auto& u : us) {
      CHECK(nbhd_member(u, Element::zero()));
      CHECK(members_on(u, Window{7}) == ev.evaluate(u).members());
    }
  }
}

TEST_CASE("adding apexes never adds members") {
  for (int t = 0; t < 30; ++t) {
    const SequencePair s = testing::random_sequence_pair();
    auto apexes = testing::random_apexes(4, 3);
    const auto u = NbhdDescriptor::lcshift(s, apexes);
    const auto m = NbhdDescriptor::min_shift(apexes);
    apexes.push_back(testing::random_pair(4));
    const auto v = NbhdDescriptor::lcshift(s, apexes);
    const auto mv = NbhdDescriptor::min_shift(apexes);
    for (const auto& p : oracle::enumerate(Window{6})) {
      if (nbhd_member(v, p)) CHECK(nbhd_member(u, p));
      if (nbhd_member(mv, p)) CHECK(nbhd_member(m, p));
    }
  }
}

TEST_CASE("canonical forms denote the same set") {
  const auto u = NbhdDescriptor::lcshift(standard(), {{-2, -2}, {1, 1}, {0, 0}, {0, 2}, {-1, 1}});
  const auto c = u.canonical();
  CHECK(std::vector<Pair>(c.apexes().begin(), c.apexes().end()) == std::vector<Pair>{{0, 2}, {1, 1}});
  CHECK(NbhdDescriptor::lcshift(standard(), {{-1, -1}}).canonical().apexes()[0] == Pair{0, 0});
  for (int t = 0; t < 60; ++t) {
    const SequencePair s = testing::random_sequence_pair();
    const auto v = random_lcshift(s, 4, 5);
    const auto m = NbhdDescriptor::min_shift(testing::random_apexes(4, 5));
    CHECK(members_on(v, Window{6}) == members_on(v.canonical(), Window{6}));
    CHECK(members_on(m, Window{6}) == members_on(m.canonical(), Window{6}));
  }
}

TEST_CASE("nested differences") {
  const auto u = NbhdDescriptor::lcshift(standard(), {{1, 1}});
  CHECK(nbhd_difference(u, NbhdDescriptor::lcshift(standard(), {{1, 1}, {0, 2}})) ==
        std::vector<Element>{{-1, 1}, {0, 2}});
  CHECK(nbhd_difference(u, u).empty());
  CHECK(nbhd_difference(u, NbhdDescriptor::lcshift(standard(), {{1, 1}, {2, 2}})) ==
        std::vector<Element>{{2, 2}});
  CHECK_THROWS_AS(nbhd_difference(NbhdDescriptor::lcshift(standard(), {{2, 2}}), u), DomainError);
  CHECK_THROWS_AS(
      nbhd_difference(u, NbhdDescriptor::lcshift(SequencePair({{3}, 2}, {{3}, 2}), {{1, 1}})),
      DomainError);
  CHECK_THROWS_AS(nbhd_difference(NbhdDescriptor::min_shift({{1, 1}}), u), DomainError);
}

TEST_CASE("nested differences equal brute force") {
  for (int t = 0; t < 40; ++t) {
    const SequencePair s = testing::random_sequence_pair();
    auto apexes = testing::random_apexes(4, 3);
    const auto u = NbhdDescriptor::lcshift(s, apexes);
    for (const auto& p : testing::random_apexes(4, 3)) apexes.push_back(p);
    const auto v = NbhdDescriptor::lcshift(s, apexes);
    const auto diff = nbhd_difference(u, v);
    std::vector<Element> brute;
    for (const auto& p : oracle::enumerate(Window{20}))
      if (nbhd_member(u, p) && !nbhd_member(v, p)) brute.push_back(p);
    CHECK(diff == brute);
  }
}

TEST_CASE("corner tails are infinite for apex-list basics") {
  const auto u = NbhdDescriptor::lcshift(standard(), {{1, 1}});
  for (Int n = -3; n <= 3; ++n) {
    const auto tail = corner_tail(u, n);
    REQUIRE(std::holds_alternative<InfiniteRay>(tail));
    const auto ray = std::get<InfiniteRay>(tail);
    for (Int k = 0; k < 50; ++k) {
      const Pair p = ray.at(k);
      CHECK(nbhd_member(u, Element(p)));
      CHECK(std::min(p.a, p.b) < n);
    }
  }
  CHECK(std::holds_alternative<InfiniteRay>(corner_tail(NbhdDescriptor::min_shift({{4, 4}}), 0)));
  CHECK(std::get<InfiniteRay>(corner_tail(NbhdDescriptor::min_inverse(-2, 5), 0)) ==
        InfiniteRay{{-2, 5}, {0, 1}});
  CHECK(std::get<std::vector<Element>>(corner_tail(NbhdDescriptor::min_inverse(1, 1), 0)).empty());
  CHECK(std::get<std::vector<Element>>(corner_tail(NbhdDescriptor::discrete(), 0)).empty());
}

TEST_CASE("brute-force tail counts keep growing with the window") {
  const auto u = NbhdDescriptor::lcshift(standard(), {{1, 1}});
  std::vector<std::size_t> counts;
  for (Int w : {6, 8, 10, 12}) {
    std::size_t c = 0;
    for (const auto& p : members_on(u, Window{w}))
      if (p.is_pair() && std::min(p.a(), p.b()) < 1) ++c;
    counts.push_back(c);
  }
  CHECK(counts == std::vector<std::size_t>{96, 165, 253, 360});
}

TEST_CASE("corner complements") {
  const auto u = NbhdDescriptor::lcshift(standard(), {{1, 1}});
  CHECK(std::get<std::vector<Element>>(corner_complement(u, -2)) ==
        std::vector<Element>{{-2, -2}, {-2, -1}, {-2, 0}, {-1, -2}, {-1, -1}, {-1, 0}, {0, -1}, {0, 0}, {1, 1}});
  for (int t = 0; t < 30; ++t) {
    const SequencePair s = testing::random_sequence_pair();
    const auto v = random_lcshift(s, 3, 3);
    const auto m = NbhdDescriptor::min_shift(testing::random_apexes(3, 3));
    for (Int n = -3; n <= 3; ++n) {
      for (const auto& b : {v, m}) {
        std::vector<Element> brute;
        for (const auto& p : oracle::enumerate(Window{12}))
          if (p.is_pair() && p.a() >= n && p.b() >= n && !nbhd_member(b, p)) brute.push_back(p);
        CHECK(std::get<std::vector<Element>>(corner_complement(b, n)) == brute);
      }
    }
  }
  CHECK(std::holds_alternative<InfiniteRay>(corner_complement(NbhdDescriptor::min_inverse(2, 0), 0)));
  CHECK(std::get<std::vector<Element>>(corner_complement(NbhdDescriptor::min_inverse(0, -1), 0)).empty());
}

TEST_CASE("every non-zero point is separated from zero") {
  const std::vector<TopologySpec> specs{TopologySpec::lcshift(standard()), TopologySpec::min_shift(),
                                        TopologySpec::min_inverse(), TopologySpec::discrete()};
  for (const auto& spec : specs) {
    for (const auto& p : oracle::enumerate(Window{5})) {
      if (p.is_zero()) continue;
      CHECK_FALSE(nbhd_member(hausdorff_separator(spec, p.pair()), p));
    }
  }
}

TEST_CASE("comparisons at zero") {
  const auto lc = TopologySpec::lcshift(standard());
  const auto ms = TopologySpec::min_shift();
  const auto mi = TopologySpec::min_inverse();

  auto v = compare_at_zero(ms, lc, NbhdDescriptor::min_shift({{1, 1}, {0, 3}}), 3);
  REQUIRE(std::holds_alternative<ContainsWitness>(v));
  CHECK(std::get<ContainsWitness>(v).inner == NbhdDescriptor::lcshift(standard(), {{0, 3}, {1, 1}}));

  v = compare_at_zero(ms, mi, NbhdDescriptor::min_shift({{1, 1}}), 3);
  REQUIRE(std::holds_alternative<ContainsWitness>(v));
  CHECK(std::get<ContainsWitness>(v).inner == NbhdDescriptor::min_inverse(2, 2));

  v = compare_at_zero(ms, TopologySpec::discrete(), NbhdDescriptor::min_shift({{1, 1}}), 3);
  CHECK(std::holds_alternative<ContainsWitness>(v));

  const auto probe = NbhdDescriptor::min_inverse(0, 0);
  v = compare_at_zero(mi, lc, probe, 3);
  REQUIRE(std::holds_alternative<SeparatedBy>(v));
  const auto sep = std::get<SeparatedBy>(v);
  CHECK(sep.window == 3);
  CHECK_FALSE(nbhd_member(probe, sep.point));
  // The point survives every removed up-set with apex in the window, hence
  // every lcshift basic bounded by it.
  for (const auto& a : oracle::enumerate(Window{3})) {
    if (a.is_zero()) continue;
    CHECK(nbhd_member(NbhdDescriptor::lcshift(standard(), {a.pair()}), sep.point));
  }

  CHECK_THROWS_AS(compare_at_zero(mi, lc, NbhdDescriptor::min_shift({{1, 1}}), 3), DomainError);
}

TEST_CASE("witnessed containments hold pointwise") {
  const auto lc = TopologySpec::lcshift(standard());
  for (int t = 0; t < 40; ++t) {
    const auto probe = NbhdDescriptor::min_shift(testing::random_apexes(3, 3));
    for (const auto& fine : {lc, TopologySpec::min_inverse()}) {
      const auto v = compare_at_zero(TopologySpec::min_shift(), fine, probe, 3);
      REQUIRE(std::holds_alternative<ContainsWitness>(v));
      const auto& inner = std::get<ContainsWitness>(v).inner;
      for (const auto& p : oracle::enumerate(Window{9}))
        if (nbhd_member(inner, p)) CHECK(nbhd_member(probe, p));
    }
  }
}

TEST_CASE("distinctness certificates") {
  const SequencePair s2({{3}, 2}, {{3}, 2});
  const auto p = distinctness_certificate(standard(), s2, 10);
  REQUIRE(p.has_value());
  CHECK(*p == Element{-2, -8});
  CHECK(d_member(DSet(standard()), *p) != d_member(DSet(s2), *p));
  CHECK(d_member(DSet(standard()), Element{0, -2}) != d_member(DSet(s2), Element{0, -2}));
  CHECK_THROWS_AS(distinctness_certificate(standard(), standard(), 10), DomainError);
  CHECK_THROWS_AS(
      distinctness_certificate(standard(), SequencePair({{2, 4, 6}, 2}, {{3, 5}, 2}), 10),
      DomainError);
  // Equal up to index 40; differences sit far outside window 5.
  const SequencePair far1({{2}, 2}, {{3}, 2});
  std::vector<Int> prefix;
  for (Int i = 0; i < 40; ++i) prefix.push_back(2 + 2 * i);
  const SequencePair far2({prefix, 3}, {{3}, 2});
  CHECK_FALSE(distinctness_certificate(far1, far2, 5).has_value());
}
