#include <doctest.h>

#include "ebs/oracle.hpp"
#include "ebs/semigroup.hpp"
#include "ebs/verify.hpp"

using namespace ebs;
using oracle::Window;

namespace {
SequencePair standard() { return SequencePair({{2}, 2}, {{3}, 2}); }
}  // namespace

TEST_CASE("window enumeration") {
  CHECK(oracle::enumerate(Window{1}).size() == 10);
  CHECK(oracle::enumerate(Window{4}).size() == 82);
  CHECK(oracle::enumerate(Window{0}) == std::vector<Element>{Element::zero(), Element{0, 0}});
  const auto e = oracle::enumerate(Window{2});
  CHECK(e.size() == Window{2}.size());
  CHECK(std::is_sorted(e.begin(), e.end()));
}

TEST_CASE("brute-force sets") {
  CHECK(oracle::brute_set(Window{2}, UpSet{{1, 1}}) ==
        std::vector<Element>{{-2, -2}, {-1, -1}, {0, 0}, {1, 1}});
  CHECK(oracle::brute_set(Window{1}, QuadrantSet::corner(0, 0)) ==
        std::vector<Element>{Element::zero(), {0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(oracle::brute_set(Window{1}, NbhdDescriptor::min_inverse(0, 0)) ==
        std::vector<Element>{Element::zero(), {0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(oracle::brute_set(Window{3}, oracle::DSetOf{standard()}) ==
        std::vector<Element>{{-3, -3}, {-3, -2}, {-3, -1}, {-2, -3}, {-2, -2}, {-2, -1}, {-2, 0},
                             {-1, -3}, {-1, -2}, {-1, -1}, {-1, 0}, {0, -1}, {0, 0}});
  CHECK(oracle::brute_set(Window{2}, NbhdDescriptor::discrete()) ==
        std::vector<Element>{Element::zero()});
}

TEST_CASE("indicator bounds") {
  oracle::Indicator ind(Window{2});
  CHECK_THROWS_AS(ind.contains(Element{3, 0}), DomainError);
  ind.mark_upset({5, 5}, true);
  CHECK(ind.members() == std::vector<Element>{{-2, -2}, {-1, -1}, {0, 0}, {1, 1}, {2, 2}});
  CHECK_FALSE(ind.ray_meets_window({-3, 0}));
  CHECK(ind.ray_meets_window({9, 7}));
}

TEST_CASE("brute-force solutions") {
  const auto r = oracle::brute_solutions(Window{6}, Side::Right, {5, 7}, {4, 7});
  std::vector<Element> diag;
  for (Int x = -6; x <= 4; ++x) diag.emplace_back(x, x + 1);
  CHECK(r == diag);
  CHECK(oracle::brute_solutions(Window{6}, Side::Right, {5, 7}, {4, 6}).empty());
  CHECK(oracle::brute_solutions(Window{6}, Side::Left, {2, 3}, {4, 6}) == std::vector<Element>{{5, 6}});
}

TEST_CASE("translation failures are reported") {
  // V = U does not work for the left shift by (0,-1): (0,-1)*(1,1) = (2,1) lies in up(2,1).
  const auto u = NbhdDescriptor::min_shift({{2, 1}});
  ShiftWitness w{{0, -1}, Side::Left, u, u, {}, std::nullopt};
  const auto bad = oracle::witness_counterexample(w, Window{4});
  REQUIRE(bad.has_value());
  CHECK(UpSet{{2, 1}}.contains(multiply(Element{0, -1}, *bad)));
}

TEST_CASE("verification suite passes") {
  for (const auto& c : run_verification(4)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  for (const auto& c : run_verification(3, TopologySpec::lcshift(SequencePair({{4}, 3}, {{2}, 5})))) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}
