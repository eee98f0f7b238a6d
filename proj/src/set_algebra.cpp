#include "ebs/set_algebra.hpp"

#include <algorithm>
#include <limits>

namespace ebs {

bool UpSet::contains(const Element& x) const {
  return x.is_pair() && x.pair().diff() == apex.diff() && x.a() <= apex.a;
}

bool upset_member(const UpSet& u, const Element& x) { return u.contains(x); }

bool DiagonalSegment::contains(const Element& p) const {
  return p.is_pair() && p.pair().diff() == diff && x_lo <= p.a() && p.a() <= x_hi;
}

std::vector<Element> DiagonalSegment::points() const {
  std::vector<Element> out;
  if (empty()) return out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Int x = x_lo; x <= x_hi; ++x) out.emplace_back(x, checked_sub(x, diff));
  return out;
}

bool QuadrantSet::contains(const Pair& p) const {
  return (!bounds_x() || p.a >= a_) && (!bounds_y() || p.b >= b_);
}

bool QuadrantSet::contains(const Element& x) const {
  return x.is_zero() || contains(x.pair());
}

DiagonalSegment upset_trace(const UpSet& u, const QuadrantSet& q) {
  const Int d = u.apex.diff();
  Int lo = std::numeric_limits<Int>::min();
  if (q.bounds_x()) lo = std::max(lo, q.a());
  if (q.bounds_y()) lo = std::max(lo, checked_add(q.b(), d));
  return DiagonalSegment{d, lo, u.apex.a};
}

Pair DSet::component_on_diagonal(Int d) const {
  if (d == 0) return Pair{0, 0};
  if (d > 0) {
    // A_0 for d < x_1, otherwise A_n^d with x_n <= d < x_{n+1}.
    const Int n = seqs_.x().bracket(d);
    return Pair{-n, checked_sub(-n, d)};
  }
  const Int m = checked_neg(d);
  const Int n = seqs_.y().bracket(m);
  return Pair{checked_sub(-n, m), -n};
}

bool DSet::contains(const Element& x) const {
  if (x.is_zero()) return false;
  return x.a() <= top_on_diagonal(x.pair().diff());
}

std::vector<UpSet> DSet::components_meeting(const QuadrantSet& q) const {
  // Generation n components have apex x <= -n and apex y <= -n.
  Int max_gen = std::numeric_limits<Int>::max();
  if (q.bounds_x()) max_gen = std::min(max_gen, checked_neg(q.a()));
  if (q.bounds_y()) max_gen = std::min(max_gen, checked_neg(q.b()));

  std::vector<UpSet> out;
  auto keep = [&](Pair apex) {
    if (q.contains(apex)) out.push_back(UpSet{apex});
  };
  if (max_gen >= 0) {
    keep({0, 0});
    for (Int i = 1; i < seqs_.x().at(1) && !(q.bounds_y() && -i < q.b()); ++i) keep({0, -i});
    for (Int j = 1; j < seqs_.y().at(1) && !(q.bounds_x() && -j < q.a()); ++j) keep({-j, 0});
  }
  for (Int n = 1; n <= max_gen; ++n) {
    // Apex x of A_n^d is -n; y decreases with i. Apex y of A_n^l is -n;
    // x decreases with j. Stop each range once the quadrant is left.
    const Int x_end = seqs_.x().at(n + 1);
    for (Int i = seqs_.x().at(n); i < x_end; ++i) {
      const Pair apex{-n, checked_sub(-n, i)};
      if (q.bounds_y() && apex.b < q.b()) break;
      keep(apex);
    }
    const Int y_end = seqs_.y().at(n + 1);
    for (Int j = seqs_.y().at(n); j < y_end; ++j) {
      const Pair apex{checked_sub(-n, j), -n};
      if (q.bounds_x() && apex.a < q.a()) break;
      keep(apex);
    }
  }
  std::sort(out.begin(), out.end(), [](const UpSet& l, const UpSet& r) { return l.apex < r.apex; });
  return out;
}

DiagonalSegment DSet::upset_minus(const UpSet& u) const {
  const auto [a, b] = u.apex;
  const Int d = u.apex.diff();
  if (contains(Element(u.apex))) return DiagonalSegment{d, a + 1, a};
  if (a == b) {
    // {(1,1), ..., (a,a)}
    return DiagonalSegment{d, 1, a};
  }
  if (a < b) {
    // y_i <= b-a < y_{i+1} gives {(k-b+a, k) : -i+1 <= k <= b}; b-a < y_1
    // gives k from 1.
    const Int i = seqs_.y().bracket(checked_sub(b, a));
    return DiagonalSegment{d, checked_add(checked_sub(1 - i, b), a), a};
  }
  // x_j <= a-b < x_{j+1} gives {(k, k-a+b) : -j+1 <= k <= a}; a-b < x_1
  // gives k from 1.
  const Int j = seqs_.x().bracket(d);
  return DiagonalSegment{d, 1 - j, a};
}

bool d_member(const DSet& d, const Element& x) { return d.contains(x); }

std::vector<Element> upset_minus_d(const DSet& d, const UpSet& u) {
  return d.upset_minus(u).points();
}

std::vector<UpSet> d_apexes_in_halfplane(const DSet& d, const QuadrantSet& q) {
  return d.components_meeting(q);
}

}  // namespace ebs
