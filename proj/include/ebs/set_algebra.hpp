#pragma once

#include <vector>

#include "ebs/element.hpp"
#include "ebs/sequence.hpp"

namespace ebs {

/// The up-set of a pair in the natural order: the diagonal ray
/// {(x,y) : x-y = a-b, x <= a}. Never contains zero.
struct UpSet {
  Pair apex;

  bool contains(const Element& x) const;
  friend bool operator==(const UpSet&, const UpSet&) = default;
};

bool upset_member(const UpSet& u, const Element& x);

/// Finite diagonal piece {(x, x-diff) : x_lo <= x <= x_hi}; empty when
/// x_lo > x_hi.
struct DiagonalSegment {
  Int diff = 0;
  Int x_lo = 0;
  Int x_hi = -1;

  bool empty() const { return x_lo > x_hi; }
  Int size() const { return empty() ? 0 : x_hi - x_lo + 1; }
  bool contains(const Element& p) const;
  /// Points in increasing x order.
  std::vector<Element> points() const;

  friend bool operator==(const DiagonalSegment&, const DiagonalSegment&) = default;
};

/// Half-planes {x >= a}, {y >= b} and their intersection, each with zero.
class QuadrantSet {
 public:
  enum class Kind { RightHalf, UpperHalf, Corner };

  static QuadrantSet right_half(Int a) { return {Kind::RightHalf, a, 0}; }
  static QuadrantSet upper_half(Int b) { return {Kind::UpperHalf, 0, b}; }
  static QuadrantSet corner(Int a, Int b) { return {Kind::Corner, a, b}; }

  Kind kind() const { return kind_; }
  Int a() const { return a_; }
  Int b() const { return b_; }
  bool bounds_x() const { return kind_ != Kind::UpperHalf; }
  bool bounds_y() const { return kind_ != Kind::RightHalf; }

  bool contains(const Element& x) const;
  bool contains(const Pair& p) const;

 private:
  QuadrantSet(Kind k, Int a, Int b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  Int a_;
  Int b_;
};

/// Exact intersection of an up-set with a quadrant set.
DiagonalSegment upset_trace(const UpSet& u, const QuadrantSet& q);

/// The set D: a union of up-sets parameterized by a SequencePair,
///   A_0   = up(0,0) + up(0,-i), 1 <= i < x_1 + up(-j,0), 1 <= j < y_1
///   A_n^d = up(-n, -n-i),  x_n <= i < x_{n+1}
///   A_n^l = up(-n-j, -n),  y_n <= j < y_{n+1}
/// Each diagonal x-y = d carries exactly one component, so D meets it in a
/// single ray ending at top_on_diagonal(d).
class DSet {
 public:
  explicit DSet(SequencePair seqs) : seqs_(std::move(seqs)) {}

  const SequencePair& seqs() const { return seqs_; }

  /// Apex of the component lying on diagonal d.
  Pair component_on_diagonal(Int d) const;
  /// x coordinate of that apex: D meets the diagonal in {x <= top}.
  Int top_on_diagonal(Int d) const { return component_on_diagonal(d).a; }

  bool contains(const Element& x) const;

  /// Components whose trace on q is non-empty (apex inside q), sorted.
  std::vector<UpSet> components_meeting(const QuadrantSet& q) const;

  /// up(a,b) \ D, always finite, in increasing x order.
  DiagonalSegment upset_minus(const UpSet& u) const;

  friend bool operator==(const DSet&, const DSet&) = default;

 private:
  SequencePair seqs_;
};

bool d_member(const DSet& d, const Element& x);
std::vector<Element> upset_minus_d(const DSet& d, const UpSet& u);
std::vector<UpSet> d_apexes_in_halfplane(const DSet& d, const QuadrantSet& q);

}  // namespace ebs
