#pragma once

#include <vector>

#include "ebs/element.hpp"

namespace ebs {

/// An eventually affine increasing integer sequence s_1, s_2, ...: the
/// explicit prefix, then s_{n+1} = s_n + step past the prefix.
struct Sequence {
  std::vector<Int> prefix;
  Int step = 2;

  /// s_n for n >= 1.
  Int at(Int n) const;

  /// The index n >= 1 with s_n <= v < s_{n+1}, or 0 when v < s_1.
  Int bracket(Int v) const;

  /// Same sequence with prefix entries implied by the step dropped.
  Sequence normalized() const;

  /// Semantic equality (equal as infinite sequences).
  bool same_as(const Sequence& other) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// The pair of sequences {x_n}, {y_n} parameterizing the set D. Invariants:
/// x_1 > 1, y_1 > 1, x_n+1 < x_{n+1} and 2 < y_n+1 < y_{n+1} for all n.
class SequencePair {
 public:
  /// Throws DomainError naming the violated constraint.
  SequencePair(Sequence x, Sequence y);

  const Sequence& x() const { return x_; }
  const Sequence& y() const { return y_; }

  /// x and y agree as sequences; D is then closed under inversion.
  bool symmetric() const { return x_.same_as(y_); }
  bool same_as(const SequencePair& o) const {
    return x_.same_as(o.x_) && y_.same_as(o.y_);
  }

  friend bool operator==(const SequencePair&, const SequencePair&) = default;

 private:
  Sequence x_;
  Sequence y_;
};

/// Throws DomainError with the violated constraint, e.g.
/// "x_n+1<x_{n+1} violated at n=1".
void validate_x_sequence(const Sequence& s);
void validate_y_sequence(const Sequence& s);

}  // namespace ebs
