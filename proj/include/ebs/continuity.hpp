#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ebs/element.hpp"
#include "ebs/set_algebra.hpp"
#include "ebs/topology.hpp"

namespace ebs {

/// Solutions of w*(c,d) = (e,f) or (a,b)*w = (e,f): empty, one pair, or a
/// whole up-set whose apex is the least solution.
class SolutionSet {
 public:
  enum class Kind { Empty, Singleton, UpSetAll };

  static SolutionSet empty() { return SolutionSet{Kind::Empty, {}}; }
  static SolutionSet singleton(Pair p) { return SolutionSet{Kind::Singleton, p}; }
  static SolutionSet upset(Pair apex) { return SolutionSet{Kind::UpSetAll, apex}; }

  Kind kind() const { return kind_; }
  /// Least solution in the natural order, if any.
  std::optional<Pair> minimal() const;
  bool contains(const Element& w) const;

  /// Image under inversion.
  SolutionSet inverted() const;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

 private:
  SolutionSet(Kind k, Pair p) : kind_(k), value_(p) {}
  Kind kind_;
  Pair value_;
};

std::string to_string(const SolutionSet& s);

/// {w : w*right_factor = target}.
SolutionSet solve_right(const Pair& right_factor, const Pair& target);
/// {w : left_factor*w = target}, via inversion from solve_right.
SolutionSet solve_left(const Pair& left_factor, const Pair& target);
/// solve_left by its own case analysis; kept to cross-check the duality.
SolutionSet solve_left_direct(const Pair& left_factor, const Pair& target);

enum class Side { Left, Right };
std::string_view to_string(Side s);
Side parse_side(std::string_view s);

/// element*v for Left, v*element for Right.
Element translate(const Pair& element, const Element& v, Side side);

/// Evidence that translation by element is continuous at zero: the image of
/// V under translation lies in U.
struct ShiftWitness {
  Pair element;
  Side side = Side::Left;
  NbhdDescriptor U;
  NbhdDescriptor V;
  /// Removed up-sets of U meeting the image half-plane of the translation.
  std::vector<Pair> trace;
  /// Window on which the inclusion was checked exhaustively, if any.
  std::optional<Int> verified_window;

  friend bool operator==(const ShiftWitness&, const ShiftWitness&) = default;
};

/// Builds V from the least solutions for each trace apex. spec must be
/// lcshift or min_sh and match U.
ShiftWitness shift_witness(const TopologySpec& spec, const Pair& element, Side side,
                           const NbhdDescriptor& U);

/// The neighbourhood with every apex (or threshold pair) swapped. For
/// lcshift this equals the pointwise inverse only when x = y; otherwise
/// DomainError.
NbhdDescriptor inversion_image(const NbhdDescriptor& U);

/// A window point p where [p in U] differs from [p^-1 in swapped U], or
/// nullopt. Works for any lcshift/min_sh neighbourhood.
std::optional<Element> inversion_counterexample(const NbhdDescriptor& U, Int window);

/// Which idempotent bound the complement identity for the min_i base uses:
/// up(a-1,a-1), or the off-by-one up(a,a) used as a negative control.
enum class ComplementBound { Exact, Perturbed };

/// First window point where the complement of S(a,b) disagrees with
/// {p : p p^-1 in up(a-1,a-1)} + {p : p^-1 p in up(b-1,b-1)}.
/// Requires window > max(|a|,|b|) + 2.
std::optional<Element> min_i_complement_counterexample(
    Int a, Int b, Int window, ComplementBound bound = ComplementBound::Exact);

bool min_i_complement_check(Int a, Int b, Int window);

}  // namespace ebs
