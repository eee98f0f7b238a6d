#include "ebs/continuity.hpp"

#include <algorithm>
#include <cstdlib>

#include "ebs/semigroup.hpp"

namespace ebs {

std::optional<Pair> SolutionSet::minimal() const {
  if (kind_ == Kind::Empty) return std::nullopt;
  return value_;
}

bool SolutionSet::contains(const Element& w) const {
  switch (kind_) {
    case Kind::Empty: return false;
    case Kind::Singleton: return w == Element(value_);
    case Kind::UpSetAll: return UpSet{value_}.contains(w);
  }
  return false;
}

SolutionSet SolutionSet::inverted() const { return SolutionSet{kind_, invert(value_)}; }

std::string to_string(const SolutionSet& s) {
  switch (s.kind()) {
    case SolutionSet::Kind::Empty: return "empty";
    case SolutionSet::Kind::Singleton: return "singleton " + to_string(*s.minimal());
    case SolutionSet::Kind::UpSetAll: return "upset " + to_string(*s.minimal());
  }
  return "?";
}

SolutionSet solve_right(const Pair& right_factor, const Pair& target) {
  const auto [c, d] = right_factor;
  const auto [e, f] = target;
  if (f == d) return SolutionSet::upset({e, c});
  if (f > d) return SolutionSet::singleton({e, checked_sub(checked_add(c, f), d)});
  return SolutionSet::empty();
}

SolutionSet solve_left(const Pair& left_factor, const Pair& target) {
  // (a,b)w = t  <=>  w^-1 (b,a) = t^-1
  return solve_right(invert(left_factor), invert(target)).inverted();
}

SolutionSet solve_left_direct(const Pair& left_factor, const Pair& target) {
  const auto [a, b] = left_factor;
  const auto [e, f] = target;
  if (e == a) return SolutionSet::upset({b, f});
  if (e > a) return SolutionSet::singleton({checked_sub(checked_add(b, e), a), f});
  return SolutionSet::empty();
}

std::string_view to_string(Side s) { return s == Side::Left ? "left" : "right"; }

Side parse_side(std::string_view s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw ParseError("side must be 'left' or 'right', got '" + std::string(s) + "'");
}

Element translate(const Pair& element, const Element& v, Side side) {
  return side == Side::Left ? multiply(Element(element), v) : multiply(v, Element(element));
}

ShiftWitness shift_witness(const TopologySpec& spec, const Pair& element, Side side,
                           const NbhdDescriptor& U) {
  if (!spec.uses_apexes()) {
    throw DomainError("shift witnesses are built for lcshift and min_sh only, got " +
                      std::string(to_string(spec.kind())));
  }
  if (!U.spec().same_as(spec)) {
    throw DomainError("U is not a basic neighbourhood of the given topology");
  }
  // element*C = {x >= a} and C*element = {y >= b}; only removed up-sets
  // meeting that half-plane constrain V.
  const QuadrantSet image = side == Side::Left ? QuadrantSet::right_half(element.a)
                                               : QuadrantSet::upper_half(element.b);
  ShiftWitness w{element, side, U, U, removed_apexes_meeting(U, image), std::nullopt};

  std::vector<Pair> apexes;
  for (const Pair& t : w.trace) {
    const SolutionSet sol = side == Side::Left ? solve_left(element, t) : solve_right(element, t);
    if (auto m = sol.minimal()) apexes.push_back(*m);
  }
  if (apexes.empty()) {
    apexes.push_back(side == Side::Left ? Pair{element.b, element.b}
                                        : Pair{element.a, element.a});
  }
  w.V = NbhdDescriptor::with_apexes(U.spec(), std::move(apexes));
  return w;
}

namespace {

NbhdDescriptor swapped(const NbhdDescriptor& U) {
  switch (U.kind()) {
    case TopologyKind::Discrete: return U;
    case TopologyKind::MinInverse:
      return NbhdDescriptor::min_inverse(U.threshold_b(), U.threshold_a());
    default: break;
  }
  std::vector<Pair> apexes;
  for (const Pair& p : U.apexes()) apexes.push_back(invert(p));
  return NbhdDescriptor::with_apexes(U.spec(), std::move(apexes));
}

}  // namespace

NbhdDescriptor inversion_image(const NbhdDescriptor& U) {
  if (U.kind() == TopologyKind::LCShift && !U.spec().seqs().symmetric()) {
    throw DomainError("inversion_image requires x = y for lcshift: D is not inversion-symmetric");
  }
  return swapped(U);
}

std::optional<Element> inversion_counterexample(const NbhdDescriptor& U, Int window) {
  const NbhdDescriptor S = swapped(U);
  for (Int x = -window; x <= window; ++x) {
    for (Int y = -window; y <= window; ++y) {
      const Element p{x, y};
      if (U.contains(p) != S.contains(invert(p))) return p;
    }
  }
  return std::nullopt;
}

std::optional<Element> min_i_complement_counterexample(Int a, Int b, Int window,
                                                       ComplementBound bound) {
  if (window <= std::max(std::abs(a), std::abs(b)) + 2) {
    throw DomainError("window must exceed max(|a|,|b|)+2");
  }
  const Int shift = bound == ComplementBound::Exact ? 1 : 0;
  const UpSet left_idem{{a - shift, a - shift}};
  const UpSet right_idem{{b - shift, b - shift}};
  const NbhdDescriptor S = NbhdDescriptor::min_inverse(a, b);

  std::vector<Element> points{Element::zero()};
  for (Int x = -window; x <= window; ++x) {
    for (Int y = -window; y <= window; ++y) points.emplace_back(x, y);
  }
  for (const Element& p : points) {
    const bool in_complement = !S.contains(p);
    const bool in_union = left_idem.contains(multiply(p, invert(p))) ||
                          right_idem.contains(multiply(invert(p), p));
    if (in_complement != in_union) return p;
  }
  return std::nullopt;
}

bool min_i_complement_check(Int a, Int b, Int window) {
  return !min_i_complement_counterexample(a, b, window).has_value();
}

}  // namespace ebs
