#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ebs/element.hpp"
#include "ebs/sequence.hpp"
#include "ebs/set_algebra.hpp"

namespace ebs {

enum class TopologyKind { Discrete, LCShift, MinShift, MinInverse };

/// "discrete", "lcshift", "min_sh", "min_i".
std::string_view to_string(TopologyKind k);
TopologyKind parse_topology_kind(std::string_view s);

/// One of the topologies on the semigroup. Non-zero points are isolated in
/// all of them; they differ in the base at zero.
class TopologySpec {
 public:
  static TopologySpec discrete() { return TopologySpec{TopologyKind::Discrete}; }
  static TopologySpec lcshift(SequencePair seqs);
  static TopologySpec min_shift() { return TopologySpec{TopologyKind::MinShift}; }
  static TopologySpec min_inverse() { return TopologySpec{TopologyKind::MinInverse}; }

  TopologyKind kind() const { return kind_; }
  /// DomainError unless kind() is LCShift.
  const SequencePair& seqs() const;
  /// The set D of an LCShift topology.
  const DSet& d_set() const;

  bool uses_apexes() const {
    return kind_ == TopologyKind::LCShift || kind_ == TopologyKind::MinShift;
  }

  /// Semantic equality: LCShift specs compare their sequences as sequences.
  bool same_as(const TopologySpec& o) const;
  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;

 private:
  explicit TopologySpec(TopologyKind k) : kind_(k) {}
  TopologyKind kind_;
  std::optional<DSet> dset_;
};

/// A basic open neighbourhood of zero:
///   LCShift    C \ (D + up(a_1,b_1) + ... + up(a_k,b_k))
///   MinShift   C \ (up(a_1,b_1) + ... + up(a_k,b_k))
///   MinInverse {x >= a} & {y >= b}, with zero
///   Discrete   {0}
/// Apex lists are stored sorted and deduplicated, and are never empty.
class NbhdDescriptor {
 public:
  static NbhdDescriptor discrete();
  static NbhdDescriptor lcshift(SequencePair seqs, std::vector<Pair> apexes);
  static NbhdDescriptor min_shift(std::vector<Pair> apexes);
  static NbhdDescriptor min_inverse(Int a, Int b);
  /// For LCShift and MinShift specs.
  static NbhdDescriptor with_apexes(const TopologySpec& spec, std::vector<Pair> apexes);

  const TopologySpec& spec() const { return spec_; }
  TopologyKind kind() const { return spec_.kind(); }
  std::span<const Pair> apexes() const { return apexes_; }
  /// MinInverse thresholds; DomainError otherwise.
  Int threshold_a() const;
  Int threshold_b() const;

  bool contains(const Element& x) const;

  /// Drops apexes whose up-set is already removed (inside D or inside
  /// another listed up-set). Keeps at least one apex. Equal canonical forms
  /// denote equal sets.
  NbhdDescriptor canonical() const;

  friend bool operator==(const NbhdDescriptor&, const NbhdDescriptor&) = default;

 private:
  NbhdDescriptor(TopologySpec spec, std::vector<Pair> apexes, Int a, Int b);
  TopologySpec spec_;
  std::vector<Pair> apexes_;
  Int a_ = 0;
  Int b_ = 0;
};

std::string describe(const NbhdDescriptor& u);

bool nbhd_member(const NbhdDescriptor& u, const Element& x);

/// Up-sets removed from u (listed apexes, plus D components for LCShift)
/// whose apex lies in q. Sorted by apex, deduplicated.
std::vector<Pair> removed_apexes_meeting(const NbhdDescriptor& u, const QuadrantSet& q);

/// The finite set U \ V for nested LCShift basics over one SequencePair
/// (V's apexes include U's). Sorted.
std::vector<Element> nbhd_difference(const NbhdDescriptor& u, const NbhdDescriptor& v);

/// An infinite family {start + k*step : k >= 0}, every member certified to
/// lie in the set it is attached to.
struct InfiniteRay {
  Pair start;
  Pair step;

  Pair at(Int k) const;
  friend bool operator==(const InfiniteRay&, const InfiniteRay&) = default;
};

/// Either an exact finite set (sorted) or an infinite-ray certificate.
using FiniteOrInfinite = std::variant<std::vector<Element>, InfiniteRay>;

/// Members of u with some coordinate < n, i.e. u \ C[n].
FiniteOrInfinite corner_tail(const NbhdDescriptor& u, Int n);

/// Members of the corner C[n] missing from u, i.e. C[n] \ u.
FiniteOrInfinite corner_complement(const NbhdDescriptor& u, Int n);

/// A basic neighbourhood of zero in spec that excludes the non-zero point p.
NbhdDescriptor hausdorff_separator(const TopologySpec& spec, const Pair& p);

/// Exact base containment inner \subseteq outer, when decidable here
/// (everything except LCShift pairs over different sequences).
std::optional<bool> base_subset(const NbhdDescriptor& inner, const NbhdDescriptor& outer);

struct ContainsWitness {
  NbhdDescriptor inner;
};
/// point lies outside the probe and inside every fine basic set whose
/// parameters (apex coordinates, thresholds) are bounded by window.
struct SeparatedBy {
  Element point;
  Int window;
};
struct InconclusiveAtWindow {
  Int window;
};
using ComparisonVerdict = std::variant<ContainsWitness, SeparatedBy, InconclusiveAtWindow>;

/// Looks for a fine-topology basic neighbourhood inside probe, a basic
/// neighbourhood of the coarse topology.
ComparisonVerdict compare_at_zero(const TopologySpec& coarse, const TopologySpec& fine,
                                  const NbhdDescriptor& probe, Int window);

/// True when p lies in every basic set of spec with parameters bounded by
/// window.
bool in_every_bounded_basic(const TopologySpec& spec, const Element& p, Int window);

/// A window point whose D-membership differs between s1 and s2, scanned in
/// enumeration order; nullopt when none exists in the window.
std::optional<Element> distinctness_certificate(const SequencePair& s1, const SequencePair& s2,
                                                Int window);

}  // namespace ebs
