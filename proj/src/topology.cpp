#include "ebs/topology.hpp"

#include <algorithm>
#include <cstdlib>

namespace ebs {

std::string_view to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::Discrete: return "discrete";
    case TopologyKind::LCShift: return "lcshift";
    case TopologyKind::MinShift: return "min_sh";
    case TopologyKind::MinInverse: return "min_i";
  }
  return "?";
}

TopologyKind parse_topology_kind(std::string_view s) {
  if (s == "discrete") return TopologyKind::Discrete;
  if (s == "lcshift") return TopologyKind::LCShift;
  if (s == "min_sh") return TopologyKind::MinShift;
  if (s == "min_i") return TopologyKind::MinInverse;
  throw ParseError("unknown topology kind '" + std::string(s) +
                   "' (expected lcshift, min_sh, min_i or discrete)");
}

TopologySpec TopologySpec::lcshift(SequencePair seqs) {
  TopologySpec t{TopologyKind::LCShift};
  t.dset_.emplace(std::move(seqs));
  return t;
}

const DSet& TopologySpec::d_set() const {
  if (!dset_) {
    throw DomainError("topology " + std::string(to_string(kind_)) + " has no sequence pair");
  }
  return *dset_;
}

const SequencePair& TopologySpec::seqs() const { return d_set().seqs(); }

bool TopologySpec::same_as(const TopologySpec& o) const {
  if (kind_ != o.kind_) return false;
  return kind_ != TopologyKind::LCShift || seqs().same_as(o.seqs());
}

namespace {

std::vector<Pair> sorted_unique(std::vector<Pair> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool in_any_upset(std::span<const Pair> apexes, const Element& x) {
  return std::any_of(apexes.begin(), apexes.end(),
                     [&](const Pair& p) { return UpSet{p}.contains(x); });
}

}  // namespace

NbhdDescriptor::NbhdDescriptor(TopologySpec spec, std::vector<Pair> apexes, Int a, Int b)
    : spec_(std::move(spec)), apexes_(std::move(apexes)), a_(a), b_(b) {}

NbhdDescriptor NbhdDescriptor::discrete() {
  return NbhdDescriptor(TopologySpec::discrete(), {}, 0, 0);
}

NbhdDescriptor NbhdDescriptor::lcshift(SequencePair seqs, std::vector<Pair> apexes) {
  return with_apexes(TopologySpec::lcshift(std::move(seqs)), std::move(apexes));
}

NbhdDescriptor NbhdDescriptor::min_shift(std::vector<Pair> apexes) {
  return with_apexes(TopologySpec::min_shift(), std::move(apexes));
}

NbhdDescriptor NbhdDescriptor::min_inverse(Int a, Int b) {
  return NbhdDescriptor(TopologySpec::min_inverse(), {}, a, b);
}

NbhdDescriptor NbhdDescriptor::with_apexes(const TopologySpec& spec, std::vector<Pair> apexes) {
  if (!spec.uses_apexes()) {
    throw DomainError("topology " + std::string(to_string(spec.kind())) +
                      " has no apex-list neighbourhoods");
  }
  if (apexes.empty()) throw DomainError("a basic neighbourhood needs at least one apex");
  return NbhdDescriptor(spec, sorted_unique(std::move(apexes)), 0, 0);
}

Int NbhdDescriptor::threshold_a() const {
  if (kind() != TopologyKind::MinInverse) throw DomainError("not a min_i neighbourhood");
  return a_;
}

Int NbhdDescriptor::threshold_b() const {
  if (kind() != TopologyKind::MinInverse) throw DomainError("not a min_i neighbourhood");
  return b_;
}

bool NbhdDescriptor::contains(const Element& x) const {
  if (x.is_zero()) return true;
  switch (kind()) {
    case TopologyKind::Discrete: return false;
    case TopologyKind::MinInverse: return x.a() >= a_ && x.b() >= b_;
    case TopologyKind::MinShift: return !in_any_upset(apexes_, x);
    case TopologyKind::LCShift: return !spec_.d_set().contains(x) && !in_any_upset(apexes_, x);
  }
  return false;
}

NbhdDescriptor NbhdDescriptor::canonical() const {
  if (!spec_.uses_apexes()) return *this;
  std::vector<Pair> kept;
  for (const Pair& p : apexes_) {
    const bool in_d = kind() == TopologyKind::LCShift && spec_.d_set().contains(Element(p));
    const bool shadowed = std::any_of(apexes_.begin(), apexes_.end(), [&](const Pair& q) {
      return q != p && q.diff() == p.diff() && q.a > p.a;
    });
    if (!in_d && !shadowed) kept.push_back(p);
  }
  // Only LCShift can lose every apex; (0,0) always lies in D.
  if (kept.empty()) kept.push_back(Pair{0, 0});
  return NbhdDescriptor(spec_, std::move(kept), 0, 0);
}

std::string describe(const NbhdDescriptor& u) {
  std::string s(to_string(u.kind()));
  switch (u.kind()) {
    case TopologyKind::Discrete: return s + " {0}";
    case TopologyKind::MinInverse:
      return s + " a=" + std::to_string(u.threshold_a()) + " b=" + std::to_string(u.threshold_b());
    default: break;
  }
  s += " apexes ";
  for (std::size_t i = 0; i < u.apexes().size(); ++i) {
    if (i) s += ",";
    s += to_string(u.apexes()[i]);
  }
  return s;
}

bool nbhd_member(const NbhdDescriptor& u, const Element& x) { return u.contains(x); }

std::vector<Pair> removed_apexes_meeting(const NbhdDescriptor& u, const QuadrantSet& q) {
  if (!u.spec().uses_apexes()) {
    throw DomainError("removed up-sets are defined only for lcshift and min_sh");
  }
  std::vector<Pair> out;
  for (const Pair& p : u.apexes()) {
    if (q.contains(p)) out.push_back(p);
  }
  if (u.kind() == TopologyKind::LCShift) {
    for (const UpSet& c : u.spec().d_set().components_meeting(q)) out.push_back(c.apex);
  }
  return sorted_unique(std::move(out));
}

std::vector<Element> nbhd_difference(const NbhdDescriptor& u, const NbhdDescriptor& v) {
  if (u.kind() != TopologyKind::LCShift || v.kind() != TopologyKind::LCShift) {
    throw DomainError("nbhd_difference requires two lcshift neighbourhoods");
  }
  if (!u.spec().same_as(v.spec())) {
    throw DomainError("nbhd_difference requires the same sequence pair on both sides");
  }
  const auto va = v.apexes();
  for (const Pair& p : u.apexes()) {
    if (!std::binary_search(va.begin(), va.end(), p)) {
      throw DomainError("V is not structurally contained in U: apex " + to_string(p) +
                        " of U is missing from V");
    }
  }
  const DSet& d = u.spec().d_set();
  std::vector<Element> out;
  for (const Pair& p : va) {
    if (std::binary_search(u.apexes().begin(), u.apexes().end(), p)) continue;
    for (const Element& x : d.upset_minus(UpSet{p}).points()) {
      if (u.contains(x)) out.push_back(x);
    }
  }
  return sorted_unique(std::move(out));
}

Pair InfiniteRay::at(Int k) const {
  Int dx = 0, dy = 0;
  if (__builtin_mul_overflow(k, step.a, &dx) || __builtin_mul_overflow(k, step.b, &dy)) {
    throw OverflowError("ray index overflow");
  }
  return Pair{checked_add(start.a, dx), checked_add(start.b, dy)};
}

FiniteOrInfinite corner_tail(const NbhdDescriptor& u, Int n) {
  switch (u.kind()) {
    case TopologyKind::Discrete:
      return std::vector<Element>{};
    case TopologyKind::MinInverse: {
      const Int a = u.threshold_a(), b = u.threshold_b();
      if (a < n) return InfiniteRay{{a, std::max(b, n)}, {0, 1}};
      if (b < n) return InfiniteRay{{std::max(a, n), b}, {1, 0}};
      return std::vector<Element>{};
    }
    case TopologyKind::LCShift:
    case TopologyKind::MinShift: {
      // Points right of every apex and of D (x >= 1), below the corner.
      Int t = std::max<Int>(n, 1);
      for (const Pair& p : u.apexes()) t = std::max(t, checked_add(p.a, 1));
      return InfiniteRay{{t, checked_sub(n, 1)}, {0, -1}};
    }
  }
  return std::vector<Element>{};
}

FiniteOrInfinite corner_complement(const NbhdDescriptor& u, Int n) {
  switch (u.kind()) {
    case TopologyKind::Discrete:
      return InfiniteRay{{n, n}, {1, 1}};
    case TopologyKind::MinInverse: {
      const Int a = u.threshold_a(), b = u.threshold_b();
      if (a > n) return InfiniteRay{{n, n}, {0, 1}};
      if (b > n) return InfiniteRay{{n, n}, {1, 0}};
      return std::vector<Element>{};
    }
    case TopologyKind::LCShift:
    case TopologyKind::MinShift: {
      const QuadrantSet corner = QuadrantSet::corner(n, n);
      std::vector<Element> out;
      for (const Pair& p : removed_apexes_meeting(u, corner)) {
        for (const Element& x : upset_trace(UpSet{p}, corner).points()) out.push_back(x);
      }
      return sorted_unique(std::move(out));
    }
  }
  return std::vector<Element>{};
}

NbhdDescriptor hausdorff_separator(const TopologySpec& spec, const Pair& p) {
  switch (spec.kind()) {
    case TopologyKind::Discrete: return NbhdDescriptor::discrete();
    case TopologyKind::MinInverse:
      return NbhdDescriptor::min_inverse(checked_add(p.a, 1), checked_add(p.b, 1));
    default: return NbhdDescriptor::with_apexes(spec, {p});
  }
}

std::optional<bool> base_subset(const NbhdDescriptor& inner, const NbhdDescriptor& outer) {
  if (inner.kind() == TopologyKind::Discrete) return true;
  switch (outer.kind()) {
    case TopologyKind::Discrete:
      return false;
    case TopologyKind::MinInverse:
      // Apex-list basics contain (t, b-1) for every large t.
      if (inner.kind() != TopologyKind::MinInverse) return false;
      return inner.threshold_a() >= outer.threshold_a() &&
             inner.threshold_b() >= outer.threshold_b();
    case TopologyKind::MinShift:
    case TopologyKind::LCShift:
      break;
  }
  // The complement of inner meets each diagonal in a down-ray (or nothing),
  // so up(p) misses inner exactly when p does.
  for (const Pair& p : outer.apexes()) {
    if (inner.contains(Element(p))) return false;
  }
  if (outer.kind() == TopologyKind::MinShift) return true;
  switch (inner.kind()) {
    case TopologyKind::LCShift:
      if (inner.spec().same_as(outer.spec())) return true;
      return std::nullopt;
    case TopologyKind::MinShift:
      // D meets infinitely many diagonals, finitely many apexes cannot cover it.
      return false;
    case TopologyKind::MinInverse:
      return outer.spec()
          .d_set()
          .components_meeting(QuadrantSet::corner(inner.threshold_a(), inner.threshold_b()))
          .empty();
    default:
      return std::nullopt;
  }
}

bool in_every_bounded_basic(const TopologySpec& spec, const Element& p, Int window) {
  if (p.is_zero()) return true;
  const Int w = window;
  switch (spec.kind()) {
    case TopologyKind::Discrete: return false;
    case TopologyKind::MinInverse: return p.a() >= w && p.b() >= w;
    case TopologyKind::LCShift:
      if (spec.d_set().contains(p)) return false;
      [[fallthrough]];
    case TopologyKind::MinShift: {
      // Window points on p's diagonal have x in [d-w, d+w] & [-w, w]; none of
      // them may sit at or above p.
      const Int d = p.pair().diff();
      const Int lo = std::max(-w, checked_sub(d, w));
      const Int hi = std::min(w, checked_add(d, w));
      return lo > hi || hi < p.a();
    }
  }
  return false;
}

namespace {

Int param_magnitude(const NbhdDescriptor& u) {
  Int m = 0;
  if (u.kind() == TopologyKind::MinInverse) {
    m = std::max(std::abs(u.threshold_a()), std::abs(u.threshold_b()));
  }
  for (const Pair& p : u.apexes()) m = std::max({m, std::abs(p.a), std::abs(p.b)});
  return m;
}

/// Apex-list candidate removing the top window point of every diagonal that
/// meets the window; contained in every other candidate bounded by window.
NbhdDescriptor smallest_bounded_candidate(const TopologySpec& fine, Int w) {
  std::vector<Pair> apexes;
  for (Int d = -2 * w; d <= 2 * w; ++d) {
    const Int x = std::min(w, w + d);
    apexes.push_back(Pair{x, x - d});
  }
  return NbhdDescriptor::with_apexes(fine, std::move(apexes));
}

}  // namespace

ComparisonVerdict compare_at_zero(const TopologySpec& coarse, const TopologySpec& fine,
                                  const NbhdDescriptor& probe, Int window) {
  if (window < 1) throw DomainError("window must be positive");
  if (!probe.spec().same_as(coarse)) {
    throw DomainError("probe " + describe(probe) + " is not a basic neighbourhood of " +
                      std::string(to_string(coarse.kind())));
  }
  if (fine.kind() == TopologyKind::Discrete) return ContainsWitness{NbhdDescriptor::discrete()};
  if (fine.same_as(coarse)) return ContainsWitness{probe};
  if (coarse.kind() == TopologyKind::MinShift) {
    const auto apexes = probe.apexes();
    if (fine.kind() == TopologyKind::LCShift) {
      return ContainsWitness{NbhdDescriptor::with_apexes(fine, {apexes.begin(), apexes.end()})};
    }
    if (fine.kind() == TopologyKind::MinInverse) {
      Int a = apexes.front().a, b = apexes.front().b;
      for (const Pair& p : apexes) {
        a = std::max(a, p.a);
        b = std::max(b, p.b);
      }
      return ContainsWitness{NbhdDescriptor::min_inverse(checked_add(a, 1), checked_add(b, 1))};
    }
  }

  // Bounded candidate search, lexicographic.
  const Int w = window;
  std::vector<NbhdDescriptor> candidates;
  if (fine.kind() == TopologyKind::MinInverse) {
    for (Int a = -w; a <= w; ++a) {
      for (Int b = -w; b <= w; ++b) candidates.push_back(NbhdDescriptor::min_inverse(a, b));
    }
  } else {
    if (!probe.apexes().empty()) {
      candidates.push_back(
          NbhdDescriptor::with_apexes(fine, {probe.apexes().begin(), probe.apexes().end()}));
    }
    candidates.push_back(smallest_bounded_candidate(fine, w));
  }
  for (const NbhdDescriptor& c : candidates) {
    if (base_subset(c, probe) == std::optional<bool>(true)) return ContainsWitness{c};
  }

  // Obstruction: a point outside the probe inside every bounded candidate.
  const Int r = checked_add(2 * std::max(w, param_magnitude(probe)), 2);
  for (Int x = -r; x <= r; ++x) {
    for (Int y = -r; y <= r; ++y) {
      const Element p{x, y};
      if (!probe.contains(p) && in_every_bounded_basic(fine, p, w)) return SeparatedBy{p, w};
    }
  }
  return InconclusiveAtWindow{w};
}

std::optional<Element> distinctness_certificate(const SequencePair& s1, const SequencePair& s2,
                                                Int window) {
  if (s1.same_as(s2)) throw DomainError("distinctness_certificate requires s1 != s2");
  const DSet d1(s1), d2(s2);
  for (Int x = -window; x <= window; ++x) {
    for (Int y = -window; y <= window; ++y) {
      const Element p{x, y};
      if (d1.contains(p) != d2.contains(p)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace ebs
