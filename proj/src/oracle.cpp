#include "ebs/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include "ebs/semigroup.hpp"

namespace ebs::oracle {

std::vector<Element> enumerate(Window win) {
  std::vector<Element> out;
  out.reserve(win.size());
  out.emplace_back();
  for (Int x = -win.w; x <= win.w; ++x) {
    for (Int y = -win.w; y <= win.w; ++y) out.emplace_back(x, y);
  }
  return out;
}

Indicator::Indicator(Window win)
    : win_(win), bits_(static_cast<std::size_t>((2 * win.w + 1) * (2 * win.w + 1)), 0) {}

std::size_t Indicator::index(const Pair& p) const {
  const Int side = 2 * win_.w + 1;
  return static_cast<std::size_t>((p.a + win_.w) * side + (p.b + win_.w));
}

bool Indicator::contains(const Element& p) const {
  if (!win_.contains(p)) {
    throw DomainError(to_string(p) + " lies outside oracle window " + std::to_string(win_.w));
  }
  return p.is_zero() ? zero_ : bits_[index(p.pair())] != 0;
}

void Indicator::set(const Element& p, bool value) {
  if (!win_.contains(p)) {
    throw DomainError(to_string(p) + " lies outside oracle window " + std::to_string(win_.w));
  }
  if (p.is_zero()) {
    zero_ = value;
  } else {
    bits_[index(p.pair())] = value ? 1 : 0;
  }
}

std::vector<Element> Indicator::members() const {
  std::vector<Element> out;
  for (const Element& p : enumerate(win_)) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

bool Indicator::ray_meets_window(const Pair& apex) const {
  const Int w = win_.w;
  const Int t = std::max<Int>({0, apex.a - w, apex.b - w});
  return apex.a - t >= -w && apex.b - t >= -w;
}

void Indicator::mark_upset(const Pair& apex, bool value) {
  // up(a,b) = {(a-t, b-t) : t >= 0}; skip straight to the window.
  const Int w = win_.w;
  Int t = std::max<Int>({0, apex.a - w, apex.b - w});
  for (;; ++t) {
    const Int x = apex.a - t, y = apex.b - t;
    if (x < -w || y < -w) break;
    bits_[index(Pair{x, y})] = value ? 1 : 0;
  }
}

const Indicator& Evaluator::d_set(const SequencePair& seqs) {
  for (const auto& [s, ind] : d_cache_) {
    if (s == seqs) return ind;
  }
  // Generation n components have apexes with x <= -n and y <= -n, and the
  // up-sets only descend, so generations n > w never reach the window.
  // Within a generation, a component on diagonal i meets the window only if
  // |i| <= 2w, which bounds the inner indices.
  const Int w = win_.w;
  const Int diag_cap = 2 * w + 1;
  Indicator ind(win_);
  const Sequence& xs = seqs.x();
  const Sequence& ys = seqs.y();

  ind.mark_upset({0, 0}, true);
  for (Int i = 1; i <= xs.at(1) - 1 && i <= diag_cap; ++i) ind.mark_upset({0, -i}, true);
  for (Int j = 1; j <= ys.at(1) - 1 && j <= diag_cap; ++j) ind.mark_upset({-j, 0}, true);
  for (Int n = 1; n <= w; ++n) {
    for (Int i = xs.at(n); i <= xs.at(n + 1) - 1 && i <= diag_cap; ++i) {
      ind.mark_upset({-n, -n - i}, true);
    }
    for (Int j = ys.at(n); j <= ys.at(n + 1) - 1 && j <= diag_cap; ++j) {
      ind.mark_upset({-n - j, -n}, true);
    }
  }
  assert(!ind.ray_meets_window({-(w + 1), -(w + 1) - xs.at(w + 1)}) &&
         !ind.ray_meets_window({-(w + 1) - ys.at(w + 1), -(w + 1)}));
  d_cache_.emplace_back(seqs, std::move(ind));
  return d_cache_.back().second;
}

Indicator Evaluator::evaluate(const SetKind& kind) {
  Indicator ind(win_);
  const Int w = win_.w;
  auto fill_all = [&](bool v) {
    for (const Element& p : enumerate(win_)) ind.set(p, v);
  };
  if (const auto* u = std::get_if<UpSet>(&kind)) {
    ind.mark_upset(u->apex, true);
  } else if (const auto* d = std::get_if<DSetOf>(&kind)) {
    ind = d_set(d->seqs);
  } else if (const auto* q = std::get_if<QuadrantSet>(&kind)) {
    ind.set(Element::zero(), true);
    for (Int x = -w; x <= w; ++x) {
      for (Int y = -w; y <= w; ++y) {
        const bool in_x = q->kind() == QuadrantSet::Kind::UpperHalf || x >= q->a();
        const bool in_y = q->kind() == QuadrantSet::Kind::RightHalf || y >= q->b();
        ind.set(Element{x, y}, in_x && in_y);
      }
    }
  } else {
    const auto& u = std::get<NbhdDescriptor>(kind);
    switch (u.kind()) {
      case TopologyKind::Discrete:
        ind.set(Element::zero(), true);
        break;
      case TopologyKind::MinInverse:
        ind = evaluate(QuadrantSet::corner(u.threshold_a(), u.threshold_b()));
        break;
      case TopologyKind::LCShift:
      case TopologyKind::MinShift:
        if (u.kind() == TopologyKind::LCShift) {
          ind = d_set(u.spec().seqs());
          for (const Element& p : enumerate(win_)) {
            if (p.is_pair()) ind.set(p, !ind.contains(p));
          }
        } else {
          fill_all(true);
        }
        ind.set(Element::zero(), true);
        for (const Pair& p : u.apexes()) ind.mark_upset(p, false);
        break;
    }
  }
  return ind;
}

std::vector<Element> brute_set(Window win, const SetKind& kind) {
  Evaluator ev(win);
  return ev.evaluate(kind).members();
}

std::vector<Element> brute_solutions(Window win, Side side, const Pair& fixed, const Pair& target) {
  std::vector<Element> out;
  const Element f(fixed), t(target);
  for (const Element& w : enumerate(win)) {
    const Element prod = side == Side::Right ? multiply(w, f) : multiply(f, w);
    if (prod == t) out.push_back(w);
  }
  return out;
}

Window image_window(Window win, const Pair& element) {
  // Products move a coordinate by at most w + |a| + |b|.
  return Window{checked_add(checked_add(2 * win.w, std::abs(element.a)), std::abs(element.b))};
}

std::optional<Element> translation_failure(const Pair& element, Side side, const Indicator& V,
                                           const Indicator& U) {
  const Element e(element);
  for (const Element& v : V.members()) {
    const Element img = side == Side::Left ? multiply(e, v) : multiply(v, e);
    if (!U.contains(img)) return v;
  }
  return std::nullopt;
}

std::optional<Element> witness_counterexample(const ShiftWitness& w, Window win) {
  Evaluator ev_v(win);
  Evaluator ev_u(image_window(win, w.element));
  return translation_failure(w.element, w.side, ev_v.evaluate(w.V), ev_u.evaluate(w.U));
}

}  // namespace ebs::oracle
