#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "ebs/continuity.hpp"
#include "ebs/element.hpp"
#include "ebs/sequence.hpp"
#include "ebs/set_algebra.hpp"
#include "ebs/topology.hpp"

/// Brute-force ground truth over finite windows. Sets are evaluated from
/// their defining displays point by point (up-sets by walking rays from the
/// apex, D by generating every component in range); nothing here calls the
/// membership or case-analysis code of the symbolic modules.
namespace ebs::oracle {

/// {(x,y) : |x| <= w, |y| <= w} plus zero.
struct Window {
  Int w = 0;

  std::size_t size() const { return static_cast<std::size_t>((2 * w + 1) * (2 * w + 1)) + 1; }
  bool contains(const Element& p) const {
    return p.is_zero() || (p.a() >= -w && p.a() <= w && p.b() >= -w && p.b() <= w);
  }
};

/// Zero first, then pairs lexicographically.
std::vector<Element> enumerate(Window win);

/// The D set of a SequencePair, as raw data (no symbolic membership).
struct DSetOf {
  SequencePair seqs;
};

using SetKind = std::variant<UpSet, DSetOf, QuadrantSet, NbhdDescriptor>;

/// A subset of a window as a bitmap.
class Indicator {
 public:
  explicit Indicator(Window win);

  Window window() const { return win_; }
  /// DomainError for points outside the window.
  bool contains(const Element& p) const;
  void set(const Element& p, bool value);
  /// Members in enumeration order.
  std::vector<Element> members() const;

  /// Marks the points of up(apex) inside the window, walking down the ray.
  void mark_upset(const Pair& apex, bool value);
  bool ray_meets_window(const Pair& apex) const;

 private:
  std::size_t index(const Pair& p) const;
  Window win_;
  bool zero_ = false;
  std::vector<char> bits_;
};

/// Evaluates sets on one window, caching D per sequence pair.
class Evaluator {
 public:
  explicit Evaluator(Window win) : win_(win) {}

  Window window() const { return win_; }
  const Indicator& d_set(const SequencePair& seqs);
  Indicator evaluate(const SetKind& kind);

 private:
  Window win_;
  std::vector<std::pair<SequencePair, Indicator>> d_cache_;
};

std::vector<Element> brute_set(Window win, const SetKind& kind);

/// All window w with w*fixed = target (Right) or fixed*w = target (Left).
std::vector<Element> brute_solutions(Window win, Side side, const Pair& fixed, const Pair& target);

/// First v in V with translate(element, v, side) outside U. V must be
/// evaluated on the checking window and U on a window holding every image.
std::optional<Element> translation_failure(const Pair& element, Side side, const Indicator& V,
                                           const Indicator& U);

/// Window needed to hold every translate of win by element.
Window image_window(Window win, const Pair& element);

/// Exhaustive check of a witness on win; nullopt when sound there.
std::optional<Element> witness_counterexample(const ShiftWitness& w, Window win);

}  // namespace ebs::oracle
