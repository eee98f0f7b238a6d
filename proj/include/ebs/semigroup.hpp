#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "ebs/element.hpp"

namespace ebs {

/// Semigroup product. Zero is absorbing; on pairs
///   (a,b)(c,d) = (a-b+c, d)   if b < c
///              = (a, d)       if b = c
///              = (a, d+b-c)   if b > c.
Element multiply(const Element& x, const Element& y);
Pair multiply(const Pair& x, const Pair& y);

inline Element operator*(const Element& x, const Element& y) {
  return multiply(x, y);
}

/// (a,b) -> (b,a); zero -> zero.
Element invert(const Element& x);
Pair invert(const Pair& x);

bool is_idempotent(const Element& x);

/// Natural partial order x <= y, coordinate form: zero is below everything,
/// (a,b) <= (x,y) iff a-b = x-y and x <= a. No pair is below zero.
bool leq(const Element& x, const Element& y);

/// Natural partial order, algebraic form: x = (x x^-1) y.
bool leq_algebraic(const Element& x, const Element& y);

/// Corner subsemigroup C[n] = {(a,b) : a >= n, b >= n} together with zero.
bool corner_contains(Int n, const Element& x);

/// Normal form q^i p^j of the bicyclic monoid (pq = 1), or its adjoined zero.
class BicyclicWord {
 public:
  BicyclicWord() = default;  // zero
  /// Throws DomainError when i or j is negative.
  BicyclicWord(Int i, Int j);

  static BicyclicWord zero() { return BicyclicWord{}; }
  static BicyclicWord identity() { return BicyclicWord{0, 0}; }

  bool is_zero() const { return !exps_.has_value(); }
  Int q_exp() const;
  Int p_exp() const;

  friend bool operator==(const BicyclicWord&, const BicyclicWord&) = default;

 private:
  struct Exps {
    Int i;
    Int j;
    friend bool operator==(const Exps&, const Exps&) = default;
  };
  std::optional<Exps> exps_;
};

std::string to_string(const BicyclicWord& w);

BicyclicWord bicyclic_multiply(const BicyclicWord& u, const BicyclicWord& v);

/// (a,b) -> q^(a-n) p^(b-n); zero -> zero. DomainError outside C[n].
BicyclicWord to_bicyclic(Int n, const Element& x);
/// Inverse of to_bicyclic.
Element from_bicyclic(Int n, const BicyclicWord& w);

/// (a,b) -> (a+k, b+k); zero -> zero.
Element shift_automorphism(Int k, const Element& x);

/// (a,b) -> a-b, the homomorphism onto (Z,+). DomainError on zero.
Int difference_hom(const Element& x);

/// difference_hom reduced into [0, m). DomainError on zero or m <= 0.
Int quotient_mod(Int m, const Element& x);

}  // namespace ebs
