#include "ebs/semigroup.hpp"

namespace ebs {

Pair multiply(const Pair& x, const Pair& y) {
  const auto [a, b] = x;
  const auto [c, d] = y;
  if (b < c) return Pair{checked_add(checked_sub(a, b), c), d};
  if (b == c) return Pair{a, d};
  return Pair{a, checked_sub(checked_add(d, b), c)};
}

Element multiply(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) return Element::zero();
  return multiply(x.pair(), y.pair());
}

Pair invert(const Pair& x) { return Pair{x.b, x.a}; }

Element invert(const Element& x) {
  return x.is_zero() ? x : Element(invert(x.pair()));
}

bool is_idempotent(const Element& x) { return x.is_zero() || x.a() == x.b(); }

bool leq(const Element& x, const Element& y) {
  if (x.is_zero()) return true;
  if (y.is_zero()) return false;
  return x.pair().diff() == y.pair().diff() && y.a() <= x.a();
}

bool leq_algebraic(const Element& x, const Element& y) {
  return x == multiply(multiply(x, invert(x)), y);
}

bool corner_contains(Int n, const Element& x) {
  return x.is_zero() || (x.a() >= n && x.b() >= n);
}

BicyclicWord::BicyclicWord(Int i, Int j) {
  if (i < 0 || j < 0) {
    throw DomainError("bicyclic exponents must be non-negative, got q^" +
                      std::to_string(i) + " p^" + std::to_string(j));
  }
  exps_ = Exps{i, j};
}

Int BicyclicWord::q_exp() const {
  if (!exps_) throw DomainError("zero has no exponents");
  return exps_->i;
}

Int BicyclicWord::p_exp() const {
  if (!exps_) throw DomainError("zero has no exponents");
  return exps_->j;
}

std::string to_string(const BicyclicWord& w) {
  if (w.is_zero()) return "0";
  return "q^" + std::to_string(w.q_exp()) + " p^" + std::to_string(w.p_exp());
}

BicyclicWord bicyclic_multiply(const BicyclicWord& u, const BicyclicWord& v) {
  if (u.is_zero() || v.is_zero()) return BicyclicWord::zero();
  const Int i = u.q_exp(), j = u.p_exp(), k = v.q_exp(), l = v.p_exp();
  // q^i p^j q^k p^l: the middle p^j q^k cancels min(j,k) pairs pq.
  if (j < k) return BicyclicWord{checked_add(checked_sub(i, j), k), l};
  if (j == k) return BicyclicWord{i, l};
  return BicyclicWord{i, checked_sub(checked_add(l, j), k)};
}

BicyclicWord to_bicyclic(Int n, const Element& x) {
  if (x.is_zero()) return BicyclicWord::zero();
  if (!corner_contains(n, x)) {
    throw DomainError(to_string(x) + " is outside the corner C[" + std::to_string(n) +
                      "]: requires a>=n and b>=n");
  }
  return BicyclicWord{checked_sub(x.a(), n), checked_sub(x.b(), n)};
}

Element from_bicyclic(Int n, const BicyclicWord& w) {
  if (w.is_zero()) return Element::zero();
  return Element{checked_add(w.q_exp(), n), checked_add(w.p_exp(), n)};
}

Element shift_automorphism(Int k, const Element& x) {
  if (x.is_zero()) return x;
  return Element{checked_add(x.a(), k), checked_add(x.b(), k)};
}

Int difference_hom(const Element& x) {
  if (x.is_zero()) throw DomainError("difference_hom is undefined at 0");
  return x.pair().diff();
}

Int quotient_mod(Int m, const Element& x) {
  if (m <= 0) throw DomainError("modulus must be positive, got " + std::to_string(m));
  const Int r = difference_hom(x) % m;
  return r < 0 ? r + m : r;
}

}  // namespace ebs
