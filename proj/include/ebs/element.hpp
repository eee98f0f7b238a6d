#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ebs/errors.hpp"

namespace ebs {

using Int = std::int64_t;

// Overflow is reported, never wrapped.
Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_neg(Int x);

/// A point (a,b) of Z x Z.
struct Pair {
  Int a = 0;
  Int b = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
  friend bool operator==(const Pair&, const Pair&) = default;

  /// a - b; constant along the diagonals that carry up-sets.
  Int diff() const { return checked_sub(a, b); }
};

/// An element of the extended bicyclic semigroup with adjoined zero:
/// either the zero or a pair of integers. Default-constructs to zero.
///
/// Ordering (for containers and enumeration): zero first, then pairs
/// lexicographically.
class Element {
 public:
  Element() = default;
  Element(Pair p) : pair_(p) {}  // NOLINT(google-explicit-constructor)
  Element(Int a, Int b) : pair_(Pair{a, b}) {}

  static Element zero() { return Element{}; }

  bool is_zero() const { return !pair_.has_value(); }
  bool is_pair() const { return pair_.has_value(); }

  /// Throws DomainError on zero.
  const Pair& pair() const;
  Int a() const { return pair().a; }
  Int b() const { return pair().b; }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& x, const Element& y);

 private:
  std::optional<Pair> pair_;
};

/// `0` or `(a,b)`.
std::string to_string(const Element& x);
std::string to_string(const Pair& p);
std::ostream& operator<<(std::ostream& os, const Element& x);
std::ostream& operator<<(std::ostream& os, const Pair& p);

/// Parses the element literal grammar: `0` for zero, `(a,b)` with optionally
/// signed decimal integers. Whitespace is insignificant inside parentheses.
Element parse_element(std::string_view text);

/// Comma-separated pair literals, e.g. `(1,1),(0,3)`. Zero is rejected.
std::vector<Pair> parse_pair_list(std::string_view text);

}  // namespace ebs
