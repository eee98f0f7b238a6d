#include "ebs/sequence.hpp"

#include <algorithm>
#include <string>

namespace ebs {

Int Sequence::at(Int n) const {
  if (n < 1) throw DomainError("sequence index must be >= 1, got " + std::to_string(n));
  const auto len = static_cast<Int>(prefix.size());
  if (n <= len) return prefix[static_cast<std::size_t>(n - 1)];
  Int extra = 0;
  if (__builtin_mul_overflow(n - len, step, &extra)) {
    throw OverflowError("sequence value s_" + std::to_string(n) + " overflows");
  }
  return checked_add(prefix.back(), extra);
}

Int Sequence::bracket(Int v) const {
  if (v < prefix.front()) return 0;
  if (v < prefix.back()) {
    auto it = std::upper_bound(prefix.begin(), prefix.end(), v);
    return static_cast<Int>(it - prefix.begin());
  }
  return static_cast<Int>(prefix.size()) + (v - prefix.back()) / step;
}

Sequence Sequence::normalized() const {
  Sequence s = *this;
  while (s.prefix.size() > 1 && s.prefix.back() - s.prefix[s.prefix.size() - 2] == s.step) {
    s.prefix.pop_back();
  }
  return s;
}

bool Sequence::same_as(const Sequence& other) const {
  return normalized() == other.normalized();
}

namespace {

void validate_common(const Sequence& s, char name) {
  if (s.prefix.empty()) {
    throw DomainError(std::string(1, name) + " prefix must be non-empty");
  }
  if (s.prefix.front() <= 1) {
    throw DomainError(std::string(1, name) + "_1>1 violated");
  }
}

}  // namespace

void validate_x_sequence(const Sequence& s) {
  validate_common(s, 'x');
  const std::size_t len = s.prefix.size();
  for (std::size_t n = 1; n <= len; ++n) {
    // n == len checks the first tail step.
    const Int cur = s.prefix[n - 1];
    const Int next = n < len ? s.prefix[n] : checked_add(cur, s.step);
    if (!(checked_add(cur, 1) < next)) {
      throw DomainError("x_n+1<x_{n+1} violated at n=" + std::to_string(n));
    }
  }
}

void validate_y_sequence(const Sequence& s) {
  validate_common(s, 'y');
  const std::size_t len = s.prefix.size();
  for (std::size_t n = 1; n <= len; ++n) {
    const Int cur = s.prefix[n - 1];
    const Int next = n < len ? s.prefix[n] : checked_add(cur, s.step);
    if (!(2 < checked_add(cur, 1) && checked_add(cur, 1) < next)) {
      throw DomainError("2<y_n+1<y_{n+1} violated at n=" + std::to_string(n));
    }
  }
}

SequencePair::SequencePair(Sequence x, Sequence y) : x_(std::move(x)), y_(std::move(y)) {
  validate_x_sequence(x_);
  validate_y_sequence(y_);
}

}  // namespace ebs
