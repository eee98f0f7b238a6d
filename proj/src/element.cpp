#include "ebs/element.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>

namespace ebs {

Int checked_add(Int x, Int y) {
  Int r = 0;
  if (__builtin_add_overflow(x, y, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(x) + " + " +
                        std::to_string(y));
  }
  return r;
}

Int checked_sub(Int x, Int y) {
  Int r = 0;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(x) + " - " +
                        std::to_string(y));
  }
  return r;
}

Int checked_neg(Int x) { return checked_sub(0, x); }

const Pair& Element::pair() const {
  if (!pair_) throw DomainError("expected a pair, got 0");
  return *pair_;
}

std::strong_ordering operator<=>(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) {
    return y.is_zero() <=> x.is_zero();
  }
  return *x.pair_ <=> *y.pair_;
}

std::string to_string(const Pair& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

std::string to_string(const Element& x) {
  return x.is_zero() ? std::string("0") : to_string(x.pair());
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view tok = s_.substr(start, pos_ - start);
    std::string_view digits = tok;
    bool neg = false;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
      neg = digits[0] == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty()) fail("expected an integer");
    // Parse the magnitude as unsigned so that INT64_MIN is accepted.
    std::uint64_t mag = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mag);
    (void)ptr;
    constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<Int>::max());
    if (ec != std::errc{} || mag > kMax + (neg ? 1 : 0)) {
      throw ParseError("integer out of 64-bit range: '" + std::string(tok) + "'");
    }
    if (neg) return mag == kMax + 1 ? std::numeric_limits<Int>::min() : -static_cast<Int>(mag);
    return static_cast<Int>(mag);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Pair parse_pair(Scanner& sc) {
  sc.expect('(');
  Int a = sc.integer();
  sc.expect(',');
  Int b = sc.integer();
  sc.expect(')');
  return Pair{a, b};
}

}  // namespace

Element parse_element(std::string_view text) {
  Scanner sc(text);
  sc.skip_ws();
  Element result;
  if (sc.peek() == '0') {
    sc.expect('0');
  } else if (sc.peek() == '(') {
    result = parse_pair(sc);
  } else {
    sc.fail("expected '0' or '(a,b)'");
  }
  sc.skip_ws();
  if (!sc.done()) sc.fail("unexpected trailing input");
  return result;
}

std::vector<Pair> parse_pair_list(std::string_view text) {
  Scanner sc(text);
  std::vector<Pair> out;
  sc.skip_ws();
  if (sc.done()) return out;
  while (true) {
    sc.skip_ws();
    if (sc.peek() != '(') sc.fail("expected '(a,b)' in apex list");
    out.push_back(parse_pair(sc));
    sc.skip_ws();
    if (sc.done()) break;
    sc.expect(',');
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const Pair& p) { return os << to_string(p); }

}  // namespace ebs
