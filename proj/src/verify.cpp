#include "ebs/verify.hpp"

#include <algorithm>
#include <functional>

#include "ebs/continuity.hpp"
#include "ebs/oracle.hpp"
#include "ebs/semigroup.hpp"

namespace ebs {

std::vector<SequencePair> default_sequence_pairs() {
  return {
      SequencePair({{2}, 2}, {{3}, 2}),
      SequencePair({{2}, 2}, {{2}, 2}),
      SequencePair({{3, 7}, 3}, {{2, 5}, 4}),
  };
}

namespace {

using oracle::Window;

/// Runs body; a returned string is a failure detail.
CheckResult check(std::string name, const std::function<std::optional<std::string>()>& body) {
  try {
    if (auto failure = body()) return {std::move(name), false, *failure};
    return {std::move(name), true, ""};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::vector<Element> pairs_of(Window win) {
  auto all = oracle::enumerate(win);
  all.erase(all.begin());
  return all;
}

}  // namespace

std::vector<CheckResult> run_verification(Int window, const std::optional<TopologySpec>& topology) {
  if (window < 1) throw DomainError("window must be positive");
  const Window win{window};
  const Window small{std::min<Int>(window, 3)};
  const auto elems = oracle::enumerate(win);
  const auto pairs = pairs_of(win);
  std::vector<SequencePair> seqs;
  if (topology && topology->kind() == TopologyKind::LCShift) {
    seqs.push_back(topology->seqs());
  } else {
    seqs = default_sequence_pairs();
  }

  std::vector<CheckResult> out;

  out.push_back(check("associativity", [&]() -> std::optional<std::string> {
    const auto e = oracle::enumerate(Window{std::min<Int>(window, 4)});
    for (const auto& x : e)
      for (const auto& y : e)
        for (const auto& z : e)
          if ((x * y) * z != x * (y * z))
            return to_string(x) + "," + to_string(y) + "," + to_string(z);
    return std::nullopt;
  }));

  out.push_back(check("inverse axioms and uniqueness", [&]() -> std::optional<std::string> {
    for (const auto& x : elems) {
      const Element xi = invert(x);
      if (x * xi * x != x || xi * x * xi != xi) return to_string(x);
      for (const auto& w : elems) {
        if (w != xi && x * w * x == x && w * x * w == w) return "second inverse " + to_string(w);
      }
    }
    return std::nullopt;
  }));

  out.push_back(check("order coordinate form = algebraic form", [&]() -> std::optional<std::string> {
    for (const auto& x : elems)
      for (const auto& y : elems)
        if (leq(x, y) != leq_algebraic(x, y)) return to_string(x) + " <= " + to_string(y);
    return std::nullopt;
  }));

  out.push_back(check("corner isomorphism", [&]() -> std::optional<std::string> {
    for (Int n : {-3, 0, 2}) {
      for (const auto& x : elems) {
        if (!corner_contains(n, x)) continue;
        if (from_bicyclic(n, to_bicyclic(n, x)) != x) return "bijection at " + to_string(x);
        for (const auto& y : elems) {
          if (!corner_contains(n, y)) continue;
          if (to_bicyclic(n, x * y) != bicyclic_multiply(to_bicyclic(n, x), to_bicyclic(n, y)))
            return "n=" + std::to_string(n) + " " + to_string(x) + "*" + to_string(y);
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(check("difference homomorphism", [&]() -> std::optional<std::string> {
    for (const auto& x : pairs)
      for (const auto& y : pairs) {
        if (difference_hom(x * y) != difference_hom(x) + difference_hom(y))
          return to_string(x) + "*" + to_string(y);
        for (Int m : {1, 2, 3, 5})
          if (quotient_mod(m, x * y) != (quotient_mod(m, x) + quotient_mod(m, y)) % m)
            return "mod " + std::to_string(m);
      }
    return std::nullopt;
  }));

  out.push_back(check("solvers = brute force", [&]() -> std::optional<std::string> {
    const auto sp = pairs_of(small);
    for (const auto& f : sp)
      for (const auto& t : sp) {
        for (Side side : {Side::Left, Side::Right}) {
          const SolutionSet s = side == Side::Right ? solve_right(f.pair(), t.pair())
                                                    : solve_left(f.pair(), t.pair());
          std::vector<Element> sym;
          for (const auto& w : elems)
            if (s.contains(w)) sym.push_back(w);
          if (sym != oracle::brute_solutions(win, side, f.pair(), t.pair()))
            return std::string(to_string(side)) + " " + to_string(f) + " -> " + to_string(t);
        }
      }
    return std::nullopt;
  }));

  out.push_back(check("D membership = brute force", [&]() -> std::optional<std::string> {
    oracle::Evaluator ev(win);
    for (const auto& s : seqs) {
      const DSet d(s);
      const auto& ind = ev.d_set(s);
      for (const auto& p : elems)
        if (d.contains(p) != ind.contains(p)) return to_string(p);
    }
    return std::nullopt;
  }));

  out.push_back(check("up(a,b) \\ D = brute force", [&]() -> std::optional<std::string> {
    // D meets each diagonal in a down-ray, so agreement on a window reaching
    // one step below the symbolic answer covers the whole ray.
    for (const auto& s : seqs) {
      const DSet d(s);
      for (const auto& apex : pairs) {
        const auto sym = upset_minus_d(d, UpSet{apex.pair()});
        Int reach = window;
        for (const auto& p : sym) reach = std::max({reach, std::abs(p.a()), std::abs(p.b())});
        oracle::Evaluator ev(Window{reach + 1});
        const auto& dind = ev.d_set(s);
        oracle::Indicator up = ev.evaluate(UpSet{apex.pair()});
        std::vector<Element> brute;
        for (const auto& p : up.members())
          if (!dind.contains(p)) brute.push_back(p);
        if (sym != brute) return "apex " + to_string(apex);
      }
    }
    return std::nullopt;
  }));

  out.push_back(check("neighbourhood membership = brute force", [&]() -> std::optional<std::string> {
    oracle::Evaluator ev(win);
    std::vector<NbhdDescriptor> us{NbhdDescriptor::discrete(), NbhdDescriptor::min_inverse(-1, 2),
                                   NbhdDescriptor::min_shift({{1, 1}, {0, 3}})};
    for (const auto& s : seqs) us.push_back(NbhdDescriptor::lcshift(s, {{1, 1}, {2, -1}}));
    for (const auto& u : us) {
      const auto ind = ev.evaluate(u);
      for (const auto& p : elems)
        if (u.contains(p) != ind.contains(p)) return describe(u) + " at " + to_string(p);
    }
    return std::nullopt;
  }));

  out.push_back(check("shift witnesses sound", [&]() -> std::optional<std::string> {
    std::vector<TopologySpec> specs{TopologySpec::min_shift()};
    for (const auto& s : seqs) specs.push_back(TopologySpec::lcshift(s));
    for (const auto& spec : specs)
      for (const auto& apex : pairs_of(Window{std::min<Int>(window, 2)}))
        for (const auto& e : pairs_of(Window{std::min<Int>(window, 2)}))
          for (Side side : {Side::Left, Side::Right}) {
            const auto U = NbhdDescriptor::with_apexes(spec, {apex.pair()});
            const auto w = shift_witness(spec, e.pair(), side, U);
            if (auto bad = oracle::witness_counterexample(w, win))
              return describe(U) + " element " + to_string(e) + " v=" + to_string(*bad);
          }
    return std::nullopt;
  }));

  out.push_back(check("inversion image", [&]() -> std::optional<std::string> {
    std::vector<NbhdDescriptor> us{NbhdDescriptor::min_shift({{1, 3}, {2, 2}})};
    for (const auto& s : seqs)
      if (s.symmetric()) us.push_back(NbhdDescriptor::lcshift(s, {{0, 3}, {-1, 2}}));
    for (const auto& u : us)
      if (auto p = inversion_counterexample(u, window)) return describe(u) + " at " + to_string(*p);
    return std::nullopt;
  }));

  out.push_back(check("min_i complement identity", [&]() -> std::optional<std::string> {
    const Int w = std::max<Int>(window, 5);
    for (Int a = -2; a <= 2; ++a)
      for (Int b = -2; b <= 2; ++b)
        if (!min_i_complement_check(a, b, w)) return "a=" + std::to_string(a) + " b=" + std::to_string(b);
    return std::nullopt;
  }));

  return out;
}

}  // namespace ebs
