#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so failures
// reproduce.

#include <random>
#include <vector>

#include "ebs/sequence.hpp"

namespace ebs::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234ULL);
  return gen;
}

inline Int uniform(Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng());
}

/// Valid x-type sequence: s_1 >= 2, gaps >= 2.
inline Sequence random_sequence(Int first_lo = 2, Int first_hi = 5) {
  Sequence s;
  const Int len = uniform(1, 3);
  Int v = uniform(first_lo, first_hi);
  for (Int i = 0; i < len; ++i) {
    s.prefix.push_back(v);
    v += uniform(2, 5);
  }
  s.step = uniform(2, 4);
  return s;
}

inline SequencePair random_sequence_pair() {
  return SequencePair(random_sequence(), random_sequence());
}

inline Pair random_pair(Int w) { return Pair{uniform(-w, w), uniform(-w, w)}; }

inline std::vector<Pair> random_apexes(Int w, Int max_k) {
  std::vector<Pair> out;
  const Int k = uniform(1, max_k);
  for (Int i = 0; i < k; ++i) out.push_back(random_pair(w));
  return out;
}

}  // namespace ebs::testing
