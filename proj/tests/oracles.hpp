// Independent oracles used by the unit tests and the acceptance suite.
// Everything here decides questions by enumeration or textbook recursions
// only; none of it calls the symbol formulas under test.
#ifndef CHATELET_TESTS_ORACLES_HPP
#define CHATELET_TESTS_ORACLES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "chatelet/arith.hpp"

namespace oracles {

using chatelet::Int;
using chatelet::Poly;
using chatelet::Rat;

// deterministic RNG for property tests
struct SplitMix {
  uint64_t s;
  explicit SplitMix(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

// Legendre symbol by exhaustive squares mod p.
inline int legendre_by_squares(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  for (long y = 1; y < p; ++y)
    if (y * y % p == a) return 1;
  return -1;
}

// all squares mod M as a bitset
inline std::vector<bool> squares_mod(long M) {
  std::vector<bool> sq(static_cast<size_t>(M), false);
  for (long t = 0; t < M; ++t) sq[static_cast<size_t>(t * t % M)] = true;
  return sq;
}

// Primitive solvability of x0^2 - a x1^2 - b x2^2 = 0 mod p^k by scanning the
// three affine charts (any primitive triple scales so that some coordinate is
// a unit, then to coordinate exactly 1). The squares table can be shared
// across calls with the same modulus.
inline bool conic_solvable_mod_with(long a, long b, long M, const std::vector<bool>& sq) {
  long am = ((a % M) + M) % M, bm = ((b % M) + M) % M;
  // x2 = 1: x0^2 = a x1^2 + b
  for (long x1 = 0; x1 < M; ++x1) {
    long t = x1 * x1 % M;
    if (sq[static_cast<size_t>((am * t + bm) % M)]) return true;
  }
  // x1 = 1: x0^2 = a + b x2^2
  for (long x2 = 0; x2 < M; ++x2) {
    long t = x2 * x2 % M;
    if (sq[static_cast<size_t>((bm * t + am) % M)]) return true;
  }
  // x0 = 1: a x1^2 + b x2^2 = 1
  std::vector<bool> bsq(static_cast<size_t>(M), false);
  for (long t = 0; t < M; ++t) bsq[static_cast<size_t>(bm * (t * t % M) % M)] = true;
  for (long x1 = 0; x1 < M; ++x1) {
    long t = am * (x1 * x1 % M) % M;
    if (bsq[static_cast<size_t>(((1 - t) % M + M) % M)]) return true;
  }
  return false;
}

inline bool conic_solvable_mod(long a, long b, long p, int k) {
  long M = 1;
  for (int i = 0; i < k; ++i) M *= p;
  std::vector<bool> sq = squares_mod(M);
  return conic_solvable_mod_with(a, b, M, sq);
}


// real solvability of x0^2 = a x1^2 + b x2^2 with (x1, x2) != (0, 0) scaling
inline bool conic_solvable_real(const Rat& a, const Rat& b) { return a > 0 || b > 0; }

// Resultant by the Euclidean recursion; independent of the Sylvester path.
inline Rat resultant_prs(const Poly& f, const Poly& g) {
  using chatelet::poly_divmod;
  using chatelet::rat_pow;
  if (f.deg() == 0) return rat_pow(f.lc(), g.deg());
  if (g.deg() == 0) return rat_pow(g.lc(), f.deg());
  Poly r = poly_divmod(f, g).second;
  if (r.is_zero()) return Rat(0);
  Rat res = rat_pow(g.lc(), f.deg() - r.deg()) * resultant_prs(g, r);
  if ((static_cast<long>(f.deg()) * g.deg()) % 2 != 0) res = -res;
  return res;
}

// Hensel-style brute force: an integer x is a Q_p square iff its valuation is
// even and y^2 = unit(x) mod p^k has a solution, k = 3 (odd p) / 5 (p = 2).
inline bool square_local_brute(long x, long p) {
  if (x == 0) return false;
  long v = 0;
  while (x % p == 0) x /= p, ++v;
  if (v % 2 != 0) return false;
  int k = p == 2 ? 5 : 3;
  long M = 1;
  for (int i = 0; i < k; ++i) M *= p;
  long um = ((x % M) + M) % M;
  for (long y = 0; y < M; ++y)
    if (y * y % M == um) return true;
  return false;
}

inline std::vector<long> primes_upto(long bound) {
  std::vector<bool> comp(static_cast<size_t>(bound) + 1, false);
  std::vector<long> ps;
  for (long i = 2; i <= bound; ++i) {
    if (comp[static_cast<size_t>(i)]) continue;
    ps.push_back(i);
    for (long j = 2 * i; j <= bound; j += i) comp[static_cast<size_t>(j)] = true;
  }
  return ps;
}

// random nonzero rational with numerator and denominator below the bound
inline Rat random_rat(SplitMix& rng, long bound) {
  long num = rng.range(-bound, bound);
  if (num == 0) num = 1;
  long den = rng.range(1, bound);
  return chatelet::make_rat(Int(num), Int(den));
}

}  // namespace oracles

#endif
