#ifndef CHATELET_SURFACE_HPP
#define CHATELET_SURFACE_HPP

#include <set>

#include "chatelet/hilbert.hpp"

namespace chatelet {

// y^2 - a z^2 = P(x) with P separable of degree 4, optionally remembered as
// a product of two rational quadratics.
struct ChateletSurface {
  Rat a;
  Poly P;
  std::optional<std::pair<Poly, Poly>> factorization;
  // set when the surface came out of build_v0
  std::optional<std::pair<long, long>> v0_primes;

  std::string equation_str() const;
};

ChateletSurface make_surface(const Rat& a, const Poly& P,
                             std::optional<std::pair<Poly, Poly>> factorization = std::nullopt);

// Quaternion class (a, Q(x)) together with every quadratic representation
// known to define the same class; at any local point where two
// representations are both nonzero they give the same symbol.
struct BrauerClass {
  Rat a;
  std::vector<Poly> reps;
};

// Smallest p1 not excluded with p1 = 1 mod 8 and p1 split in Q(sqrt(d)),
// then the smallest p2 with (p2|p1) = -1. Scan bound guards the search.
std::pair<long, long> find_prime_pair(const QuadField& K,
                                      const std::set<long>& excluded = {},
                                      long scan_bound = 100000);

struct V0 {
  ChateletSurface surface;
  BrauerClass cls;
  long p1, p2;
};

// y^2 - p1 z^2 = (p2 x^2 + 1)((1 + p2/p1^2) x^2 + 1/p1^2).
// Requires p1 = 1 mod 8 and (p2|p1) = -1; violations are named.
V0 build_v0(long p1, long p2);

}  // namespace chatelet

#endif
