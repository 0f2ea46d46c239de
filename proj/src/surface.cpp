#include "chatelet/surface.hpp"

namespace chatelet {

std::string ChateletSurface::equation_str() const {
  std::string rhs;
  if (factorization) {
    rhs = "(" + factorization->first.str() + ")(" + factorization->second.str() + ")";
  } else {
    rhs = P.str();
  }
  std::string as = rat_str(a);
  if (a.get_den() != 1 || a < 0) as = "(" + as + ")";
  return "y^2 - " + as + "*z^2 = " + rhs;
}

ChateletSurface make_surface(const Rat& a, const Poly& P,
                             std::optional<std::pair<Poly, Poly>> factorization) {
  if (a == 0) throw std::invalid_argument("make_surface: a = 0");
  if (P.deg() != 4) throw std::invalid_argument("make_surface: P must have degree 4");
  if (poly_discriminant(P) == 0)
    throw std::invalid_argument("make_surface: P is not separable");
  if (factorization && !(factorization->first * factorization->second == P))
    throw std::invalid_argument("make_surface: factorization does not multiply to P");
  return ChateletSurface{a, P, std::move(factorization), std::nullopt};
}

std::pair<long, long> find_prime_pair(const QuadField& K, const std::set<long>& excluded,
                                      long scan_bound) {
  long p1 = 0;
  for (long p = 17; p <= scan_bound; p += 8) {
    if (!is_prime(p) || excluded.count(p)) continue;
    if (splitting_type(K, p) == Splitting::Split) {
      p1 = p;
      break;
    }
  }
  if (p1 == 0)
    throw std::runtime_error("find_prime_pair: no p1 = 1 mod 8 splitting in Q(sqrt(" +
                             std::to_string(K.d) + ")) below " + std::to_string(scan_bound));
  for (long p = 2; p <= scan_bound; ++p) {
    if (!is_prime(p)) continue;
    if (jacobi_symbol(p, p1) == -1) return {p1, p};
  }
  throw std::runtime_error("find_prime_pair: no nonresidue p2 below scan bound");
}

V0 build_v0(long p1, long p2) {
  if (p1 < 2 || !is_prime(p1)) throw std::invalid_argument("build_v0: p1 is not prime");
  if (p2 < 2 || !is_prime(p2)) throw std::invalid_argument("build_v0: p2 is not prime");
  if (p1 % 8 != 1) throw std::invalid_argument("build_v0: p1 = 1 mod 8 fails");
  if (jacobi_symbol(p2, p1) != -1)
    throw std::invalid_argument("build_v0: (p2|p1) = -1 fails");
  Rat p1sq_inv = make_rat(Int(1), Int(p1) * Int(p1));
  Poly Q1{Rat(1), Rat(0), Rat(p2)};                          // p2 x^2 + 1
  Poly Q2{p1sq_inv, Rat(0), Rat(1) + Rat(p2) * p1sq_inv};    // (1 + p2/p1^2) x^2 + 1/p1^2
  ChateletSurface s = make_surface(Rat(p1), Q1 * Q2, std::make_pair(Q1, Q2));
  s.v0_primes = std::make_pair(p1, p2);
  BrauerClass cls{Rat(p1), {Q1, Q2}};
  return V0{std::move(s), std::move(cls), p1, p2};
}

}  // namespace chatelet
