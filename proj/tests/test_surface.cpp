#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/surface.hpp"
#include "oracles.hpp"

using namespace chatelet;

namespace {

// independent scan using only exhaustive-squares arithmetic
std::pair<long, long> prime_pair_brute(long d) {
  auto primes = oracles::primes_upto(5000);
  long p1 = 0;
  for (long p : primes) {
    if (p % 8 != 1) continue;
    long dm = ((d % p) + p) % p;
    if (dm == 0) continue;
    if (oracles::legendre_by_squares(dm, p) == 1) {
      p1 = p;
      break;
    }
  }
  REQUIRE(p1 != 0);
  for (long q : primes)
    if (oracles::legendre_by_squares(q % p1, p1) == -1) return {p1, q};
  REQUIRE(false);
  return {0, 0};
}

}  // namespace

TEST_CASE("prime pair search matches the independent scan") {
  CHECK(find_prime_pair(make_quad_field(3)) == std::make_pair(73L, 5L));
  CHECK(find_prime_pair(make_quad_field(2)) == std::make_pair(17L, 3L));
  CHECK(find_prime_pair(make_quad_field(5)) == std::make_pair(41L, 3L));
  CHECK(prime_pair_brute(2) == std::make_pair(17L, 3L));
  CHECK(prime_pair_brute(5) == std::make_pair(41L, 3L));
  CHECK(prime_pair_brute(3) == std::make_pair(73L, 5L));

  // determinism
  CHECK(find_prime_pair(make_quad_field(3)) == find_prime_pair(make_quad_field(3)));
}

TEST_CASE("prime pair search with exclusions") {
  QuadField K = make_quad_field(3);
  auto [p1, p2] = find_prime_pair(K, {73});
  CHECK(p1 != 73);
  CHECK(p1 % 8 == 1);
  CHECK(splitting_type(K, p1) == Splitting::Split);
  CHECK(jacobi_symbol(p2, p1) == -1);
  // still minimal: nothing between 73 and p1 qualifies
  for (long p = 74; p < p1; ++p)
    if (is_prime(p) && p % 8 == 1) CHECK(splitting_type(K, p) != Splitting::Split);
}

TEST_CASE("v0 surface construction") {
  V0 v = build_v0(73, 5);
  Poly q1{Rat(1), Rat(0), Rat(5)};
  Poly q2{make_rat(Int(1), Int(5329)), Rat(0), make_rat(Int(5334), Int(5329))};
  CHECK(v.surface.a == 73);
  CHECK(v.surface.P == q1 * q2);
  CHECK(v.surface.P.eval(Rat(0)) == make_rat(Int(1), Int(5329)));
  REQUIRE(v.surface.factorization.has_value());
  CHECK(v.surface.factorization->first == q1);
  CHECK(v.cls.reps.size() == 2);
  REQUIRE(v.surface.v0_primes.has_value());
  CHECK(v.surface.v0_primes->first == 73);

  V0 v17 = build_v0(17, 3);
  Poly q2b{make_rat(Int(1), Int(289)), Rat(0), make_rat(Int(292), Int(289))};
  CHECK(v17.surface.factorization->second == q2b);
}

TEST_CASE("v0 preconditions are named") {
  CHECK_THROWS_WITH_AS(build_v0(73, 3), "build_v0: (p2|p1) = -1 fails",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_v0(7, 3), "build_v0: p1 = 1 mod 8 fails",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_v0(74, 3), "build_v0: p1 is not prime", std::invalid_argument);
}

TEST_CASE("surface validation") {
  Poly sep{Rat(-73), Rat(0), Rat(74), Rat(0), Rat(-1)};
  CHECK_NOTHROW(make_surface(Rat(73), sep));
  Poly insep = Poly{Rat(-1), Rat(0), Rat(1)}.pow(2);
  CHECK_THROWS_AS(make_surface(Rat(73), insep), std::invalid_argument);
  CHECK_THROWS_AS(make_surface(Rat(0), sep), std::invalid_argument);
  CHECK_THROWS_AS(make_surface(Rat(73), Poly{Rat(1), Rat(1)}), std::invalid_argument);
  Poly q1{Rat(1), Rat(0), Rat(5)};
  CHECK_THROWS_AS(make_surface(Rat(73), sep, std::make_pair(q1, q1)), std::invalid_argument);
  CHECK(make_surface(Rat(73), sep).equation_str() ==
        "y^2 - 73*z^2 = -x^4 + 74*x^2 - 73");
}
