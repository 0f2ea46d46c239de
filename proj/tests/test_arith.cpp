#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/finite_field.hpp"
#include "oracles.hpp"

using namespace chatelet;

TEST_CASE("rational construction and parsing") {
  CHECK(make_rat(Int(2), Int(4)) == make_rat(Int(1), Int(2)));
  CHECK(make_rat(Int(3), Int(-6)) == make_rat(Int(-1), Int(2)));
  CHECK(make_rat(Int(3), Int(-6)).get_den() == 2);  // denominator kept positive
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::invalid_argument);
  CHECK(parse_rat("5334/5329") == make_rat(Int(5334), Int(5329)));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/ 2"), std::invalid_argument);
  CHECK(rat_str(make_rat(Int(-5), Int(3))) == "-5/3");
  CHECK(rat_str(Rat(4)) == "4");
}

TEST_CASE("jacobi symbol against exhaustive squares") {
  CHECK(jacobi_symbol(1, 73) == 1);
  CHECK(jacobi_symbol(5, 73) == oracles::legendre_by_squares(5, 73));
  CHECK(jacobi_symbol(5, 73) == -1);
  CHECK(jacobi_symbol(2, 73) == 1);  // 73 = 1 mod 8
  CHECK(jacobi_symbol(2, 73) == oracles::legendre_by_squares(2, 73));
  CHECK_THROWS_AS(jacobi_symbol(3, 10), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_symbol(3, -7), std::invalid_argument);

  for (long p : oracles::primes_upto(200)) {
    if (p == 2) continue;
    for (long a = 0; a < p; ++a)
      CHECK(jacobi_symbol(a, p) == oracles::legendre_by_squares(a, p));
  }
}

TEST_CASE("jacobi symbol is completely multiplicative in a") {
  oracles::SplitMix rng(11);
  for (int i = 0; i < 300; ++i) {
    long n = 2 * rng.range(1, 400) + 1;
    long a = rng.range(-500, 500), b = rng.range(-500, 500);
    CHECK(jacobi_symbol(a, n) * jacobi_symbol(b, n) == jacobi_symbol(a * b, n));
  }
}

TEST_CASE("resultant examples") {
  Poly f{Rat(-1), Rat(0), Rat(1)};   // x^2 - 1
  Poly g{Rat(-73), Rat(0), Rat(1)};  // x^2 - 73
  CHECK(poly_resultant(f, g) == 5184);
  CHECK(oracles::resultant_prs(f, g) == 5184);
  Poly h{Rat(1), Rat(2), Rat(0), Rat(5)};
  CHECK(poly_resultant(h, h) == 0);
  CHECK(poly_resultant(Poly{Rat(-1), Rat(1)}, Poly{Rat(1), Rat(1)}) == 2);
  CHECK_THROWS_AS(poly_resultant(Poly(), f), std::invalid_argument);
}

TEST_CASE("resultant vanishes exactly on common factors") {
  oracles::SplitMix rng(12);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rat> fc, gc;
    for (int d = 0; d <= 4; ++d) fc.push_back(Rat(rng.range(-5, 5)));
    for (int d = 0; d <= 4; ++d) gc.push_back(Rat(rng.range(-5, 5)));
    Poly f(fc), g(gc);
    if (f.is_zero() || g.is_zero()) continue;
    bool common = poly_gcd(f, g).deg() >= 1;
    CHECK((poly_resultant(f, g) == 0) == common);
    CHECK(poly_resultant(f, g) == oracles::resultant_prs(f, g));
  }
}

TEST_CASE("discriminant convention") {
  oracles::SplitMix rng(13);
  for (int i = 0; i < 50; ++i) {
    Rat b(rng.range(-9, 9)), c(rng.range(-9, 9));
    Poly f{c, b, Rat(1)};
    CHECK(poly_discriminant(f) == b * b - 4 * c);
  }
  CHECK(poly_discriminant(Poly{Rat(-16), Rat(0), Rat(0), Rat(1)}) == -6912);
  // P_inf = (1-x^2)(x^2-73) is separable
  Poly p_inf = Poly{Rat(1), Rat(0), Rat(-1)} * Poly{Rat(-73), Rat(0), Rat(1)};
  Rat d = poly_discriminant(p_inf);
  CHECK(d != 0);
  Rat via_res = oracles::resultant_prs(p_inf, p_inf.derivative()) / p_inf.lc();
  CHECK(d == via_res);  // degree 4: (-1)^{4*3/2} = +1
  CHECK_THROWS_AS(poly_discriminant(Poly{Rat(1), Rat(1)}), std::invalid_argument);
}

TEST_CASE("factorization examples") {
  Poly x2m1{Rat(-1), Rat(0), Rat(1)};
  auto fac = poly_factor_rational(x2m1);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.content == 1);
  CHECK(fac.factors[0].first * fac.factors[1].first == x2m1);

  Poly q1{Rat(-26670), Rat(0), Rat(5329)};
  CHECK(poly_is_irreducible(q1));
  Poly q2{Rat(5329), Rat(0), Rat(8577816), Rat(0), Rat(27625536)};
  CHECK(poly_is_irreducible(q2));
  Poly cubic{Rat(48), Rat(48), Rat(12), Rat(1)};
  CHECK(poly_is_irreducible(cubic));

  std::vector<Rat> big(10, Rat(1));
  CHECK_THROWS_AS(poly_factor_rational(Poly(big)), std::domain_error);
  CHECK_THROWS_AS(poly_factor_rational(Poly()), std::invalid_argument);
}

TEST_CASE("factorization re-multiplies and factors have no rational roots") {
  oracles::SplitMix rng(14);
  std::vector<Poly> small = {
      Poly{Rat(1), Rat(1)},          Poly{Rat(-2), Rat(1)},
      Poly{Rat(1), Rat(0), Rat(1)},  Poly{Rat(-2), Rat(0), Rat(1)},
      Poly{Rat(1), Rat(1), Rat(1)},  Poly{Rat(3), Rat(0), Rat(0), Rat(1)},
      Poly{Rat(1), Rat(-1), Rat(0), Rat(0), Rat(1)}};
  for (int i = 0; i < 120; ++i) {
    Poly f = Poly::constant(Rat(rng.range(1, 4)));
    int budget = 8;
    while (budget > 0) {
      const Poly& pick =
          small[static_cast<size_t>(rng.range(0, static_cast<long>(small.size()) - 1))];
      if (pick.deg() > budget) break;
      f = f * pick;
      budget -= pick.deg();
      if (rng.range(0, 2) == 0) break;
    }
    auto fac = poly_factor_rational(f);
    Poly prod = Poly::constant(fac.content);
    for (auto& [h, m] : fac.factors) {
      prod = prod * h.pow(static_cast<unsigned>(m));
      if (h.deg() > 1) CHECK(poly_rational_roots(h).empty());
      CHECK(h.lc() > 0);
    }
    CHECK(prod == f);
  }
}

TEST_CASE("squarefree decomposition") {
  Poly f = Poly{Rat(-1), Rat(1)}.pow(3) * Poly{Rat(1), Rat(0), Rat(1)};
  auto parts = poly_squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == Poly{Rat(1), Rat(0), Rat(1)});
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == Poly{Rat(-1), Rat(1)});
  CHECK(parts[1].second == 3);
}

TEST_CASE("finite field squares against brute enumeration") {
  CHECK_FALSE(ff_is_square(make_fp(3), FFElem{2, 0}));
  CHECK(ff_is_square(make_fp2(5), ff_make(make_fp2(5), Int(3))));  // F_5* inside F_25 squares
  CHECK(ff_is_square(make_fp(7), FFElem{1, 0}));
  CHECK_THROWS_AS(ff_is_square(make_fp(5), FFElem{0, 0}), std::invalid_argument);

  for (long p : oracles::primes_upto(49)) {
    if (p == 2) {
      FiniteField F = make_fp(2);
      CHECK(ff_is_square(F, FFElem{1, 0}));
      continue;
    }
    FiniteField F = make_fp(p);
    std::set<long> sq;
    for (long y = 1; y < p; ++y) sq.insert(y * y % p);
    for (long x = 1; x < p; ++x)
      CHECK(ff_is_square(F, FFElem{x, 0}) == (sq.count(x) > 0));

    FiniteField F2 = make_fp2(p);
    std::set<std::pair<long, long>> sq2;
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        FFElem y2 = ff_mul(F2, FFElem{a, b}, FFElem{a, b});
        sq2.insert({y2.c0, y2.c1});
      }
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        CHECK(ff_is_square(F2, FFElem{a, b}) == (sq2.count({a, b}) > 0));
      }
  }
}

TEST_CASE("finite field arithmetic sanity") {
  FiniteField F = make_fp2(7);
  FFElem t{0, 1};
  CHECK(ff_mul(F, t, t) == FFElem{F.r, 0});
  oracles::SplitMix rng(15);
  for (int i = 0; i < 100; ++i) {
    FFElem a{rng.range(0, 6), rng.range(0, 6)};
    if (ff_is_zero(a)) continue;
    CHECK(ff_mul(F, a, ff_inv(F, a)) == FFElem{1, 0});
  }
  CHECK(sqrt_mod(2, 7) == 3);  // 3^2 = 2 mod 7, min root
  CHECK_THROWS_AS(sqrt_mod(3, 7), std::invalid_argument);
}

TEST_CASE("integer factorization and divisors") {
  auto f = factor_integer(Int(5329));
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == 73);
  CHECK(f[0].second == 2);
  auto d = divisors(Int(12));
  CHECK(d == std::vector<Int>{Int(1), Int(2), Int(3), Int(4), Int(6), Int(12)});
  CHECK(is_prime(Int(389017)) == false);  // 73^3
  CHECK(is_prime(73L));
}

TEST_CASE("poly evaluation, composition, printing") {
  Poly f{Rat(48), Rat(48), Rat(12), Rat(1)};
  Poly shift{Rat(4), Rat(1)};
  CHECK(shift.pow(3) - Poly::constant(Rat(16)) == f);
  CHECK(f.eval(Rat(-4)) == -16);  // (u+4)^3 - 16 at u = -4
  CHECK(Poly{Rat(0), Rat(1)}.compose(shift) == shift);
  CHECK(f.coeff(0) == 48);
  CHECK(Poly().deg() == -1);
  CHECK(f.str("u") == "u^3 + 12*u^2 + 48*u + 48");
}
