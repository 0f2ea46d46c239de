#include "chatelet/hilbert.hpp"

#include <algorithm>
#include <set>

namespace chatelet {

namespace {

int legendre_rat(const Rat& u, long p) {
  // (num/den | p) for a p-unit u; (den^-1 | p) = (den | p).
  long n = mpz_fdiv_ui(u.get_num().get_mpz_t(), p);
  long d = mpz_fdiv_ui(u.get_den().get_mpz_t(), p);
  return legendre_mod(n, p) * legendre_mod(d, p);
}

// u mod 8 for a 2-adic unit u = m/n: n^-1 = n mod 8.
long unit_mod8(const Rat& u) {
  long m = mpz_fdiv_ui(u.get_num().get_mpz_t(), 8);
  long n = mpz_fdiv_ui(u.get_den().get_mpz_t(), 8);
  return (m * n) % 8;
}

int eps2(const Rat& u) { return unit_mod8(u) % 4 == 3 ? 1 : 0; }
int omega2(const Rat& u) {
  long m = unit_mod8(u);
  return (m == 3 || m == 5) ? 1 : 0;
}

}  // namespace

int hilbert_q(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_q: zero argument");
  if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
  long p = v.p;
  long alpha = padic_valuation(a, p), beta = padic_valuation(b, p);
  Rat u = padic_unit_part(a, p), w = padic_unit_part(b, p);
  if (p == 2) {
    long e = static_cast<long>(eps2(u)) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return (e % 2 != 0) ? -1 : 1;
  }
  int s = 1;
  if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) s = -s;
  if (beta % 2 != 0) s *= legendre_rat(u, p);
  if (alpha % 2 != 0) s *= legendre_rat(w, p);
  return s;
}

int hilbert_tame_ext(const ExtElem& a, const ExtElem& b, const ExtPlace& w) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("hilbert_tame_ext: zero argument");
  if (w.is_archimedean() || w.p == 2)
    throw std::invalid_argument("hilbert_tame_ext: place must have odd residue characteristic");
  long alpha = ext_valuation(a, w), beta = ext_valuation(b, w);
  ExtElem c = ext_mul(ext_pow(a, beta), ext_pow(b, -alpha));
  if ((alpha % 2 != 0) && (beta % 2 != 0))
    c = ext_mul(ext_from_rat(a.field, Rat(-1)), c);
  auto [F, rho] = ext_residue(c, w);
  return ff_is_square(F, rho) ? 1 : -1;
}

ProductFormulaResult product_formula_check(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("product_formula_check: zero argument");
  std::set<long> primes{2};
  for (const Int& n : {Int(a.get_num()), Int(a.get_den()), Int(b.get_num()), Int(b.get_den())})
    for (auto& [p, e] : factor_integer(n))
      if (p.fits_slong_p()) primes.insert(p.get_si());
  ProductFormulaResult r;
  int prod = hilbert_q(a, b, Place::real());
  r.symbols.emplace_back(Place::real(), prod);
  for (long p : primes) {
    int s = hilbert_q(a, b, Place::finite(p));
    r.symbols.emplace_back(Place::finite(p), s);
    prod *= s;
  }
  r.holds = (prod == 1);
  return r;
}

// ---------------------------------------------------------------------------
// Norm witnesses.

namespace {

// y with v_p(y^2 - val) >= target; val has even valuation and residue unit.
Rat approx_sqrt(const Rat& val, long p, long target) {
  long v = padic_valuation(val, p);
  Rat u = padic_unit_part(val, p);
  unsigned long prec = static_cast<unsigned long>(std::max(target - v + 4, 4L));
  Int nd = u.get_num() * u.get_den();
  Int pk = int_pow(Int(p), prec);
  Int s = hensel_sqrt(((nd % pk) + pk) % pk, p, prec);
  Rat y = make_rat(s, Int(u.get_den())) * rat_pow(Rat(p), v / 2);
  return y;
}

}  // namespace

std::optional<std::pair<Rat, Rat>> norm_witness_mod(const Rat& a, const Rat& N,
                                                    long p, long k) {
  if (N == 0) throw std::invalid_argument("norm_witness_mod: N = 0");
  if (k < 1) throw std::invalid_argument("norm_witness_mod: k < 1");
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("norm_witness_mod: p must be an odd prime");

  if (a == 0) {
    if (!is_square_local(N, Place::finite(p))) return std::nullopt;
    return std::make_pair(approx_sqrt(N, p, k), Rat(0));
  }
  if (hilbert_q(a, N, Place::finite(p)) != 1) return std::nullopt;

  auto verify = [&](const Rat& y, const Rat& z) -> std::optional<std::pair<Rat, Rat>> {
    Rat resid = y * y - a * z * z - N;
    if (resid != 0 && padic_valuation(resid, p) < k)
      throw std::logic_error("norm_witness_mod: lift below requested precision");
    return std::make_pair(y, z);
  };

  // Scale so both reduced parameters have valuation 0 or 1:
  // y = p^{mN} y', z = p^{mN - ma} z' turns y'^2 - a' z'^2 = N' back into
  // y^2 - a z^2 = N.
  long va = padic_valuation(a, p), vN = padic_valuation(N, p);
  long ma = (va >= 0 ? va / 2 : (va - 1) / 2);
  long mN = (vN >= 0 ? vN / 2 : (vN - 1) / 2);
  Rat ap = a * rat_pow(Rat(p), -2 * ma);
  Rat Np = N * rat_pow(Rat(p), -2 * mN);
  Rat scale_y = rat_pow(Rat(p), mN), scale_z = rat_pow(Rat(p), mN - ma);
  long vap = padic_valuation(ap, p), vNp = padic_valuation(Np, p);

  // exact solution with y = 0
  Rat ratio = -Np / ap;
  if (ratio > 0) {
    Int rn = ratio.get_num(), rd = ratio.get_den();
    if (mpz_perfect_square_p(rn.get_mpz_t()) && mpz_perfect_square_p(rd.get_mpz_t())) {
      Int sn, sd;
      mpz_sqrt(sn.get_mpz_t(), rn.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), rd.get_mpz_t());
      return verify(Rat(0), make_rat(sn, sd) * scale_z);
    }
  }

  if (is_square_local(Np, Place::finite(p)))
    return verify(approx_sqrt(Np, p, k + 2 * std::labs(mN) + 2) * scale_y, Rat(0));

  if (vap == 0 && is_square_local(ap, Place::finite(p))) {
    // a' = c^2: split y'^2 - a' z'^2 = (y'-cz')(y'+cz') as 1 * N'.
    Rat c = approx_sqrt(ap, p, k + 2 * std::labs(mN) + std::labs(vNp) + 8);
    Rat yp = (Rat(1) + Np) / 2, zp = (Np - Rat(1)) / (2 * c);
    return verify(yp * scale_y, zp * scale_z);
  }

  long margin = k + 2 * std::labs(mN) + 6;
  if (vap == 0 && vNp == 0) {
    // both units: find a mod-p point with a unit coordinate and lift it
    for (long z0 = 0; z0 < p; ++z0) {
      Rat rhs = Np + ap * Rat(z0) * Rat(z0);
      if (rhs == 0) return verify(Rat(0), Rat(z0) * scale_z);
      if (is_square_local(rhs, Place::finite(p)))
        return verify(approx_sqrt(rhs, p, margin) * scale_y, Rat(z0) * scale_z);
    }
    for (long y0 = 0; y0 < p; ++y0) {
      Rat rhs = (Rat(y0) * Rat(y0) - Np) / ap;
      if (rhs == 0) return verify(Rat(y0) * scale_y, Rat(0));
      if (is_square_local(rhs, Place::finite(p)))
        return verify(Rat(y0) * scale_y, approx_sqrt(rhs, p, margin) * scale_z);
    }
    throw std::logic_error("norm_witness_mod: unit-unit search failed");
  }

  if (vap == 1 && vNp == 1) {
    // z'^2 = -uN/ua mod p is solvable exactly when the symbol is +1; pick a
    // unit deviation off the root so the remaining value has even valuation,
    // then sweep the deviation until the unit part is a residue.
    Rat target = -padic_unit_part(Np, p) / padic_unit_part(ap, p);
    unsigned long prec = static_cast<unsigned long>(margin + 8);
    Int nd = target.get_num() * target.get_den();
    Int pk = int_pow(Int(p), prec);
    Int root = hensel_sqrt(((nd % pk) + pk) % pk, p, prec);
    Rat r = make_rat(root, Int(target.get_den()));
    for (long mu = 1; mu < p; ++mu) {
      Rat zp = r + Rat(p) * Rat(mu);
      Rat rhs = Np + ap * zp * zp;
      if (rhs == 0) return verify(Rat(0), zp * scale_z);
      if (is_square_local(rhs, Place::finite(p)))
        return verify(approx_sqrt(rhs, p, margin) * scale_y, zp * scale_z);
    }
    throw std::logic_error("norm_witness_mod: ramified-ramified search failed");
  }

  // v(a') = 1, v(N') = 0 with N' a nonsquare has symbol -1 (already returned),
  // and the N'-square case was handled above.
  throw std::logic_error("norm_witness_mod: unreachable case");
}

}  // namespace chatelet
