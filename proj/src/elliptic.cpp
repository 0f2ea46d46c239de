#include "chatelet/elliptic.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace chatelet {

bool ec_on_curve(const Int& B, const ECPoint& P) {
  if (P.infinity) return true;
  return P.y * P.y == P.x * P.x * P.x + Rat(B);
}

ECPoint ec_neg(const ECPoint& P) {
  if (P.infinity) return P;
  return ECPoint::affine(P.x, -P.y);
}

ECPoint ec_add(const Int& B, const ECPoint& P, const ECPoint& Q) {
  if (!ec_on_curve(B, P) || !ec_on_curve(B, Q))
    throw std::invalid_argument("ec_add: point not on curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return ECPoint::O();
    // doubling; y != 0 here since y = -y would have matched above
    Rat lambda = 3 * P.x * P.x / (2 * P.y);
    Rat x3 = lambda * lambda - 2 * P.x;
    Rat y3 = lambda * (P.x - x3) - P.y;
    return ECPoint::affine(x3, y3);
  }
  Rat lambda = (Q.y - P.y) / (Q.x - P.x);
  Rat x3 = lambda * lambda - P.x - Q.x;
  Rat y3 = lambda * (P.x - x3) - P.y;
  return ECPoint::affine(x3, y3);
}

ECPoint ec_mul(const Int& B, long n, const ECPoint& P) {
  if (n < 0) return ec_mul(B, -n, ec_neg(P));
  ECPoint r = ECPoint::O();
  for (long i = 0; i < n; ++i) r = ec_add(B, r, P);
  return r;
}

std::vector<ECPoint> ec_torsion(const Int& B) {
  if (B == 0) throw std::invalid_argument("ec_torsion: singular curve (B = 0)");
  std::vector<ECPoint> torsion{ECPoint::O()};
  Int disc = 432 * B * B;

  auto consider = [&](const Int& x, const Int& y) {
    if (y * y != x * x * x + B) return;
    ECPoint P = ECPoint::affine(Rat(x), Rat(y));
    // Mazur caps rational torsion order at 12.
    ECPoint R = P;
    for (int n = 1; n <= 12; ++n) {
      if (R.infinity) {
        torsion.push_back(P);
        if (y != 0) torsion.push_back(ec_neg(P));
        return;
      }
      R = ec_add(B, R, P);
    }
  };

  // y = 0: x^3 = -B
  Int c;
  if (mpz_root(c.get_mpz_t(), Int(-B).get_mpz_t(), 3) != 0) consider(c, Int(0));
  // y^2 | 432 B^2
  for (const Int& y : divisors(disc)) {
    if (y * y > disc || disc % (y * y) != 0) continue;
    Int x3 = y * y - B, x;
    if (mpz_root(x.get_mpz_t(), x3.get_mpz_t(), 3) != 0) consider(x, y);
  }
  std::sort(torsion.begin(), torsion.end(), [](const ECPoint& a, const ECPoint& b) {
    if (a.infinity != b.infinity) return a.infinity;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  torsion.erase(std::unique(torsion.begin(), torsion.end()), torsion.end());
  return torsion;
}

bool ec_point_check(const Int& B, const ProjPoint& P) {
  if (P.w0 == 0 && P.w1 == 0 && P.w2 == 0)
    throw std::invalid_argument("ec_point_check: (0:0:0)");
  return P.w1 * P.w1 * P.w2 == P.w0 * P.w0 * P.w0 + Rat(B) * P.w2 * P.w2 * P.w2;
}

bool ec_point_check(const Int& B, const ExtProjPoint& P) {
  if (P.w0.is_zero() && P.w1.is_zero() && P.w2.is_zero())
    throw std::invalid_argument("ec_point_check: (0:0:0)");
  ExtElem lhs = ext_mul(ext_mul(P.w1, P.w1), P.w2);
  ExtElem rhs = ext_add(ext_mul(ext_mul(P.w0, P.w0), P.w0),
                        ext_mul(ext_from_rat(P.w0.field, Rat(B)),
                                ext_mul(ext_mul(P.w2, P.w2), P.w2)));
  return lhs == rhs;
}

std::pair<Rat, Rat> gamma_eval(const ProjPoint& P) {
  if (!ec_point_check(Int(-16), P))
    throw std::invalid_argument("gamma_eval: point not on w1^2 w2 = w0^3 - 16 w2^3");
  if (P.w2 == 0) return {Rat(1), Rat(0)};  // the origin maps to infinity
  return {(P.w0 - 4 * P.w2) / P.w2, Rat(1)};
}

std::pair<ExtElem, ExtElem> gamma_eval(const ExtProjPoint& P) {
  if (!ec_point_check(Int(-16), P))
    throw std::invalid_argument("gamma_eval: point not on w1^2 w2 = w0^3 - 16 w2^3");
  const QuadField& K = P.w0.field;
  if (P.w2.is_zero()) return {ext_from_rat(K, Rat(1)), ext_from_rat(K, Rat(0))};
  ExtElem four = ext_from_rat(K, Rat(4));
  ExtElem u = ext_mul(ext_sub(P.w0, ext_mul(four, P.w2)), ext_inv(P.w2));
  return {u, ext_from_rat(K, Rat(1))};
}

std::vector<ECPoint> ec_affine_search(const Int& B, long height_bound, Engine engine,
                                      bool parallel) {
  if (height_bound < 1) throw std::invalid_argument("ec_affine_search: bound >= 1");
  std::vector<ECPoint> found;
  long emax = 1;
  while ((emax + 1) * (emax + 1) <= height_bound) ++emax;

  if (engine == Engine::Reference) {
    // exact rational sweep, serial
    for (long e = 1; e <= emax; ++e) {
      for (long m = -height_bound; m <= height_bound; ++m) {
        if (std::gcd(std::labs(m), e) != 1) continue;
        Rat x = make_rat(Int(m), Int(e) * Int(e));
        Rat rhs = x * x * x + Rat(B);
        if (rhs < 0) continue;
        Int rn = rhs.get_num(), rd = rhs.get_den();
        if (mpz_perfect_square_p(rn.get_mpz_t()) && mpz_perfect_square_p(rd.get_mpz_t())) {
          Int sn, sd;
          mpz_sqrt(sn.get_mpz_t(), rn.get_mpz_t());
          mpz_sqrt(sd.get_mpz_t(), rd.get_mpz_t());
          Rat y = make_rat(sn, sd);
          found.push_back(ECPoint::affine(x, y));
          if (y != 0) found.push_back(ECPoint::affine(x, -y));
        }
      }
    }
  } else {
    // m^3 + B e^6 must be a perfect square; integer arithmetic only
    std::vector<std::vector<ECPoint>> parts(static_cast<size_t>(emax));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long e = 1; e <= emax; ++e) {
      Int e6 = int_pow(Int(e), 6);
      Int Be6 = B * e6;
      std::vector<ECPoint>& local = parts[static_cast<size_t>(e - 1)];
      for (long m = -height_bound; m <= height_bound; ++m) {
        if (std::gcd(std::labs(m), e) != 1) continue;
        Int n = Int(m) * Int(m) * Int(m) + Be6;
        if (n < 0) continue;
        if (mpz_perfect_square_p(n.get_mpz_t())) {
          Int s;
          mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
          Rat x = make_rat(Int(m), Int(e) * Int(e));
          Rat y = make_rat(s, int_pow(Int(e), 3));
          local.push_back(ECPoint::affine(x, y));
          if (s != 0) local.push_back(ECPoint::affine(x, -y));
        }
      }
    }
    for (auto& part : parts)
      for (auto& P : part) found.push_back(P);
  }
  std::sort(found.begin(), found.end(), [](const ECPoint& a, const ECPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const ECPoint& P : found)
    if (!ec_on_curve(B, P)) throw std::logic_error("ec_affine_search: off-curve result");
  return found;
}

}  // namespace chatelet
