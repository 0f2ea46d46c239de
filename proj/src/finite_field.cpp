#include "chatelet/finite_field.hpp"

namespace chatelet {

namespace {
inline long mul_mod(long a, long b, long m) {
  return static_cast<long>(static_cast<unsigned __int128>(a) * b % m);
}
}  // namespace

long mod_pow(long base, long e, long m) {
  long r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long m) {
  long t = 0, nt = 1, r = m, nr = a % m;
  if (nr < 0) nr += m;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::invalid_argument("mod_inv: not invertible");
  return t < 0 ? t + m : t;
}

int legendre_mod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

long smallest_nonresidue(long p) {
  for (long r = 2; r < p; ++r)
    if (legendre_mod(r, p) == -1) return r;
  throw std::logic_error("smallest_nonresidue: none found");
}

long sqrt_mod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0 || legendre_mod(a, p) != 1)
    throw std::invalid_argument("sqrt_mod: not a nonzero square");
  long root;
  if (p % 4 == 3) {
    root = mod_pow(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks
    long q = p - 1, s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    long z = smallest_nonresidue(p);
    long m = s, c = mod_pow(z, q, p), t = mod_pow(a, q, p),
         r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
      long i = 0, tt = t;
      while (tt != 1) {
        tt = mul_mod(tt, tt, p);
        ++i;
      }
      long b = mod_pow(c, 1L << (m - i - 1), p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
    root = r;
  }
  return std::min(root, p - root);
}

FiniteField make_fp(long p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("make_fp: p not prime");
  return FiniteField{p, 1, 0};
}

FiniteField make_fp2(long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("make_fp2: p must be an odd prime");
  return FiniteField{p, 2, smallest_nonresidue(p)};
}

FFElem ff_make(const FiniteField& F, const Int& c0, const Int& c1) {
  if (F.e == 1 && c1 % F.p != 0)
    throw std::invalid_argument("ff_make: t-coordinate in a prime field");
  long a = mpz_fdiv_ui(c0.get_mpz_t(), F.p);
  long b = mpz_fdiv_ui(c1.get_mpz_t(), F.p);
  return FFElem{a, F.e == 2 ? b : 0};
}

bool ff_is_zero(const FFElem& x) { return x.c0 == 0 && x.c1 == 0; }

FFElem ff_add(const FiniteField& F, const FFElem& a, const FFElem& b) {
  return FFElem{(a.c0 + b.c0) % F.p, (a.c1 + b.c1) % F.p};
}

FFElem ff_sub(const FiniteField& F, const FFElem& a, const FFElem& b) {
  return FFElem{(a.c0 - b.c0 + F.p) % F.p, (a.c1 - b.c1 + F.p) % F.p};
}

FFElem ff_mul(const FiniteField& F, const FFElem& a, const FFElem& b) {
  // (a0 + a1 t)(b0 + b1 t) with t^2 = r
  long c0 = (mul_mod(a.c0, b.c0, F.p) + mul_mod(F.r, mul_mod(a.c1, b.c1, F.p), F.p)) % F.p;
  long c1 = (mul_mod(a.c0, b.c1, F.p) + mul_mod(a.c1, b.c0, F.p)) % F.p;
  return FFElem{c0, c1};
}

FFElem ff_inv(const FiniteField& F, const FFElem& a) {
  if (ff_is_zero(a)) throw std::invalid_argument("ff_inv: zero");
  if (a.c1 == 0) return FFElem{mod_inv(a.c0, F.p), 0};
  // 1/(a0 + a1 t) = (a0 - a1 t)/N, N = a0^2 - r a1^2
  long n = (mul_mod(a.c0, a.c0, F.p) - mul_mod(F.r, mul_mod(a.c1, a.c1, F.p), F.p)) % F.p;
  if (n < 0) n += F.p;
  long ninv = mod_inv(n, F.p);
  return FFElem{mul_mod(a.c0, ninv, F.p), mul_mod((F.p - a.c1) % F.p, ninv, F.p)};
}

FFElem ff_pow(const FiniteField& F, FFElem a, long e) {
  if (e < 0) {
    a = ff_inv(F, a);
    e = -e;
  }
  FFElem r{1, 0};
  while (e > 0) {
    if (e & 1) r = ff_mul(F, r, a);
    a = ff_mul(F, a, a);
    e >>= 1;
  }
  return r;
}

bool ff_is_square(const FiniteField& F, const FFElem& x) {
  if (ff_is_zero(x)) throw std::invalid_argument("ff_is_square: zero");
  FFElem y = ff_pow(F, x, (F.order() - 1) / 2);
  return y == FFElem{1, 0};
}

std::string ff_str(const FiniteField& F, const FFElem& x) {
  if (F.e == 1 || x.c1 == 0) return std::to_string(x.c0);
  std::string s;
  if (x.c0 != 0) s += std::to_string(x.c0) + " + ";
  s += std::to_string(x.c1) + "*t";
  return s;
}

}  // namespace chatelet
