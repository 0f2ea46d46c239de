#include "chatelet/local_fields.hpp"

#include <algorithm>

namespace chatelet {

Place Place::finite(long p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("Place::finite: p not prime");
  return Place{p};
}

Place parse_place(const std::string& s) {
  if (s == "real" || s == "oo" || s == "inf") return Place::real();
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("parse_place: bad place '" + s + "'");
  return Place::finite(std::stol(s));
}

QuadField make_quad_field(long d) {
  if (d == 0 || d == 1) throw std::invalid_argument("make_quad_field: d must not be 0 or 1");
  for (auto& [p, e] : factor_integer(Int(d)))
    if (e > 1) throw std::invalid_argument("make_quad_field: d must be squarefree");
  return QuadField{d};
}

Splitting splitting_type(const QuadField& K, long p) {
  long d = K.d;
  if (p == 2) {
    if (d % 2 == 0) return Splitting::Ramified;
    long m = ((d % 8) + 8) % 8;
    if (m == 1) return Splitting::Split;
    if (m == 5) return Splitting::Inert;
    return Splitting::Ramified;
  }
  if (d % p == 0) return Splitting::Ramified;
  return jacobi_symbol(d, p) == 1 ? Splitting::Split : Splitting::Inert;
}

std::string splitting_str(Splitting s) {
  switch (s) {
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    default: return "ramified";
  }
}

std::string ExtPlace::label() const {
  switch (kind) {
    case Kind::RealPlus: return "real+";
    case Kind::RealMinus: return "real-";
    case Kind::Complex: return "complex";
    case Kind::Split1: return std::to_string(p) + "+";
    case Kind::Split2: return std::to_string(p) + "-";
    case Kind::Inert: return std::to_string(p) + "i";
    default: return std::to_string(p) + "r";
  }
}

ExtPlace parse_ext_place(const std::string& s, const QuadField& K) {
  auto fail = [&]() -> ExtPlace {
    throw std::invalid_argument("parse_ext_place: bad place '" + s + "'");
  };
  if (s == "real+") return K.d > 0 ? ExtPlace{ExtPlace::Kind::RealPlus, K, 0} : fail();
  if (s == "real-") return K.d > 0 ? ExtPlace{ExtPlace::Kind::RealMinus, K, 0} : fail();
  if (s == "complex") return K.d < 0 ? ExtPlace{ExtPlace::Kind::Complex, K, 0} : fail();
  if (s.size() < 2) fail();
  char tag = s.back();
  std::string num = s.substr(0, s.size() - 1);
  for (char ch : num)
    if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
  long p = std::stol(num);
  Splitting sp = splitting_type(K, p);
  Place::finite(p);  // validates primality
  switch (tag) {
    case '+': return sp == Splitting::Split ? ExtPlace{ExtPlace::Kind::Split1, K, p} : fail();
    case '-': return sp == Splitting::Split ? ExtPlace{ExtPlace::Kind::Split2, K, p} : fail();
    case 'i': return sp == Splitting::Inert ? ExtPlace{ExtPlace::Kind::Inert, K, p} : fail();
    case 'r': return sp == Splitting::Ramified ? ExtPlace{ExtPlace::Kind::Ramified, K, p} : fail();
    default: return fail();
  }
}

std::vector<ExtPlace> places_above(const QuadField& K, const Place& v) {
  if (v.is_real()) {
    if (K.d > 0)
      return {ExtPlace{ExtPlace::Kind::RealPlus, K, 0},
              ExtPlace{ExtPlace::Kind::RealMinus, K, 0}};
    return {ExtPlace{ExtPlace::Kind::Complex, K, 0}};
  }
  switch (splitting_type(K, v.p)) {
    case Splitting::Split:
      return {ExtPlace{ExtPlace::Kind::Split1, K, v.p},
              ExtPlace{ExtPlace::Kind::Split2, K, v.p}};
    case Splitting::Inert:
      return {ExtPlace{ExtPlace::Kind::Inert, K, v.p}};
    default:
      return {ExtPlace{ExtPlace::Kind::Ramified, K, v.p}};
  }
}

std::vector<ExtPlace> ext_places_upto(const QuadField& K, long bound) {
  std::vector<ExtPlace> out;
  for (const ExtPlace& w : places_above(K, Place::real())) out.push_back(w);
  for (long p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (const ExtPlace& w : places_above(K, Place::finite(p))) out.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q(sqrt(d)) arithmetic.

namespace {
void check_same_field(const ExtElem& x, const ExtElem& y) {
  if (!(x.field == y.field))
    throw std::invalid_argument("ExtElem: mixed fields");
}
}  // namespace

ExtElem ext_from_rat(const QuadField& K, const Rat& a) { return ExtElem{K, a, Rat(0)}; }
ExtElem ext_sqrt_d(const QuadField& K) { return ExtElem{K, Rat(0), Rat(1)}; }

ExtElem ext_add(const ExtElem& x, const ExtElem& y) {
  check_same_field(x, y);
  return ExtElem{x.field, x.a + y.a, x.b + y.b};
}

ExtElem ext_sub(const ExtElem& x, const ExtElem& y) {
  check_same_field(x, y);
  return ExtElem{x.field, x.a - y.a, x.b - y.b};
}

ExtElem ext_mul(const ExtElem& x, const ExtElem& y) {
  check_same_field(x, y);
  Rat d(x.field.d);
  return ExtElem{x.field, x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
}

ExtElem ext_inv(const ExtElem& x) {
  if (x.is_zero()) throw std::invalid_argument("ext_inv: zero");
  Rat n = x.norm();
  return ExtElem{x.field, x.a / n, -x.b / n};
}

ExtElem ext_pow(const ExtElem& x, long e) {
  ExtElem base = e < 0 ? ext_inv(x) : x;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  ExtElem r = ext_from_rat(x.field, Rat(1));
  while (n) {
    if (n & 1) r = ext_mul(r, base);
    base = ext_mul(base, base);
    n >>= 1;
  }
  return r;
}

ExtElem ext_eval_poly(const Poly& f, const ExtElem& x) {
  ExtElem r = ext_from_rat(x.field, Rat(0));
  for (int i = f.deg(); i >= 0; --i)
    r = ext_add(ext_mul(r, x), ext_from_rat(x.field, f.coeff(i)));
  return r;
}

std::string ExtElem::str() const {
  if (b == 0) return rat_str(a);
  std::string s;
  if (a != 0) s += rat_str(a) + (b > 0 ? " + " : " - ");
  else if (b < 0) s += "-";
  Rat ab = abs(b);
  if (ab != 1) s += rat_str(ab) + "*";
  s += "sqrt(" + std::to_string(field.d) + ")";
  return s;
}

// ---------------------------------------------------------------------------
// Valuations and local squares over Q.

long padic_valuation(const Int& x, long p) {
  if (x == 0) return VAL_INF;
  Int tmp;
  return static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), Int(p).get_mpz_t()));
}

long padic_valuation(const Rat& x, long p) {
  if (x == 0) return VAL_INF;
  return padic_valuation(Int(x.get_num()), p) - padic_valuation(Int(x.get_den()), p);
}

Rat padic_unit_part(const Rat& x, long p) {
  if (x == 0) throw std::invalid_argument("padic_unit_part: zero");
  Int num, den;
  mpz_remove(num.get_mpz_t(), x.get_num().get_mpz_t(), Int(p).get_mpz_t());
  mpz_remove(den.get_mpz_t(), x.get_den().get_mpz_t(), Int(p).get_mpz_t());
  return make_rat(num, den);
}

long rat_mod(const Rat& x, long p) {
  if (padic_valuation(x, p) < 0)
    throw std::invalid_argument("rat_mod: negative valuation");
  long n = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
  long d = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
  return static_cast<long>(static_cast<unsigned __int128>(n) * mod_inv(d, p) % p);
}

bool is_square_local(const Rat& x, const Place& v) {
  if (x == 0) throw std::invalid_argument("is_square_local: zero");
  if (v.is_real()) return x > 0;
  long val = padic_valuation(x, v.p);
  if (val % 2 != 0) return false;
  Rat u = padic_unit_part(x, v.p);
  if (v.p == 2) return rat_mod(u, 8) == 1;
  long num = mpz_fdiv_ui(u.get_num().get_mpz_t(), v.p);
  long den = mpz_fdiv_ui(u.get_den().get_mpz_t(), v.p);
  return legendre_mod(num, v.p) * legendre_mod(den, v.p) == 1;
}

// ---------------------------------------------------------------------------
// Hensel lifting and extension places.

Int hensel_sqrt(const Int& n, long p, unsigned long k) {
  if (p == 2) throw std::invalid_argument("hensel_sqrt: p must be odd");
  long n0 = mpz_fdiv_ui(n.get_mpz_t(), p);
  long s0 = sqrt_mod(n0, p);  // already in [1, p/2]
  Int s(s0), mod(p);
  unsigned long prec = 1;
  while (prec < k) {
    // Newton step doubles the precision: s <- (s + n/s)/2 mod p^{2*prec}
    prec = std::min(2 * prec, k);
    Int newmod = int_pow(Int(p), prec);
    Int inv_s, inv_2;
    if (mpz_invert(inv_s.get_mpz_t(), s.get_mpz_t(), newmod.get_mpz_t()) == 0)
      throw std::logic_error("hensel_sqrt: lost invertibility");
    mpz_invert(inv_2.get_mpz_t(), Int(2).get_mpz_t(), newmod.get_mpz_t());
    s = ((s + n * inv_s) % newmod) * inv_2 % newmod;
    if (s < 0) s += newmod;
    mod = newmod;
  }
  return s % int_pow(Int(p), k);
}

namespace {

// Valuation and mod-p residue of a + b*sqrt(d) through the split embedding.
// Adaptive precision: the valuation is accepted only when it is below half
// the working precision, so no fixed-precision truncation can fool it.
struct SplitView {
  long val;
  long residue;  // unit-part residue, only meaningful when wanted
};

SplitView split_embed(const ExtElem& x, long p, bool second_root) {
  // Clear denominators: x = (A + B sqrt(d)) / D.
  Int D(1);
  mpz_lcm(D.get_mpz_t(), x.a.get_den().get_mpz_t(), x.b.get_den().get_mpz_t());
  Int A = x.a.get_num() * (D / x.a.get_den());
  Int B = x.b.get_num() * (D / x.b.get_den());
  long vD = padic_valuation(D, p);
  if (B == 0) {
    long vA = padic_valuation(A, p);
    Int uA = A / int_pow(Int(p), static_cast<unsigned long>(vA));
    Int uD = D / int_pow(Int(p), static_cast<unsigned long>(vD));
    long res = static_cast<long>(static_cast<unsigned __int128>(mpz_fdiv_ui(uA.get_mpz_t(), p)) *
                                 mod_inv(mpz_fdiv_ui(uD.get_mpz_t(), p), p) % p);
    return SplitView{vA - vD, res};
  }
  Int dmod = Int(x.field.d);
  for (unsigned long k = 16; k <= (1UL << 20); k *= 2) {
    Int pk = int_pow(Int(p), k);
    Int s = hensel_sqrt(dmod % pk + (dmod < 0 ? pk : Int(0)), p, k);
    if (second_root) s = pk - s;
    Int m = (A + B * s) % pk;
    if (m < 0) m += pk;
    if (m == 0) continue;
    long v = padic_valuation(m, p);
    if (static_cast<unsigned long>(2 * v) < k) {
      Int um = m / int_pow(Int(p), static_cast<unsigned long>(v));
      Int uD = D / int_pow(Int(p), static_cast<unsigned long>(vD));
      long res = static_cast<long>(
          static_cast<unsigned __int128>(mpz_fdiv_ui(um.get_mpz_t(), p)) *
          mod_inv(mpz_fdiv_ui(uD.get_mpz_t(), p), p) % p);
      return SplitView{v - vD, res};
    }
  }
  throw std::logic_error("split_embed: valuation not determined (precision cap)");
}

void check_tame_place(const ExtPlace& w) {
  if (w.is_archimedean())
    throw std::invalid_argument("extension place machinery: archimedean place");
  if (w.p == 2)
    throw std::invalid_argument(
        "extension place machinery: places over 2 are wild; handled over Q_2");
}

}  // namespace

long ext_valuation(const ExtElem& x, const ExtPlace& w) {
  if (x.is_zero()) throw std::invalid_argument("ext_valuation: zero");
  check_tame_place(w);
  long p = w.p;
  switch (w.kind) {
    case ExtPlace::Kind::Inert: {
      long va = padic_valuation(x.a, p), vb = padic_valuation(x.b, p);
      return std::min(va, vb);
    }
    case ExtPlace::Kind::Ramified: {
      long va = padic_valuation(x.a, p), vb = padic_valuation(x.b, p);
      long ta = va == VAL_INF ? VAL_INF : 2 * va;
      long tb = vb == VAL_INF ? VAL_INF : 2 * vb + 1;
      return std::min(ta, tb);
    }
    case ExtPlace::Kind::Split1:
      return split_embed(x, p, false).val;
    case ExtPlace::Kind::Split2:
      return split_embed(x, p, true).val;
    default:
      throw std::invalid_argument("ext_valuation: archimedean place");
  }
}

std::pair<FiniteField, FFElem> ext_residue(const ExtElem& x, const ExtPlace& w) {
  check_tame_place(w);
  if (x.is_zero() || ext_valuation(x, w) != 0)
    throw std::invalid_argument("ext_residue: not a unit at w");
  long p = w.p;
  switch (w.kind) {
    case ExtPlace::Kind::Inert: {
      FiniteField F = make_fp2(p);
      // sqrt(d) = sigma * t with sigma^2 = d / r; both are nonresidues so the
      // ratio is a residue. sqrt_mod pins sigma in [1, p/2].
      long dmod = rat_mod(Rat(x.field.d), p);
      long sigma = sqrt_mod(
          static_cast<long>(static_cast<unsigned __int128>(dmod) * mod_inv(F.r, p) % p), p);
      long c0 = rat_mod(x.a, p);
      long c1 = static_cast<long>(static_cast<unsigned __int128>(rat_mod(x.b, p)) * sigma % p);
      return {F, FFElem{c0, c1}};
    }
    case ExtPlace::Kind::Ramified: {
      FiniteField F = make_fp(p);
      return {F, FFElem{rat_mod(x.a, p), 0}};
    }
    case ExtPlace::Kind::Split1:
    case ExtPlace::Kind::Split2: {
      FiniteField F = make_fp(p);
      SplitView sv = split_embed(x, p, w.kind == ExtPlace::Kind::Split2);
      return {F, FFElem{sv.residue, 0}};
    }
    default:
      throw std::invalid_argument("ext_residue: archimedean place");
  }
}

}  // namespace chatelet
