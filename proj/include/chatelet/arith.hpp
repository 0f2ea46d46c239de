#ifndef CHATELET_ARITH_HPP
#define CHATELET_ARITH_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chatelet {

// Exact arithmetic substrate. mpq_class keeps fractions reduced with a
// positive denominator, which is the Rational invariant this library
// depends on (valuations read off numerators/denominators directly).
using Int = mpz_class;
using Rat = mpq_class;

// num/den with den != 0; result canonical.
Rat make_rat(const Int& num, const Int& den);

// Accepts "3", "-5/7", "5334/5329". Throws std::invalid_argument on junk.
Rat parse_rat(const std::string& s);

// "num/den", or just "num" when den == 1.
std::string rat_str(const Rat& x);

// max(|num|, den)
Int rat_height(const Rat& x);

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);  // e may be negative; base != 0 then

bool is_prime(const Int& n);
bool is_prime(long n);

// Prime factorization, smallest prime first. Trial division below 10^5,
// then Miller-Rabin + Pollard rho for what remains.
std::vector<std::pair<Int, int>> factor_integer(const Int& n);

// All positive divisors of |n|, ascending. n != 0.
std::vector<Int> divisors(const Int& n);

// Jacobi symbol (a|n) for odd n >= 1; equals the Legendre symbol for n prime.
int jacobi_symbol(const Int& a, const Int& n);
int jacobi_symbol(long a, long n);

// ---------------------------------------------------------------------------
// Univariate polynomials over Q, dense, index = degree.

class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs);  // {c0, c1, ...}
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly x();

  // -1 encodes the degree of the zero polynomial.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& lc() const;
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly pow(unsigned e) const;
  Poly compose(const Poly& g) const;  // this(g(x))

  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(const Rat& s, const Poly& f);
  friend Poly operator-(const Poly& f);
  friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

// Exact division with remainder; g != 0.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
// Monic gcd (1 for coprime, 0 only if both zero).
Poly poly_gcd(const Poly& f, const Poly& g);

// Sylvester-matrix resultant; f, g nonzero.
Rat poly_resultant(const Poly& f, const Poly& g);

// Number of distinct real roots in (a, b], by Sturm's theorem. f nonzero.
long sturm_count(const Poly& f, const Rat& a, const Rat& b);
// Total number of distinct real roots.
long sturm_count_all(const Poly& f);

// One rational sample point inside every connected component of R minus the
// real roots of f, ordered left to right. Exact (Sturm isolation plus
// bisection); the sign of f is constant on each component.
std::vector<Rat> real_region_samples(const Poly& f);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), deg f >= 2.
Rat poly_discriminant(const Poly& f);

// Content (as a rational, sign of lc folded in so the primitive part has a
// positive integral leading coefficient) and primitive part.
Rat poly_content(const Poly& f);
Poly poly_primitive_part(const Poly& f);

// ---------------------------------------------------------------------------
// Factorization over Q at desk scale (degree <= 8).

struct Factorization {
  Rat content;                               // f = content * prod factors^mult
  std::vector<std::pair<Poly, int>> factors; // primitive, lc > 0, irreducible
};

// Yun's algorithm: f = content * prod s_i^i with the s_i squarefree, pairwise
// coprime, primitive with positive leading coefficient.
std::vector<std::pair<Poly, int>> poly_squarefree_decomposition(const Poly& f);

// Rational-root stripping, Yun squarefree decomposition, then Kronecker
// interpolation for factors of degree 2..deg/2. Throws std::invalid_argument
// for zero input, std::domain_error above the degree cap.
Factorization poly_factor_rational(const Poly& f);

std::vector<Rat> poly_rational_roots(const Poly& f);

bool poly_is_irreducible(const Poly& f);

}  // namespace chatelet

#endif
