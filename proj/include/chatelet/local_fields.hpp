#ifndef CHATELET_LOCAL_FIELDS_HPP
#define CHATELET_LOCAL_FIELDS_HPP

#include <compare>
#include <limits>

#include "chatelet/arith.hpp"
#include "chatelet/finite_field.hpp"

namespace chatelet {

inline constexpr long VAL_INF = std::numeric_limits<long>::max();

// A place of Q: the real place or a finite prime.
struct Place {
  long p = 0;  // 0 encodes the real place

  static Place real() { return Place{0}; }
  static Place finite(long p);
  bool is_real() const { return p == 0; }
  bool is_finite() const { return p != 0; }
  std::string label() const { return is_real() ? "real" : std::to_string(p); }
  auto operator<=>(const Place&) const = default;
};

Place parse_place(const std::string& s);

// Q(sqrt(d)), d squarefree, not 0 or 1.
struct QuadField {
  long d = 0;
  bool operator==(const QuadField&) const = default;
};

QuadField make_quad_field(long d);

enum class Splitting { Split, Inert, Ramified };

// Odd p not dividing d: Split iff (d|p) = +1, else Inert. p | d: Ramified.
// p = 2, d odd: Split iff d = 1 mod 8, Inert iff d = 5 mod 8, else Ramified.
Splitting splitting_type(const QuadField& K, long p);

std::string splitting_str(Splitting s);

// A place of Q(sqrt(d)). The two places over a split prime are labelled by
// the chosen p-adic square root of d: index 1 embeds sqrt(d) to the root
// with the smallest nonnegative residue mod p, index 2 to its negative.
struct ExtPlace {
  enum class Kind { RealPlus, RealMinus, Complex, Split1, Split2, Inert, Ramified };
  Kind kind;
  QuadField field;
  long p = 0;  // 0 for archimedean

  bool is_archimedean() const { return p == 0; }
  Place base() const { return p == 0 ? Place::real() : Place::finite(p); }
  long residue_degree() const { return kind == Kind::Inert ? 2 : 1; }
  // "real+", "real-", "complex", "73+", "73-", "5i", "3r"
  std::string label() const;
  auto operator<=>(const ExtPlace&) const = default;
};

ExtPlace parse_ext_place(const std::string& s, const QuadField& K);

std::vector<ExtPlace> places_above(const QuadField& K, const Place& v);
// All places over {real, 2, odd p <= bound}, in deterministic order.
std::vector<ExtPlace> ext_places_upto(const QuadField& K, long bound);

// a + b*sqrt(d), exact.
struct ExtElem {
  QuadField field;
  Rat a, b;

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  ExtElem conj() const { return ExtElem{field, a, -b}; }
  Rat norm() const { return a * a - Rat(field.d) * b * b; }
  std::string str() const;
  bool operator==(const ExtElem&) const = default;
};

ExtElem ext_from_rat(const QuadField& K, const Rat& a);
ExtElem ext_sqrt_d(const QuadField& K);
ExtElem ext_add(const ExtElem& x, const ExtElem& y);
ExtElem ext_sub(const ExtElem& x, const ExtElem& y);
ExtElem ext_mul(const ExtElem& x, const ExtElem& y);
ExtElem ext_inv(const ExtElem& x);
ExtElem ext_pow(const ExtElem& x, long e);
// f(x) for f over Q evaluated at an element of Q(sqrt(d)).
ExtElem ext_eval_poly(const Poly& f, const ExtElem& x);

// v_p with v_p(0) = VAL_INF.
long padic_valuation(const Rat& x, long p);
long padic_valuation(const Int& x, long p);
// x / p^{v_p(x)}; x != 0.
Rat padic_unit_part(const Rat& x, long p);
// Residue of x mod p for v_p(x) >= 0 (p odd or 2).
long rat_mod(const Rat& x, long p);

// Squares in Q_v: the sign test at the real place; even valuation and a
// residue unit part at odd p; even valuation and unit part = 1 mod 8 at 2.
bool is_square_local(const Rat& x, const Place& v);

// sqrt of n mod p^k for odd p, p not dividing n, (n|p) = +1; the returned
// root reduces mod p into [1, p/2]. Stateless, re-entrant.
Int hensel_sqrt(const Int& n, long p, unsigned long k);

// Normalized valuation on the completion at w (uniformizer has valuation 1):
// split places evaluate through the chosen embedding with adaptive Hensel
// precision; inert places extend v_p; ramified w(a + b sqrt(d)) =
// min(2 v_p(a), 2 v_p(b) + 1). x != 0, w finite and odd.
long ext_valuation(const ExtElem& x, const ExtPlace& w);

// Image of a w-unit in the residue field: F_p for split/ramified places,
// F_{p^2} for inert ones with sqrt(d) mapped into F_p[t]/(t^2 - r).
std::pair<FiniteField, FFElem> ext_residue(const ExtElem& x, const ExtPlace& w);

}  // namespace chatelet

#endif
