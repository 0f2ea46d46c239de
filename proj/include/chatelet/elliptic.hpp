#ifndef CHATELET_ELLIPTIC_HPP
#define CHATELET_ELLIPTIC_HPP

#include "chatelet/engine.hpp"
#include "chatelet/local_fields.hpp"

namespace chatelet {

// Affine point of y^2 = x^3 + B, or the origin.
struct ECPoint {
  bool infinity = true;
  Rat x, y;

  static ECPoint O() { return ECPoint{}; }
  static ECPoint affine(const Rat& x, const Rat& y) { return ECPoint{false, x, y}; }
  bool operator==(const ECPoint&) const = default;
};

bool ec_on_curve(const Int& B, const ECPoint& P);
ECPoint ec_neg(const ECPoint& P);
ECPoint ec_add(const Int& B, const ECPoint& P, const ECPoint& Q);
ECPoint ec_mul(const Int& B, long n, const ECPoint& P);

// Nagell-Lutz enumeration on y^2 = x^3 + B: integral candidates with y = 0 or
// y^2 dividing |disc| = 432 B^2, kept only when chord-tangent multiples reach
// the origin within the torsion-order bound 12. Always contains O.
std::vector<ECPoint> ec_torsion(const Int& B);

// Projective points (w0 : w1 : w2) on w1^2 w2 = w0^3 + B w2^3, over Q or
// Q(sqrt(d)). Exact substitution; (0:0:0) rejected.
struct ProjPoint {
  Rat w0, w1, w2;
};
struct ExtProjPoint {
  ExtElem w0, w1, w2;
};

bool ec_point_check(const Int& B, const ProjPoint& P);
bool ec_point_check(const Int& B, const ExtProjPoint& P);

// (w0 : w1 : w2) -> (w0 - 4 w2 : w2), extended over the origin by O -> (1:0).
// Input must lie on w1^2 w2 = w0^3 - 16 w2^3. Output is normalized to (u : 1)
// or (1 : 0).
std::pair<Rat, Rat> gamma_eval(const ProjPoint& P);
std::pair<ExtElem, ExtElem> gamma_eval(const ExtProjPoint& P);

// Exhaustive affine search at bounded height: x = m/e^2 with |m| <= bound and
// e^2 <= bound (the shape every rational point has), testing m^3 + B e^6 for
// a perfect square. OpenMP over the numerator range in the fast engine.
std::vector<ECPoint> ec_affine_search(const Int& B, long height_bound,
                                      Engine engine = Engine::Fast,
                                      bool parallel = true);

}  // namespace chatelet

#endif
