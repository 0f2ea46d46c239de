#ifndef CHATELET_HILBERT_HPP
#define CHATELET_HILBERT_HPP

#include "chatelet/local_fields.hpp"

namespace chatelet {

// Local invariants of quaternion classes take two values; the encoding
// symbol +1 <-> invariant 0, symbol -1 <-> invariant 1/2 is fixed here for
// every certificate format.
enum class Invariant { Zero, Half };

inline Invariant symbol_to_invariant(int s) {
  return s == 1 ? Invariant::Zero : Invariant::Half;
}
inline std::string invariant_str(Invariant i) {
  return i == Invariant::Zero ? "0" : "1/2";
}
inline Rat invariant_rat(Invariant i) {
  return i == Invariant::Zero ? Rat(0) : make_rat(Int(1), Int(2));
}

// Hilbert symbol (a,b)_v over Q_v, a, b nonzero.
//   real:  -1 iff a < 0 and b < 0
//   odd p: (-1)^{alpha beta (p-1)/2} (u|p)^beta (w|p)^alpha
//   p = 2: (-1)^{eps(u)eps(w) + alpha omega(w) + beta omega(u)}
// with a = p^alpha u, b = p^beta w, eps(u) = (u-1)/2, omega(u) = (u^2-1)/8.
int hilbert_q(const Rat& a, const Rat& b, const Place& v);

// Tame Hilbert symbol over a completion of Q(sqrt(d)) with odd residue
// characteristic: +1 iff the residue of (-1)^{alpha beta} a^beta b^{-alpha}
// is a square in the residue field, alpha = w(a), beta = w(b).
int hilbert_tame_ext(const ExtElem& a, const ExtElem& b, const ExtPlace& w);

struct ProductFormulaResult {
  bool holds;
  // real, 2, and every odd prime dividing a numerator or denominator.
  std::vector<std::pair<Place, int>> symbols;
};

ProductFormulaResult product_formula_check(const Rat& a, const Rat& b);

// If (a,N)_p = +1, a pair (y,z) with v_p(y^2 - a z^2 - N) >= k, found by
// residue search plus Hensel lifting; std::nullopt when the symbol is -1.
// p odd, k >= 1, N != 0.
std::optional<std::pair<Rat, Rat>> norm_witness_mod(const Rat& a, const Rat& N,
                                                    long p, long k);

}  // namespace chatelet

#endif
