#ifndef CHATELET_FINITE_FIELD_HPP
#define CHATELET_FINITE_FIELD_HPP

#include "chatelet/arith.hpp"

namespace chatelet {

// F_p or F_{p^2} = F_p[t]/(t^2 - r), r the smallest positive nonresidue mod p.
// Small characteristic only: these are residue fields of places at desk scale.
struct FiniteField {
  long p = 0;
  int e = 1;
  long r = 0;  // 0 when e == 1

  long order() const { return e == 1 ? p : p * p; }
  bool operator==(const FiniteField&) const = default;
};

FiniteField make_fp(long p);
FiniteField make_fp2(long p);

// c0 + c1*t, coordinates in [0, p).
struct FFElem {
  long c0 = 0, c1 = 0;
  bool operator==(const FFElem&) const = default;
};

FFElem ff_make(const FiniteField& F, const Int& c0, const Int& c1 = Int(0));
bool ff_is_zero(const FFElem& x);
FFElem ff_add(const FiniteField& F, const FFElem& a, const FFElem& b);
FFElem ff_sub(const FiniteField& F, const FFElem& a, const FFElem& b);
FFElem ff_mul(const FiniteField& F, const FFElem& a, const FFElem& b);
FFElem ff_inv(const FiniteField& F, const FFElem& a);
FFElem ff_pow(const FiniteField& F, FFElem a, long e);

// x != 0; decided by x^((q-1)/2).
bool ff_is_square(const FiniteField& F, const FFElem& x);

std::string ff_str(const FiniteField& F, const FFElem& x);

long smallest_nonresidue(long p);   // p odd prime
int legendre_mod(long a, long p);   // p odd prime
long mod_pow(long base, long e, long m);
long mod_inv(long a, long m);

// Tonelli-Shanks; a must be a nonzero square mod odd prime p.
// Returns the root in [1, p/2].
long sqrt_mod(long a, long p);

}  // namespace chatelet

#endif
