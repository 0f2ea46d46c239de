#ifndef CHATELET_BUNDLE_HPP
#define CHATELET_BUNDLE_HPP

#include "chatelet/certificate.hpp"
#include "chatelet/elliptic.hpp"

namespace chatelet {

// Homogeneous binary form in (x0, x1); c[i] multiplies x0^i x1^{deg-i}.
struct BinaryForm {
  int degree = 0;
  std::vector<Rat> c;

  Rat eval(const Rat& x0, const Rat& x1) const;
  std::string str(const std::string& v0 = "x0", const std::string& v1 = "x1") const;
};

// x1^degree * P(x0/x1); deg P <= degree required.
BinaryForm homogenize(const Poly& P, int degree = 4);
Poly dehomogenize(const BinaryForm& F);  // F(x, 1)

// s' = u0^2 * Pinf~ + u1^2 * P0~, bidegree (2, 4).
struct BiSection {
  Poly p_inf, p0;
  BinaryForm p_inf_form, p0_form;

  Rat eval(const Rat& u0, const Rat& u1, const Rat& x0, const Rat& x1) const;
  // the binary quartic in x over the point (u0 : u1)
  BinaryForm specialize(const Rat& u0, const Rat& u1) const;
};

// Both quartic, separable, coprime; non-coprime input is rejected with the
// resultant named.
BiSection build_section(const Poly& p_inf, const Poly& p0);

// Res(Pinf, P0) != 0 and both discriminants nonzero: the zero locus of s' in
// P1 x P1 is smooth.
bool smoothness_check(const Poly& p_inf, const Poly& p0);

struct BranchLocus {
  Poly disc_poly;                 // disc_x of the specialized quartic, in u
  std::vector<Poly> factors;      // irreducible radical factors, primitive, lc > 0
  std::vector<int> multiplicities;
  Rat content;
  bool contains_infinity;         // (1:0) in R, detected by disc(Pinf) = 0
};

// Branch locus of Z' -> P1 (first projection) in the affine chart u = u0/u1:
// the discriminant of the fiber quartic, interpolated, made squarefree, and
// factored into irreducibles.
BranchLocus branch_locus(const Poly& p_inf, const Poly& p0);

struct GammaBranch {
  Poly affine_poly;        // (u+4)^3 - 16
  bool contains_infinity;  // (1:0) is a branch point of gamma
};

GammaBranch gamma_branch_poly();

struct DisjointnessReport {
  bool disjoint = false;
  std::vector<Rat> resultants;  // Res(gamma poly, h) per branch factor
  std::vector<int> r_degrees;
  int gamma_degree = 3;
  bool infinity_conflict = false;
};

DisjointnessReport branch_disjointness(const std::vector<Poly>& r_polys,
                                       bool r_contains_infinity, const GammaBranch& g);

// Plane curve w2^{n+2} = f~(w0, w1) (w1^2 - w0^2) for monic irreducible f of
// odd degree n >= 3, separable and coprime to x^2 - 1.
struct CandidateCurve {
  Poly f;
  int n = 0;
  long genus = 0;
  BinaryForm f_form;
  bool k_point_checked = false;  // (1 : 1 : 0)
  bool l_point_checked = false;  // (theta : 1 : 0) via reduction mod f
  std::string equation;
};

CandidateCurve build_candidate_curve(const Poly& f);

struct VerifyOptions {
  long depth = 4;
  long prime_bound = 200;
  long height_bound = 10000;
  bool parallel = true;
  std::optional<long> tamper_p2;  // negative-control hook, test use only
};

// End-to-end verification of the explicit construction over Q and Q(sqrt(3)):
// prime pair, V0 profiles over both fields, the weak-approximation failure
// certificate, the section/branch geometry, and the elliptic fibration data.
// Deterministic and idempotent.
Certificate verify_example(const VerifyOptions& opts = {});

}  // namespace chatelet

#endif
