#ifndef CHATELET_INVARIANTS_HPP
#define CHATELET_INVARIANTS_HPP

#include "chatelet/engine.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

// The fast engine computes odd-place symbols through fixed-precision p-adic
// views (int64/int128, units mod p^4) with an exact fallback on deep
// cancellation; the reference engine does every step in exact rational
// arithmetic. Both enumerate the same strata.

enum class Provenance { RuleA, RuleB, SplitReduction, Enumerated };

std::string provenance_str(Provenance p);

// A claim the toolkit could neither establish nor refute at the configured
// search depth. Distinct from verified failure; the CLI maps it to exit 3.
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValueSet {
  bool zero = false, half = false;
  std::optional<Rat> zero_witness, half_witness;
  Provenance prov = Provenance::Enumerated;
  long depth = 0;

  bool operator==(const ValueSet& o) const {
    return zero == o.zero && half == o.half;  // witnesses may differ
  }
};

struct ExtValueSet {
  bool zero = false, half = false;
  std::optional<ExtElem> zero_witness, half_witness;
  Provenance prov = Provenance::Enumerated;
  long depth = 0;
};

struct LocalPointResult {
  enum class Status { Found, Empty, Inconclusive };
  Status status;
  std::optional<Rat> x;
  bool on_vanishing_locus = false;  // witness has P(x) = 0, point (x, 0, 0)
  std::string note;
};

// Searches x = 0, the rational roots of P, then x = p^j t for
// j = -depth..depth with t over unit lifts mod p^3 (odd p) / mod 2^5.
// Empty is returned only with a proof (negative-definite real case);
// a fruitless finite-place search reports Inconclusive.
LocalPointResult has_local_point(const ChateletSurface& V, const Place& v, long depth);

// Local invariant at the point with coordinate x: 0 iff (a, Q(x))_v = +1 for
// the first representation with Q(x) != 0. x must be a local point.
Invariant invariant_at(const ChateletSurface& V, const BrauerClass& A, const Place& v,
                       const Rat& x);

enum class ZeroRule { RuleA, RuleB, None };

// Rule A: a = p1 is a square in Q_v, so every symbol (p1, .)_v is trivial.
// Rule B: v odd with v(p1) = 0 and v(p2) >= 0; a half invariant would force
// v(p2 x^2 + 1) odd, which contradicts the Hensel-square shape of the second
// representation. Only for surfaces built by build_v0.
ZeroRule prove_invariant_zero(const ChateletSurface& V, const Place& v);

// Set of local invariants over V0(K_v) with witnesses. Proof rules fire
// first; otherwise the stratified enumeration decides. Throws when the
// enumeration finds no local point at all.
ValueSet invariant_value_set(const V0& v0, const Place& v, long depth,
                             Engine engine = Engine::Fast);

// Enumeration only, proof rules disabled (rule/enumeration agreement checks).
ValueSet invariant_value_set_enumerated(const V0& v0, const Place& v, long depth,
                                        Engine engine = Engine::Fast);

// Value set over the completion of Q(sqrt(d)) at w. Split places over p
// reduce to Q_p; places over 2 and archimedean places go through the square
// classes of p1 in Q_2 / R; other odd places use the transported rules or
// tame-symbol enumeration with ExtElem witnesses.
ExtValueSet ext_invariant_value_set(const V0& v0, const ExtPlace& w, long depth,
                                    Engine engine = Engine::Fast);

// Invariant at an extension point (odd places).
Invariant ext_invariant_at(const V0& v0, const ExtPlace& w, const ExtElem& x);

struct QProfile {
  long prime_bound = 0, depth = 0;
  bool cross_checked = false;
  std::vector<std::pair<Place, ValueSet>> entries;
};

// Profile over real, 2 and every odd prime <= prime_bound. With cross_check,
// every rule-proved place is re-run by enumeration and the results must
// agree. Parallel over places with a deterministic place-ordered merge.
QProfile profile_over_q(const V0& v0, long prime_bound, long depth,
                        bool parallel = true, bool cross_check = false);

struct ExtProfile {
  QuadField field;
  long prime_bound = 0, depth = 0;
  std::vector<std::pair<ExtPlace, ExtValueSet>> entries;
};

ExtProfile profile_over_ext(const V0& v0, const QuadField& K, long prime_bound,
                            long depth, bool parallel = true);

struct WASupportEntry {
  ExtPlace place;
  ExtValueSet values;
  Invariant chosen;  // the open-set choice at this place
};

// Certificate that V0 base-changed to Q(sqrt(d)) misses weak approximation
// off `off`: one split place over p1 pinned at invariant 1/2, its twin at 0,
// everything else proved 0, adelic sum 1/2.
struct WAFailureCertificate {
  QuadField field;
  long p1 = 0, p2 = 0;
  ChateletSurface surface;
  BrauerClass cls;
  ExtPlace w0, w1;
  ExtElem w0_witness, w1_witness;
  // (y, z) with y^2 - p1 z^2 = P(x) to p1-adic precision 6 at each pinned x;
  // exhibits the local point behind the witness
  std::optional<std::pair<Rat, Rat>> w0_norm_witness, w1_norm_witness;
  std::vector<WASupportEntry> support;
  std::vector<std::string> family_proofs;
  std::vector<ExtPlace> off;
  Rat adelic_sum;
  long depth = 0, prime_bound = 0;
};

WAFailureCertificate wa_failure_certificate(const QuadField& K, long p1, long p2,
                                            const std::vector<ExtPlace>& off,
                                            long prime_bound = 200, long depth = 4);

}  // namespace chatelet

#endif
