#include "chatelet/invariants.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>

namespace chatelet {

std::string provenance_str(Provenance p) {
  switch (p) {
    case Provenance::RuleA: return "proven-rule-a";
    case Provenance::RuleB: return "proven-rule-b";
    case Provenance::SplitReduction: return "split-reduction";
    default: return "enumerated";
  }
}

namespace {

int legendre_rat_unit(const Rat& u, long p) {
  long n = mpz_fdiv_ui(u.get_num().get_mpz_t(), p);
  long d = mpz_fdiv_ui(u.get_den().get_mpz_t(), p);
  return legendre_mod(n, p) * legendre_mod(d, p);
}

std::optional<Invariant> invariant_if_point(const ChateletSurface& V, const BrauerClass& A,
                                            const Place& v, const Rat& x) {
  Rat Px = V.P.eval(x);
  if (Px != 0 && hilbert_q(V.a, Px, v) != 1) return std::nullopt;
  for (const Poly& Q : A.reps) {
    Rat qx = Q.eval(x);
    if (qx != 0) return symbol_to_invariant(hilbert_q(A.a, qx, v));
  }
  return std::nullopt;
}

struct Collector {
  ValueSet vs;
  bool record(Invariant inv, const Rat& x) {
    if (inv == Invariant::Zero) {
      if (!vs.zero) { vs.zero = true; vs.zero_witness = x; }
    } else {
      if (!vs.half) { vs.half = true; vs.half_witness = x; }
    }
    return vs.zero && vs.half;
  }
  bool saw_point() const { return vs.zero || vs.half; }
};

// x = 0 and the rational roots of P; shared prefix of every enumeration order.
bool enumerate_special_points(const ChateletSurface& V, const BrauerClass& A,
                              const Place& v, Collector& col) {
  if (auto inv = invariant_if_point(V, A, v, Rat(0)))
    if (col.record(*inv, Rat(0))) return true;
  for (const Rat& r : poly_rational_roots(V.P))
    if (auto inv = invariant_if_point(V, A, v, r))
      if (col.record(*inv, r)) return true;
  return false;
}

void enumerate_exact_finite(const ChateletSurface& V, const BrauerClass& A,
                            const Place& v, long depth, Collector& col) {
  if (enumerate_special_points(V, A, v, col)) return;
  long p = v.p;
  long tmod = (p == 2) ? 32 : p * p * p;
  for (long j = -depth; j <= depth; ++j) {
    Rat pj = rat_pow(Rat(p), j);
    for (long t = 1; t < tmod; ++t) {
      if (t % p == 0) continue;
      Rat x = Rat(t) * pj;
      if (auto inv = invariant_if_point(V, A, v, x))
        if (col.record(*inv, x)) return;
    }
  }
}

void enumerate_real(const ChateletSurface& V, const BrauerClass& A, Collector& col) {
  Place v = Place::real();
  if (enumerate_special_points(V, A, v, col)) return;
  // Real symbols only see signs, and the signs of P and of every
  // representation are constant on the components cut out by the roots of
  // their product; one sample per component decides the full value set.
  Poly prod = V.P;
  for (const Poly& Q : A.reps) prod = prod * Q;
  for (const Rat& x : real_region_samples(prod)) {
    if (auto inv = invariant_if_point(V, A, v, x))
      if (col.record(*inv, x)) return;
  }
}

inline unsigned long inv_mod_u64(unsigned long a, unsigned long m) {
  long long t = 0, nt = 1;
  unsigned long r = m, nr = a % m;
  while (nr != 0) {
    unsigned long q = r / nr;
    long long tmp = t - static_cast<long long>(q) * nt;
    t = nt;
    nt = tmp;
    unsigned long rtmp = r - q * nr;
    r = nr;
    nr = rtmp;
  }
  if (r != 1) throw std::invalid_argument("inv_mod_u64: not invertible");
  return t < 0 ? static_cast<unsigned long>(t + static_cast<long long>(m))
               : static_cast<unsigned long>(t);
}

struct PadicConst {
  bool zero = false;
  long val = 0;
  unsigned long unit4 = 0;  // unit part mod p^4
  long unit_modp = 0;
};

PadicConst decompose(const Rat& c, long p, unsigned long p4) {
  PadicConst r;
  if (c == 0) {
    r.zero = true;
    return r;
  }
  r.val = padic_valuation(c, p);
  Rat u = padic_unit_part(c, p);
  unsigned long n = mpz_fdiv_ui(u.get_num().get_mpz_t(), p4);
  unsigned long d = mpz_fdiv_ui(u.get_den().get_mpz_t(), p4);
  r.unit4 = static_cast<unsigned long>(
      static_cast<unsigned __int128>(n) * inv_mod_u64(d, p4) % p4);
  r.unit_modp = static_cast<long>(r.unit4 % static_cast<unsigned long>(p));
  return r;
}

// Fast stratified enumeration at an odd place for the V0 family (both
// representations even quadratics, P = Q1*Q2). Witness candidates are
// re-verified through the exact path before being recorded.
void enumerate_fast_odd(const ChateletSurface& V, const BrauerClass& A, const Place& v,
                        long depth, Collector& col) {
  long p = v.p;
  unsigned long p4 = 1;
  for (int i = 0; i < 4; ++i) p4 *= static_cast<unsigned long>(p);

  bool alpha_odd = padic_valuation(V.a, p) % 2 != 0;
  int la = legendre_rat_unit(padic_unit_part(V.a, p), p);
  bool eps_odd = ((p - 1) / 2) % 2 != 0;

  struct RepConst {
    PadicConst c2, c0;
  };
  RepConst rc[2];
  for (int i = 0; i < 2; ++i) {
    const Poly& Q = A.reps[i];
    rc[i].c2 = decompose(Q.coeff(2), p, p4);
    rc[i].c0 = decompose(Q.coeff(0), p, p4);
  }

  std::vector<int8_t> leg(p, 0);
  for (long i = 1; i < p; ++i) leg[i] = static_cast<int8_t>(legendre_mod(i, p));

  auto record_verified = [&](Invariant inv, long t, long j) {
    Rat x = Rat(t) * rat_pow(Rat(p), j);
    auto check = invariant_if_point(V, A, v, x);
    if (!check || *check != inv)
      throw std::logic_error("fast kernel disagrees with exact symbol at p=" +
                             std::to_string(p));
    col.record(inv, x);
  };

  const long p3 = p * p * p;
  for (long j = -depth; j <= depth; ++j) {
    long valA[2], valB[2];
    for (int i = 0; i < 2; ++i) {
      valA[i] = rc[i].c2.zero ? 0 : rc[i].c2.val + 2 * j;
      valB[i] = rc[i].c0.zero ? 0 : rc[i].c0.val;
    }
    unsigned long t2 = 1;  // t^2 mod p^4, maintained incrementally
    for (long t = 1; t < p3; ++t, t2 = (t2 + 2 * static_cast<unsigned long>(t) - 1) % p4) {
      if (t % p == 0) continue;
      long tp = t % p;
      long tp2 = tp * tp % p;
      int s[2];
      bool fallback = false;
      for (int i = 0; i < 2; ++i) {
        long val;
        long res;
        const RepConst& r = rc[i];
        if (r.c2.zero) {
          val = valB[i];
          res = r.c0.unit_modp;
        } else if (r.c0.zero) {
          val = valA[i];
          res = r.c2.unit_modp * tp2 % p;
        } else if (valA[i] < valB[i]) {
          val = valA[i];
          res = r.c2.unit_modp * tp2 % p;
        } else if (valB[i] < valA[i]) {
          val = valB[i];
          res = r.c0.unit_modp;
        } else {
          unsigned long u = static_cast<unsigned long>(
              (static_cast<unsigned __int128>(r.c2.unit4) * t2 + r.c0.unit4) % p4);
          if (u == 0) { fallback = true; break; }
          long e = 0;
          while (u % static_cast<unsigned long>(p) == 0) {
            u /= static_cast<unsigned long>(p);
            ++e;
          }
          val = valA[i] + e;
          res = static_cast<long>(u % static_cast<unsigned long>(p));
        }
        bool val_odd = val % 2 != 0;
        int sym = 1;
        if (alpha_odd && val_odd && eps_odd) sym = -sym;
        if (val_odd) sym *= la;
        if (alpha_odd) sym *= leg[res];
        s[i] = sym;
      }
      if (fallback) {
        // cancellation beyond the p^4 window: do this x exactly
        Rat x = Rat(t) * rat_pow(Rat(p), j);
        if (auto inv = invariant_if_point(V, A, v, x))
          if (col.record(*inv, x)) return;
        continue;
      }
      if (s[0] * s[1] != 1) continue;  // no local point with this x
      Invariant inv = symbol_to_invariant(s[0]);
      if ((inv == Invariant::Zero && !col.vs.zero) ||
          (inv == Invariant::Half && !col.vs.half)) {
        record_verified(inv, t, j);
        if (col.vs.zero && col.vs.half) return;
      }
    }
  }
}

void enumerate_place(const ChateletSurface& V, const BrauerClass& A, const Place& v,
                     long depth, Engine engine, Collector& col) {
  if (v.is_real()) {
    enumerate_real(V, A, col);
    return;
  }
  bool v0_shape = A.reps.size() == 2 && A.reps[0].coeff(1) == 0 && A.reps[1].coeff(1) == 0 &&
                  V.factorization && A.reps[0] * A.reps[1] == V.P;
  unsigned long p4_guard = 0;
  if (v.p < 38900) {
    p4_guard = 1;
    for (int i = 0; i < 4; ++i) p4_guard *= static_cast<unsigned long>(v.p);
  }
  if (engine == Engine::Fast && v.p != 2 && v0_shape && p4_guard != 0) {
    if (enumerate_special_points(V, A, v, col)) return;
    enumerate_fast_odd(V, A, v, depth, col);
    return;
  }
  enumerate_exact_finite(V, A, v, depth, col);
}

}  // namespace

LocalPointResult has_local_point(const ChateletSurface& V, const Place& v, long depth) {
  if (depth < 1) throw std::invalid_argument("has_local_point: depth >= 1 required");
  // exact roots of P give the points (x, 0, 0)
  auto roots = poly_rational_roots(V.P);
  if (v.is_real()) {
    if (V.a > 0) {
      for (long x = 0;; ++x)
        if (V.P.eval(Rat(x)) != 0)
          return {LocalPointResult::Status::Found, Rat(x), false, ""};
    }
    if (!roots.empty())
      return {LocalPointResult::Status::Found, roots[0], true, "root of P"};
    // a < 0: a point needs P(x) > 0. The sign of P is constant on the
    // components cut out by its real roots, so Sturm sampling decides this
    // exactly; with no real roots and a negative sample, P is negative
    // definite and the real fiber is provably empty.
    for (const Rat& x : real_region_samples(V.P))
      if (V.P.eval(x) > 0) return {LocalPointResult::Status::Found, x, false, ""};
    return {LocalPointResult::Status::Empty, std::nullopt, false,
            "a < 0 and P negative definite over R (no real roots, negative sample)"};
  }
  Collector col;
  BrauerClass trivial{V.a, {V.P}};
  const BrauerClass* cls = &trivial;
  BrauerClass factored{V.a, {}};
  if (V.factorization) {
    factored.reps = {V.factorization->first, V.factorization->second};
    cls = &factored;
  }
  if (auto inv = invariant_if_point(V, *cls, v, Rat(0)))
    return {LocalPointResult::Status::Found, Rat(0), false, ""};
  if (!roots.empty())
    return {LocalPointResult::Status::Found, roots[0], true, "root of P"};
  long p = v.p;
  long tmod = (p == 2) ? 32 : p * p * p;
  for (long j = -depth; j <= depth; ++j) {
    Rat pj = rat_pow(Rat(p), j);
    for (long t = 1; t < tmod; ++t) {
      if (t % p == 0) continue;
      Rat x = Rat(t) * pj;
      if (invariant_if_point(V, *cls, v, x))
        return {LocalPointResult::Status::Found, x, false, ""};
    }
  }
  return {LocalPointResult::Status::Inconclusive, std::nullopt, false,
          "no point found at depth " + std::to_string(depth)};
}

Invariant invariant_at(const ChateletSurface& V, const BrauerClass& A, const Place& v,
                       const Rat& x) {
  Rat Px = V.P.eval(x);
  if (Px != 0 && hilbert_q(V.a, Px, v) != 1)
    throw std::invalid_argument("invariant_at: x is not a local point at " + v.label());
  for (const Poly& Q : A.reps) {
    Rat qx = Q.eval(x);
    if (qx != 0) return symbol_to_invariant(hilbert_q(A.a, qx, v));
  }
  throw std::invalid_argument("invariant_at: every representation vanishes at x");
}

ZeroRule prove_invariant_zero(const ChateletSurface& V, const Place& v) {
  if (!V.v0_primes)
    throw std::invalid_argument("prove_invariant_zero: surface is not from build_v0");
  auto [p1, p2] = *V.v0_primes;
  if (is_square_local(Rat(p1), v)) return ZeroRule::RuleA;
  if (v.is_finite() && v.p != 2 && padic_valuation(Rat(p1), v.p) == 0 &&
      padic_valuation(Rat(p2), v.p) >= 0)
    return ZeroRule::RuleB;
  return ZeroRule::None;
}

namespace {

ValueSet value_set_impl(const V0& v0, const Place& v, long depth, Engine engine,
                        bool use_rules) {
  if (depth < 1) throw std::invalid_argument("invariant_value_set: depth >= 1 required");
  if (use_rules) {
    ZeroRule rule = prove_invariant_zero(v0.surface, v);
    if (rule != ZeroRule::None) {
      ValueSet vs;
      vs.zero = true;
      vs.prov = rule == ZeroRule::RuleA ? Provenance::RuleA : Provenance::RuleB;
      vs.depth = depth;
      if (auto inv = invariant_if_point(v0.surface, v0.cls, v, Rat(0)))
        if (*inv == Invariant::Zero) vs.zero_witness = Rat(0);
      return vs;
    }
  }
  Collector col;
  enumerate_place(v0.surface, v0.cls, v, depth, engine, col);
  if (!col.saw_point())
    throw std::runtime_error("invariant_value_set: no local point found at " + v.label() +
                             " (V0 surfaces are everywhere locally soluble)");
  col.vs.prov = Provenance::Enumerated;
  col.vs.depth = depth;
  return col.vs;
}

}  // namespace

ValueSet invariant_value_set(const V0& v0, const Place& v, long depth, Engine engine) {
  return value_set_impl(v0, v, depth, engine, true);
}

ValueSet invariant_value_set_enumerated(const V0& v0, const Place& v, long depth,
                                        Engine engine) {
  return value_set_impl(v0, v, depth, engine, false);
}

// ---------------------------------------------------------------------------
// Extension places.

namespace {

ExtElem ext_uniformizer_pow(const ExtPlace& w, long e) {
  if (w.kind == ExtPlace::Kind::Ramified) {
    // (sqrt d)^e
    long h = e >= 0 ? e / 2 : (e - 1) / 2;  // floor
    ExtElem r = ext_from_rat(w.field, rat_pow(Rat(w.field.d), h));
    if (e - 2 * h == 1) r = ext_mul(r, ext_sqrt_d(w.field));
    return r;
  }
  return ext_from_rat(w.field, rat_pow(Rat(w.p), e));
}

bool ext_is_square(const ExtElem& x, const ExtPlace& w) {
  long v = ext_valuation(x, w);
  if (v % 2 != 0) return false;
  ExtElem u = ext_mul(x, ext_uniformizer_pow(w, -v));
  auto [F, r] = ext_residue(u, w);
  return ff_is_square(F, r);
}

std::optional<Invariant> ext_invariant_if_point(const V0& v0, const ExtPlace& w,
                                                const ExtElem& x) {
  ExtElem a = ext_from_rat(w.field, v0.surface.a);
  ExtElem Px = ext_eval_poly(v0.surface.P, x);
  if (!Px.is_zero() && hilbert_tame_ext(a, Px, w) != 1) return std::nullopt;
  for (const Poly& Q : v0.cls.reps) {
    ExtElem qx = ext_eval_poly(Q, x);
    if (!qx.is_zero()) return symbol_to_invariant(hilbert_tame_ext(a, qx, w));
  }
  return std::nullopt;
}

struct ExtCollector {
  ExtValueSet vs;
  bool record(Invariant inv, const ExtElem& x) {
    if (inv == Invariant::Zero) {
      if (!vs.zero) { vs.zero = true; vs.zero_witness = x; }
    } else {
      if (!vs.half) { vs.half = true; vs.half_witness = x; }
    }
    return vs.zero && vs.half;
  }
};

// Tame enumeration at an inert or ramified odd place: x = pi^j t with t over
// residue-field representatives.
void enumerate_ext_place(const V0& v0, const ExtPlace& w, long depth, ExtCollector& col) {
  const QuadField& K = w.field;
  long p = w.p;
  ExtElem zero = ext_from_rat(K, Rat(0));
  if (auto inv = ext_invariant_if_point(v0, w, zero))
    if (col.record(*inv, zero)) return;
  for (const Rat& r : poly_rational_roots(v0.surface.P)) {
    ExtElem xr = ext_from_rat(K, r);
    if (auto inv = ext_invariant_if_point(v0, w, xr))
      if (col.record(*inv, xr)) return;
  }
  for (long j = -depth; j <= depth; ++j) {
    ExtElem pij = ext_uniformizer_pow(w, j);
    for (long c0 = 0; c0 < p; ++c0) {
      for (long c1 = 0; c1 < p; ++c1) {
        bool unit = w.kind == ExtPlace::Kind::Inert ? (c0 != 0 || c1 != 0) : (c0 != 0);
        if (!unit) continue;
        ExtElem t{K, Rat(c0), Rat(c1)};
        ExtElem x = ext_mul(pij, t);
        if (auto inv = ext_invariant_if_point(v0, w, x))
          if (col.record(*inv, x)) return;
      }
    }
  }
}

}  // namespace

Invariant ext_invariant_at(const V0& v0, const ExtPlace& w, const ExtElem& x) {
  if (w.is_archimedean() || w.p == 2)
    throw std::invalid_argument("ext_invariant_at: only odd finite places carry witnesses");
  auto inv = ext_invariant_if_point(v0, w, x);
  if (!inv) throw std::invalid_argument("ext_invariant_at: x is not a local point at " + w.label());
  return *inv;
}

ExtValueSet ext_invariant_value_set(const V0& v0, const ExtPlace& w, long depth,
                                    Engine engine) {
  if (depth < 1) throw std::invalid_argument("ext_invariant_value_set: depth >= 1 required");
  const QuadField& K = w.field;
  ExtValueSet vs;
  vs.depth = depth;
  ExtElem zero = ext_from_rat(K, Rat(0));
  if (w.is_archimedean()) {
    // a = p1 > 0 is a square under both real embeddings; over a complex
    // place everything is a square.
    if (w.kind != ExtPlace::Kind::Complex && !(v0.surface.a > 0))
      throw std::invalid_argument("ext_invariant_value_set: archimedean case needs a > 0");
    vs.zero = true;
    vs.zero_witness = zero;
    vs.prov = Provenance::RuleA;
    return vs;
  }
  if (w.p == 2) {
    if (!is_square_local(v0.surface.a, Place::finite(2)))
      throw std::invalid_argument(
          "ext_invariant_value_set: p1 not a 2-adic square; wild case out of scope");
    vs.zero = true;
    vs.zero_witness = zero;
    vs.prov = Provenance::RuleA;
    return vs;
  }
  if (w.kind == ExtPlace::Kind::Split1 || w.kind == ExtPlace::Kind::Split2) {
    // L_w = Q_p: the base value set is the extension one.
    ValueSet base = invariant_value_set(v0, Place::finite(w.p), depth, engine);
    vs.zero = base.zero;
    vs.half = base.half;
    if (base.zero_witness) vs.zero_witness = ext_from_rat(K, *base.zero_witness);
    if (base.half_witness) vs.half_witness = ext_from_rat(K, *base.half_witness);
    vs.prov = (base.prov == Provenance::Enumerated) ? Provenance::SplitReduction : base.prov;
    return vs;
  }
  // inert / ramified, odd
  ExtElem a = ext_from_rat(K, v0.surface.a);
  long wp1 = ext_valuation(a, w);
  long wp2 = ext_valuation(ext_from_rat(K, Rat(v0.p2)), w);
  if (wp1 == 0 && wp2 >= 0) {
    vs.zero = true;
    vs.zero_witness = zero;
    vs.prov = Provenance::RuleB;
    return vs;
  }
  if (ext_is_square(a, w)) {
    vs.zero = true;
    vs.zero_witness = zero;
    vs.prov = Provenance::RuleA;
    return vs;
  }
  ExtCollector col;
  enumerate_ext_place(v0, w, depth, col);
  if (!col.vs.zero && !col.vs.half)
    throw std::runtime_error("ext_invariant_value_set: no local point found at " + w.label());
  col.vs.prov = Provenance::Enumerated;
  col.vs.depth = depth;
  return col.vs;
}

// ---------------------------------------------------------------------------
// Profiles.

QProfile profile_over_q(const V0& v0, long prime_bound, long depth, bool parallel,
                        bool cross_check) {
  std::vector<Place> places{Place::real(), Place::finite(2)};
  for (long p = 3; p <= prime_bound; p += 2)
    if (is_prime(p)) places.push_back(Place::finite(p));
  QProfile prof;
  prof.prime_bound = prime_bound;
  prof.depth = depth;
  prof.cross_checked = cross_check;
  prof.entries.resize(places.size());
  // process the expensive places (largest p, cost ~ p^3) first
  std::vector<size_t> order(places.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return places[a].p > places[b].p; });
  std::string error;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (size_t oi = 0; oi < order.size(); ++oi) {
    size_t i = order[oi];
    try {
      ValueSet vs = invariant_value_set(v0, places[i], depth, Engine::Fast);
      if (cross_check && vs.prov != Provenance::Enumerated) {
        ValueSet es = invariant_value_set_enumerated(v0, places[i], depth, Engine::Fast);
        if (es.half || !es.zero)
          throw std::logic_error("rule/enumeration disagreement at " + places[i].label());
      }
      prof.entries[i] = {places[i], vs};
    } catch (const std::exception& e) {
#pragma omp critical
      error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error("profile_over_q: " + error);
  return prof;
}

ExtProfile profile_over_ext(const V0& v0, const QuadField& K, long prime_bound, long depth,
                            bool parallel) {
  std::vector<ExtPlace> places = ext_places_upto(K, prime_bound);
  ExtProfile prof;
  prof.field = K;
  prof.prime_bound = prime_bound;
  prof.depth = depth;
  prof.entries.resize(places.size());
  std::string error;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (size_t i = 0; i < places.size(); ++i) {
    try {
      prof.entries[i] = {places[i], ext_invariant_value_set(v0, places[i], depth)};
    } catch (const std::exception& e) {
#pragma omp critical
      error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error("profile_over_ext: " + error);
  return prof;
}

// ---------------------------------------------------------------------------
// Weak-approximation failure certificates.

WAFailureCertificate wa_failure_certificate(const QuadField& K, long p1, long p2,
                                            const std::vector<ExtPlace>& off,
                                            long prime_bound, long depth) {
  if (splitting_type(K, p1) != Splitting::Split)
    throw std::invalid_argument("wa_failure_certificate: p1 does not split in Q(sqrt(" +
                                std::to_string(K.d) + "))");
  for (const ExtPlace& w : off) {
    if (!(w.field == K))
      throw std::invalid_argument("wa_failure_certificate: off-place from a different field");
    if (w.p == p1)
      throw std::invalid_argument(
          "wa_failure_certificate: off-set contains a place over p1 = " + std::to_string(p1));
  }
  V0 v0 = build_v0(p1, p2);
  WAFailureCertificate cert;
  cert.field = K;
  cert.p1 = p1;
  cert.p2 = p2;
  cert.surface = v0.surface;
  cert.cls = v0.cls;
  cert.off = off;
  cert.depth = depth;
  cert.prime_bound = prime_bound;
  cert.w0 = ExtPlace{ExtPlace::Kind::Split1, K, p1};
  cert.w1 = ExtPlace{ExtPlace::Kind::Split2, K, p1};

  ValueSet base = invariant_value_set(v0, Place::finite(p1), depth);
  if (!base.half || !base.half_witness)
    throw Inconclusive("wa_failure_certificate: no half witness at p1 found at depth " +
                       std::to_string(depth));
  if (!base.zero || !base.zero_witness)
    throw Inconclusive("wa_failure_certificate: no zero witness at p1 found at depth " +
                       std::to_string(depth));
  cert.w0_witness = ext_from_rat(K, *base.half_witness);
  cert.w1_witness = ext_from_rat(K, *base.zero_witness);
  cert.w0_norm_witness = norm_witness_mod(Rat(p1), v0.surface.P.eval(*base.half_witness), p1, 6);
  cert.w1_norm_witness = norm_witness_mod(Rat(p1), v0.surface.P.eval(*base.zero_witness), p1, 6);

  std::vector<ExtPlace> places = ext_places_upto(K, std::max(prime_bound, p1));
  for (const ExtPlace& w : places) {
    if (w.is_archimedean() || w.p <= prime_bound || w.p == p1) {
      WASupportEntry entry;
      entry.place = w;
      entry.values = ext_invariant_value_set(v0, w, depth);
      entry.chosen = (w == cert.w0) ? Invariant::Half : Invariant::Zero;
      if (entry.chosen == Invariant::Half && !entry.values.half)
        throw std::runtime_error("wa_failure_certificate: half value missing at w0");
      cert.support.push_back(std::move(entry));
    }
  }

  cert.family_proofs = {
      "archimedean and 2-adic places: p1 > 0 and p1 = 1 mod 8, so p1 is a square in "
      "every completion there and all symbols (p1, .) are trivial",
      "odd places w with w(p1) = 0 (every place not over p1 or 2): w(p2) >= 0, so a "
      "half invariant would force an odd valuation on p2*x^2 + 1 while the second "
      "representation stays a square times a unit; invariant 0 everywhere",
      "places over p1: p1 splits, L_w = Q_p1, and the base enumeration at p1 supplies "
      "both invariant values with witnesses"};

  // Recompute the adelic sum from the witnesses and rule proofs; labels are
  // not trusted.
  Invariant i0 = ext_invariant_at(v0, cert.w0, cert.w0_witness);
  Invariant i1 = ext_invariant_at(v0, cert.w1, cert.w1_witness);
  cert.adelic_sum = invariant_rat(i0) + invariant_rat(i1);
  for (const WASupportEntry& e : cert.support) {
    if (e.place == cert.w0 || e.place == cert.w1) continue;
    if (!e.values.zero || e.values.half)
      throw std::logic_error("wa_failure_certificate: non-trivial value set off p1 at " +
                             e.place.label());
  }
  if (cert.adelic_sum != make_rat(Int(1), Int(2)))
    throw std::logic_error("wa_failure_certificate: adelic sum is not 1/2");
  return cert;
}

}  // namespace chatelet
