#include "chatelet/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace chatelet {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("parse_rat: malformed rational");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("parse_rat: malformed rational");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("parse_rat: malformed rational '" + t + "'");
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (Int(den) == 0) throw std::invalid_argument("parse_rat: zero denominator");
  return make_rat(Int(num), Int(den));
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int rat_height(const Rat& x) {
  Int n = abs(x.get_num());
  return n > x.get_den() ? n : Int(x.get_den());
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::invalid_argument("rat_pow: 0 to negative power");
    return Rat(0);
  }
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat r(1);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(long n) { return is_prime(Int(n)); }

namespace {

Int pollard_rho(const Int& n) {
  // n odd composite, no factor below the trial bound.
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1);
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle, retry with another c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(const Int& n, std::vector<std::pair<Int, int>>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.emplace_back(n, 1);
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor_integer(const Int& n_in) {
  if (n_in == 0) throw std::invalid_argument("factor_integer: zero");
  Int n = abs(n_in);
  std::vector<std::pair<Int, int>> out;
  for (long p : {2L, 3L, 5L, 7L}) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.emplace_back(Int(p), e);
  }
  for (long p = 11; p < 100000 && Int(p) * p <= n; p += 2) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.emplace_back(Int(p), e);
  }
  if (n > 1) {
    std::vector<std::pair<Int, int>> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (auto& [p, e] : rest) {
      if (!out.empty() && out.back().first == p)
        out.back().second += e;
      else
        out.emplace_back(p, e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> divisors(const Int& n) {
  auto fac = factor_integer(n);
  std::vector<Int> divs{Int(1)};
  for (auto& [p, e] : fac) {
    size_t m = divs.size();
    Int pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < m; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int jacobi_symbol(const Int& a_in, const Int& n_in) {
  if (n_in <= 0 || n_in % 2 == 0)
    throw std::invalid_argument("jacobi_symbol: n must be odd and positive");
  Int a = a_in % n_in;
  if (a < 0) a += n_in;
  Int n = n_in;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int jacobi_symbol(long a, long n) { return jacobi_symbol(Int(a), Int(n)); }

// ---------------------------------------------------------------------------

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }
Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rat& c) { return Poly{std::vector<Rat>{c}}; }
Poly Poly::x() { return Poly{Rat(0), Rat(1)}; }

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::lc() const {
  if (is_zero()) throw std::invalid_argument("lc of zero polynomial");
  return c_.back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

Rat Poly::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::derivative() const {
  if (deg() <= 0) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(Rat(1));
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * g + Poly::constant(c_[i]);
  return r;
}

Poly operator+(const Poly& f, const Poly& g) {
  std::vector<Rat> c(std::max(f.c_.size(), g.c_.size()), Rat(0));
  for (size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
  for (size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator-(const Poly& f) {
  std::vector<Rat> c(f.c_);
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator*(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  std::vector<Rat> c(f.c_.size() + g.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < f.c_.size(); ++i)
    for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& f) {
  std::vector<Rat> c(f.c_);
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    Rat ci = coeff(i);
    if (ci == 0) continue;
    bool neg = ci < 0;
    Rat a = abs(ci);
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    bool unit = (a == 1) && i > 0;
    if (!unit) {
      bool frac = a.get_den() != 1;
      if (frac && i > 0) out += "(";
      out += rat_str(a);
      if (frac && i > 0) out += ")";
    }
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
  std::vector<Rat> r(f.coeffs());
  int dg = g.deg();
  if (f.deg() < dg) return {Poly(), f};
  std::vector<Rat> q(f.deg() - dg + 1, Rat(0));
  for (int i = f.deg(); i >= dg; --i) {
    if (r[i] == 0) continue;
    Rat t = r[i] / g.lc();
    q[i - dg] = t;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= t * g.coeff(j);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.lc()) * a;
}

Rat poly_resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("poly_resultant: zero polynomial");
  int m = f.deg(), n = g.deg();
  if (m == 0) return rat_pow(f.lc(), n);
  if (n == 0) return rat_pow(g.lc(), m);
  // Sylvester matrix, Gaussian elimination over Q.
  int sz = m + n;
  std::vector<std::vector<Rat>> A(sz, std::vector<Rat>(sz, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) A[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) A[n + i][i + j] = g.coeff(n - j);
  Rat det(1);
  for (int col = 0; col < sz; ++col) {
    int piv = -1;
    for (int row = col; row < sz; ++row)
      if (A[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(A[piv], A[col]);
      det = -det;
    }
    det *= A[col][col];
    Rat inv = Rat(1) / A[col][col];
    for (int row = col + 1; row < sz; ++row) {
      if (A[row][col] == 0) continue;
      Rat t = A[row][col] * inv;
      for (int j = col; j < sz; ++j) A[row][j] -= t * A[col][j];
    }
  }
  return det;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().deg() >= 1) {
    Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

long sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  long v = 0;
  int prev = 0;
  for (const Poly& g : chain) {
    Rat gx = g.eval(x);
    int s = gx > 0 ? 1 : gx < 0 ? -1 : 0;
    if (s != 0) {
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
  }
  return v;
}

Rat cauchy_root_bound(const Poly& f) {
  Rat bound(1);
  for (int i = 0; i < f.deg(); ++i) {
    Rat b = abs(f.coeff(i) / f.lc()) + 1;
    if (b > bound) bound = b;
  }
  return bound;
}

}  // namespace

long sturm_count(const Poly& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (f.deg() == 0) return 0;
  auto chain = sturm_chain(f);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

long sturm_count_all(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("sturm_count_all: zero polynomial");
  if (f.deg() == 0) return 0;
  Rat B = cauchy_root_bound(f) + 1;
  return sturm_count(f, -B, B);
}

std::vector<Rat> real_region_samples(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("real_region_samples: zero polynomial");
  if (f.deg() == 0) return {Rat(0)};
  Rat B = cauchy_root_bound(f) + 1;
  auto chain = sturm_chain(f);
  auto count = [&](const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };
  // split points must avoid the roots themselves so the Sturm counts on the
  // half-open pieces stay exact
  auto split_point = [&](const Rat& a, const Rat& b) {
    Rat mid = (a + b) / 2;
    Rat step = (b - a) / 4;
    while (f.eval(mid) == 0) {
      mid += step;
      step /= 2;
    }
    return mid;
  };
  // bisect into intervals holding exactly one root each
  std::vector<std::pair<Rat, Rat>> stack{{-B, B}}, isolated;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    long n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rat mid = split_point(a, b);
    stack.push_back({a, mid});
    stack.push_back({mid, b});
  }
  std::sort(isolated.begin(), isolated.end());
  // shrink the intervals until they are pairwise disjoint
  for (size_t round = 0; round < 400; ++round) {
    bool overlap = false;
    for (size_t i = 0; i + 1 < isolated.size(); ++i)
      if (!(isolated[i].second < isolated[i + 1].first)) overlap = true;
    if (!overlap) break;
    for (auto& [a, b] : isolated) {
      Rat mid = split_point(a, b);
      if (count(a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
  }
  for (size_t i = 0; i + 1 < isolated.size(); ++i)
    if (!(isolated[i].second < isolated[i + 1].first))
      throw std::logic_error("real_region_samples: root isolation did not separate");
  // one point left of every root, one in each root-free gap, one to the right
  std::vector<Rat> samples;
  samples.push_back(-B);
  for (size_t i = 0; i + 1 < isolated.size(); ++i)
    samples.push_back((isolated[i].second + isolated[i + 1].first) / 2);
  if (!isolated.empty()) samples.push_back(B);
  return samples;
}

Rat poly_discriminant(const Poly& f) {
  int n = f.deg();
  if (n < 2) throw std::invalid_argument("poly_discriminant: degree < 2");
  Rat res = poly_resultant(f, f.derivative());
  Rat d = res / f.lc();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2) d = -d;
  return d;
}

Rat poly_content(const Poly& f) {
  if (f.is_zero()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const Rat& c : f.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content = make_rat(num_gcd, den_lcm);
  if (f.lc() < 0) content = -content;
  return content;
}

Poly poly_primitive_part(const Poly& f) {
  if (f.is_zero()) return f;
  return (Rat(1) / poly_content(f)) * f;
}

// ---------------------------------------------------------------------------
// Factorization.

std::vector<Rat> poly_rational_roots(const Poly& f) {
  std::vector<Rat> roots;
  if (f.deg() < 1) return roots;
  Poly g = poly_primitive_part(f);
  // x | g?
  while (g.coeff(0) == 0) {
    roots.push_back(Rat(0));
    g = poly_divmod(g, Poly::x()).first;
    if (g.deg() < 1) break;
  }
  if (g.deg() < 1) return roots;
  Int a0 = g.coeff(0).get_num();
  Int an = g.lc().get_num();
  for (const Int& p : divisors(a0)) {
    for (const Int& q : divisors(an)) {
      for (int sgn : {1, -1}) {
        Rat r = make_rat(sgn * p, q);
        if (g.eval(r) == 0) {
          // peel off (qx - p) to collect multiplicity
          Poly lin{-r, Rat(1)};
          while (g.deg() >= 1 && g.eval(r) == 0) {
            roots.push_back(r);
            g = poly_divmod(g, lin).first;
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

constexpr int kFactorDegreeCap = 8;

// Primitive integer polynomial with positive lc; caller guarantees squarefree
// and no rational roots. Returns a nontrivial primitive factor or nullopt.
std::optional<Poly> kronecker_factor(const Poly& f) {
  int d = f.deg();
  for (int k = 2; k <= d / 2; ++k) {
    // Evaluation points 0, 1, -1, 2, -2, ...
    std::vector<long> pts;
    for (long m = 0; static_cast<int>(pts.size()) < k + 1; m = m > 0 ? -m : -m + 1)
      pts.push_back(m);
    std::vector<Rat> xs;
    std::vector<std::vector<Int>> divs;
    bool bad = false;
    for (long m : pts) {
      Rat v = f.eval(Rat(m));
      if (v == 0) { bad = true; break; }  // cannot happen: roots stripped
      xs.push_back(Rat(m));
      divs.push_back(divisors(v.get_num()));
    }
    if (bad) continue;
    // Divisor tuple (d_0 fixed positive: g and -g divide alike).
    std::vector<size_t> idx(k + 1, 0);
    std::vector<int> sgn(k + 1, 1);
    auto advance = [&]() -> bool {
      for (int i = k; i >= 0; --i) {
        if (i > 0 && sgn[i] == 1) { sgn[i] = -1; return true; }
        sgn[i] = 1;
        if (++idx[i] < divs[i].size()) return true;
        idx[i] = 0;
        if (i == 0) return false;
      }
      return false;
    };
    do {
      // Lagrange interpolation through (pts[i], sgn[i]*divs[i][idx[i]]).
      std::vector<Rat> ys(k + 1);
      for (int i = 0; i <= k; ++i) ys[i] = Rat(sgn[i] * divs[i][idx[i]]);
      Poly g;
      for (int i = 0; i <= k; ++i) {
        Poly basis = Poly::constant(ys[i]);
        for (int j = 0; j <= k; ++j) {
          if (j == i) continue;
          basis = make_rat(Int(1), Int(pts[i] - pts[j])) *
                  (basis * Poly{-Rat(pts[j]), Rat(1)});
        }
        g = g + basis;
      }
      if (g.deg() != k) continue;
      bool integral = true;
      for (const Rat& c : g.coeffs())
        if (c.get_den() != 1) { integral = false; break; }
      if (!integral) continue;
      auto [q, r] = poly_divmod(f, g);
      if (r.is_zero()) {
        Poly pg = poly_primitive_part(g);
        if (pg.deg() >= 1 && pg.deg() < d) return pg;
      }
    } while (advance());
  }
  return std::nullopt;
}

void factor_squarefree(const Poly& f_in, std::vector<Poly>& out) {
  Poly f = poly_primitive_part(f_in);
  if (f.deg() < 1) return;
  for (const Rat& r : poly_rational_roots(f)) {
    Poly lin = poly_primitive_part(Poly{-r, Rat(1)});
    out.push_back(lin);
    f = poly_primitive_part(poly_divmod(f, Poly{-r, Rat(1)}).first);
  }
  while (f.deg() >= 2) {
    if (f.deg() <= 3) {  // no roots left, so no linear factor: irreducible
      out.push_back(f);
      return;
    }
    auto g = kronecker_factor(f);
    if (!g) {
      out.push_back(f);
      return;
    }
    std::vector<Poly> sub;
    factor_squarefree(*g, sub);
    for (auto& h : sub) out.push_back(h);
    f = poly_primitive_part(poly_divmod(f, *g).first);
  }
  if (f.deg() == 1) out.push_back(f);
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_squarefree_decomposition(const Poly& f) {
  if (f.is_zero())
    throw std::invalid_argument("poly_squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Poly, int>> parts;
  if (f.deg() < 1) return parts;
  Poly g = poly_primitive_part(f);
  Poly gp = g.derivative();
  Poly a = poly_gcd(g, gp);
  Poly b = poly_divmod(g, a).first;
  Poly c = poly_divmod(gp, a).first;
  Poly d = c - b.derivative();
  int mult = 1;
  while (b.deg() >= 1) {
    Poly s = poly_gcd(b, d);
    if (s.deg() >= 1) parts.emplace_back(poly_primitive_part(s), mult);
    b = poly_divmod(b, s).first;
    c = poly_divmod(d, s).first;
    d = c - b.derivative();
    ++mult;
  }
  return parts;
}

Factorization poly_factor_rational(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_factor_rational: zero polynomial");
  if (f.deg() > kFactorDegreeCap)
    throw std::domain_error("poly_factor_rational: degree " + std::to_string(f.deg()) +
                            " unsupported (cap " + std::to_string(kFactorDegreeCap) + ")");
  Factorization result;
  result.content = poly_content(f);
  if (f.deg() == 0) return result;

  for (auto& [part, m] : poly_squarefree_decomposition(f)) {
    std::vector<Poly> irr;
    factor_squarefree(part, irr);
    for (auto& h : irr) {
      bool merged = false;
      for (auto& [hf, hm] : result.factors)
        if (hf == h) { hm += m; merged = true; break; }
      if (!merged) result.factors.emplace_back(h, m);
    }
  }

  // Re-multiplication must reproduce f exactly; recover the scalar.
  Poly prod = Poly::constant(Rat(1));
  for (auto& [h, m] : result.factors) prod = prod * h.pow(static_cast<unsigned>(m));
  result.content = f.lc() / prod.lc();
  return result;
}

bool poly_is_irreducible(const Poly& f) {
  if (f.deg() < 1) return false;
  auto fac = poly_factor_rational(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace chatelet
