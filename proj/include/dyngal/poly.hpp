#ifndef DYNGAL_POLY_HPP
#define DYNGAL_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyngal/gf.hpp"

// Dense univariate polynomials over a finite field context K (gf::Field or
// gf::ExtField). Coefficients are stored low-to-high with no trailing zeros;
// the zero polynomial is the empty vector.

namespace dyngal::poly {

template <class K>
struct Pol {
  std::vector<typename K::Elem> c;

  bool operator==(const Pol& o) const { return c == o.c; }
  bool operator!=(const Pol& o) const { return c != o.c; }
};

template <class K>
int deg(const Pol<K>& a) {
  return int(a.c.size()) - 1;
}

template <class K>
bool is_zero(const Pol<K>& a) {
  return a.c.empty();
}

template <class K>
void normalize(const K& k, Pol<K>& a) {
  while (!a.c.empty() && k.is_zero(a.c.back())) a.c.pop_back();
}

template <class K>
Pol<K> zero(const K&) {
  return {};
}

template <class K>
Pol<K> constant(const K& k, typename K::Elem e) {
  Pol<K> a;
  if (!k.is_zero(e)) a.c.push_back(e);
  return a;
}

template <class K>
Pol<K> one(const K& k) {
  return constant(k, k.one());
}

/// The monomial e * x^n.
template <class K>
Pol<K> monomial(const K& k, typename K::Elem e, int n) {
  Pol<K> a;
  if (k.is_zero(e)) return a;
  a.c.assign(n + 1, k.zero());
  a.c[n] = e;
  return a;
}

template <class K>
typename K::Elem lead(const K& k, const Pol<K>& a) {
  return a.c.empty() ? k.zero() : a.c.back();
}

template <class K>
typename K::Elem coeff(const K& k, const Pol<K>& a, int i) {
  return (i >= 0 && i < int(a.c.size())) ? a.c[i] : k.zero();
}

template <class K>
bool is_monic(const K& k, const Pol<K>& a) {
  return !a.c.empty() && a.c.back() == k.one();
}

template <class K>
Pol<K> add(const K& k, const Pol<K>& a, const Pol<K>& b) {
  Pol<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = k.add(coeff(k, a, int(i)), coeff(k, b, int(i)));
  normalize(k, r);
  return r;
}

template <class K>
Pol<K> sub(const K& k, const Pol<K>& a, const Pol<K>& b) {
  Pol<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = k.sub(coeff(k, a, int(i)), coeff(k, b, int(i)));
  normalize(k, r);
  return r;
}

template <class K>
Pol<K> neg(const K& k, const Pol<K>& a) {
  Pol<K> r = a;
  for (auto& e : r.c) e = k.neg(e);
  return r;
}

template <class K>
Pol<K> mul(const K& k, const Pol<K>& a, const Pol<K>& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Pol<K> r;
  r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (k.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (!k.is_zero(b.c[j]))
        r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  }
  normalize(k, r);
  return r;
}

template <class K>
Pol<K> scale(const K& k, const Pol<K>& a, typename K::Elem e) {
  if (k.is_zero(e)) return {};
  Pol<K> r = a;
  for (auto& x : r.c) x = k.mul(x, e);
  return r;
}

template <class K>
std::pair<Pol<K>, Pol<K>> divmod(const K& k, Pol<K> a, const Pol<K>& b) {
  if (is_zero(b)) throw std::domain_error("poly: division by zero polynomial");
  int db = deg(b);
  auto lb_inv = k.inv(b.c.back());
  Pol<K> q;
  if (deg(a) >= db) q.c.assign(deg(a) - db + 1, k.zero());
  for (int i = deg(a); i >= db; --i) {
    auto f = k.mul(a.c[i], lb_inv);
    if (k.is_zero(f)) continue;
    q.c[i - db] = f;
    for (int j = 0; j <= db; ++j)
      a.c[i - db + j] = k.sub(a.c[i - db + j], k.mul(f, b.c[j]));
  }
  normalize(k, q);
  normalize(k, a);
  return {q, a};
}

template <class K>
Pol<K> mod(const K& k, const Pol<K>& a, const Pol<K>& b) {
  return divmod(k, a, b).second;
}

template <class K>
Pol<K> div_exact(const K& k, const Pol<K>& a, const Pol<K>& b) {
  auto [q, r] = divmod(k, a, b);
  if (!is_zero(r)) throw std::domain_error("poly: division is not exact");
  return q;
}

template <class K>
bool divides(const K& k, const Pol<K>& b, const Pol<K>& a) {
  return is_zero(mod(k, a, b));
}

template <class K>
Pol<K> make_monic(const K& k, const Pol<K>& a) {
  if (is_zero(a)) return a;
  return scale(k, a, k.inv(a.c.back()));
}

/// Monic gcd.
template <class K>
Pol<K> gcd(const K& k, Pol<K> a, Pol<K> b) {
  while (!is_zero(b)) {
    auto r = mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(k, a);
}

/// g, u, v with g = gcd monic and u*a + v*b = g.
template <class K>
void ext_gcd(const K& k, const Pol<K>& a, const Pol<K>& b, Pol<K>& g, Pol<K>& u,
             Pol<K>& v) {
  Pol<K> r0 = a, r1 = b;
  Pol<K> s0 = one(k), s1 = zero(k);
  Pol<K> t0 = zero(k), t1 = one(k);
  while (!is_zero(r1)) {
    auto [q, r2] = divmod(k, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    auto s2 = sub(k, s0, mul(k, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = sub(k, t0, mul(k, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!is_zero(r0)) {
    auto linv = k.inv(r0.c.back());
    g = scale(k, r0, linv);
    u = scale(k, s0, linv);
    v = scale(k, t0, linv);
  } else {
    g = u = v = zero(k);
  }
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
template <class K>
Pol<K> inv_mod(const K& k, const Pol<K>& a, const Pol<K>& m) {
  Pol<K> g, u, v;
  ext_gcd(k, a, m, g, u, v);
  if (deg(g) != 0) throw std::domain_error("poly: element not invertible modulo m");
  return mod(k, u, m);
}

template <class K>
Pol<K> mul_mod(const K& k, const Pol<K>& a, const Pol<K>& b, const Pol<K>& m) {
  return mod(k, mul(k, a, b), m);
}

template <class K>
Pol<K> pow_mod(const K& k, Pol<K> a, std::uint64_t e, const Pol<K>& m) {
  Pol<K> acc = mod(k, one(k), m);
  a = mod(k, a, m);
  while (e) {
    if (e & 1) acc = mul_mod(k, acc, a, m);
    a = mul_mod(k, a, a, m);
    e >>= 1;
  }
  return acc;
}

/// a^(|K|^j) mod m by chaining j successive |K|-th powers.
template <class K>
Pol<K> pow_mod_q_tower(const K& k, Pol<K> a, int j, const Pol<K>& m) {
  for (int i = 0; i < j; ++i) a = pow_mod(k, a, k.size(), m);
  return a;
}

// n as an element of K (characteristic-p reduction).
template <class K>
typename K::Elem int_in(const K& k, std::size_t n) {
  auto e = k.zero();
  auto o = k.one();
  for (std::size_t i = 0; i < n % std::size_t(k.p()); ++i) e = k.add(e, o);
  return e;
}

template <class K>
Pol<K> derivative(const K& k, const Pol<K>& a) {
  Pol<K> r;
  if (deg(a) < 1) return r;
  r.c.resize(a.c.size() - 1, k.zero());
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = k.mul(a.c[i], int_in(k, i));
  normalize(k, r);
  return r;
}

template <class K>
typename K::Elem eval(const K& k, const Pol<K>& a, const typename K::Elem& x) {
  auto acc = k.zero();
  for (int i = deg(a); i >= 0; --i) acc = k.add(k.mul(acc, x), a.c[i]);
  return acc;
}

/// Canonical order: by degree, then lexicographically on the coefficient
/// index sequence, low-to-high.
template <class K>
bool less(const K& k, const Pol<K>& a, const Pol<K>& b) {
  if (deg(a) != deg(b)) return deg(a) < deg(b);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    auto ia = k.index_of(a.c[i]), ib = k.index_of(b.c[i]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Irreducibility and enumeration

/// Rabin's test: g irreducible over K iff x^{Q^d} = x (mod g) and
/// gcd(x^{Q^{d/l}} - x, g) = 1 for every prime l | d.
template <class K>
bool is_irreducible(const K& k, const Pol<K>& g) {
  int d = deg(g);
  if (d < 1) return false;
  if (d == 1) return true;
  Pol<K> x = monomial(k, k.one(), 1);
  Pol<K> xq = pow_mod_q_tower(k, x, d, g);
  if (!(xq == mod(k, x, g))) return false;
  int rem = d;
  for (int l = 2; l <= rem; ++l) {
    if (rem % l != 0) continue;
    while (rem % l == 0) rem /= l;
    Pol<K> h = pow_mod_q_tower(k, x, d / l, g);
    if (deg(gcd(k, sub(k, h, x), g)) != 0) return false;
  }
  return true;
}

/// All monic polynomials of degree d, in index order of the coefficient
/// vector (c_0 varies fastest).
template <class K>
std::vector<Pol<K>> monic_of_degree(const K& k, int d) {
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= k.size();
    if (count > (std::uint64_t(1) << 22))
      throw std::domain_error("poly: monic enumeration too large");
  }
  std::vector<Pol<K>> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Pol<K> g;
    g.c.resize(d + 1, k.zero());
    std::uint64_t v = idx;
    for (int i = 0; i < d; ++i) {
      g.c[i] = k.element(v % k.size());
      v /= k.size();
    }
    g.c[d] = k.one();
    out.push_back(std::move(g));
  }
  return out;
}

template <class K>
std::vector<Pol<K>> monic_irreducibles_of_degree(const K& k, int d) {
  std::vector<Pol<K>> out;
  for (auto& g : monic_of_degree(k, d))
    if (is_irreducible(k, g)) out.push_back(std::move(g));
  return out;
}

/// First monic irreducible of degree d in enumeration order.
template <class K>
Pol<K> first_irreducible(const K& k, int d) {
  for (auto& g : monic_of_degree(k, d))
    if (is_irreducible(k, g)) return g;
  throw std::logic_error("poly: no irreducible of requested degree");  // unreachable
}

// ---------------------------------------------------------------------------
// Factorization: squarefree split, distinct-degree, equal-degree.

template <class K>
using Factorization = std::vector<std::pair<Pol<K>, int>>;

namespace detail {

template <class K>
Pol<K> pth_root_poly(const K& k, const Pol<K>& a) {
  // a = sum c_i x^{pi}  ->  sum c_i^{1/p} x^i
  Pol<K> r;
  int p = k.p();
  r.c.assign(deg(a) / p + 1, k.zero());
  for (int i = 0; i * p <= deg(a); ++i) r.c[i] = k.pth_root(coeff(k, a, i * p));
  normalize(k, r);
  return r;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Equal-degree splitting of a monic squarefree product of irreducibles all
/// of degree d. Candidates come from a fixed-seed generator, so runs are
/// reproducible; a low-degree sweep is not used because structured inputs
/// (additive polynomials) make whole degree ranges non-splitting.
template <class K>
void equal_degree(const K& k, const Pol<K>& f, int d, std::vector<Pol<K>>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  int p = k.p();
  // m with |K|^d = p^m: residue fields of the factors have p^m elements.
  int m = d;
  {
    std::uint64_t s = k.size();
    int log_p = 0;
    while (s > 1) {
      s /= std::uint64_t(p);
      ++log_p;
    }
    m = d * log_p;
  }
  std::uint64_t rng = 0x00d1a95ba1a55e5eULL + std::uint64_t(deg(f));
  for (int attempt = 0;; ++attempt) {
    if (attempt > 20000)
      throw std::logic_error("poly: equal-degree split not found");  // unreachable
    Pol<K> a;
    {
      a.c.assign(deg(f), k.zero());
      for (int pos = 0; pos < deg(f); ++pos)
        a.c[pos] = k.element(splitmix64(rng) % k.size());
      normalize(k, a);
    }
    if (deg(a) < 1) continue;  // constants never split
    Pol<K> b;
    if (p == 2) {
      // Trace map to F_2: a + a^2 + a^4 + ... (m terms).
      Pol<K> t = mod(k, a, f), s = t;
      for (int i = 1; i < m; ++i) {
        s = mul_mod(k, s, s, f);
        t = add(k, t, s);
      }
      b = t;
    } else {
      // a^{(|K|^d - 1)/2} - 1, with the exponent split as
      // (1 + Q + ... + Q^{d-1}) * (Q-1)/2 to stay within 64 bits.
      Pol<K> norm = mod(k, a, f), acc = norm;
      for (int i = 1; i < d; ++i) {
        acc = pow_mod(k, acc, k.size(), f);
        acc = mul_mod(k, acc, norm, f);
      }
      b = pow_mod(k, acc, (k.size() - 1) / 2, f);
      b = sub(k, b, one(k));
    }
    Pol<K> g = gcd(k, b, f);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(k, g, d, out);
      equal_degree(k, div_exact(k, f, g), d, out);
      return;
    }
  }
}

/// Distinct-degree stage on a monic squarefree f.
template <class K>
void distinct_degree(const K& k, Pol<K> f, std::vector<Pol<K>>& out) {
  Pol<K> x = monomial(k, k.one(), 1);
  Pol<K> h = mod(k, x, f);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = pow_mod(k, h, k.size(), f);
    Pol<K> g = gcd(k, sub(k, h, x), f);
    if (deg(g) > 0) {
      equal_degree(k, g, d, out);
      f = div_exact(k, f, g);
      h = mod(k, h, f);
    }
  }
  if (deg(f) > 0) out.push_back(f);
}

template <class K>
void factor_squarefree_monic(const K& k, const Pol<K>& f, int outer_mult,
                             Factorization<K>& out) {
  std::vector<Pol<K>> irr;
  distinct_degree(k, f, irr);
  for (auto& g : irr) out.emplace_back(std::move(g), outer_mult);
}

template <class K>
void factor_monic(const K& k, Pol<K> f, int mult, Factorization<K>& out) {
  if (deg(f) == 0) return;
  Pol<K> d = derivative(k, f);
  if (is_zero(d)) {
    // f = h(x^p); recurse on the p-th root with multiplicity * p.
    factor_monic(k, pth_root_poly(k, f), mult * k.p(), out);
    return;
  }
  Pol<K> c = gcd(k, f, d);
  Pol<K> w = div_exact(k, f, c);
  // w is the product of all distinct factors with multiplicity not divisible by p.
  int i = 1;
  while (deg(w) > 0) {
    Pol<K> y = gcd(k, w, c);
    Pol<K> layer = div_exact(k, w, y);  // factors of exact multiplicity i
    if (deg(layer) > 0) factor_squarefree_monic(k, layer, mult * i, out);
    w = y;
    c = div_exact(k, c, y);
    ++i;
  }
  if (deg(c) > 0) factor_monic(k, c, mult, out);  // multiplicities divisible by p
}

}  // namespace detail

/// Full factorization of g != 0 into monic irreducibles with multiplicities,
/// sorted canonically; the product of the factors times lead(g) equals g.
template <class K>
Factorization<K> factor(const K& k, const Pol<K>& g) {
  if (is_zero(g)) throw std::domain_error("poly: cannot factor the zero polynomial");
  Factorization<K> out;
  detail::factor_monic(k, make_monic(k, g), 1, out);
  // Merge duplicates (the squarefree split already separates multiplicities,
  // but the x^p descent can reintroduce equal factors).
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return less(k, a.first, b.first);
  });
  Factorization<K> merged;
  for (auto& fm : out) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(std::move(fm));
  }
  return merged;
}

template <class K>
std::string to_string(const K& k, const Pol<K>& a, const std::string& var) {
  if (is_zero(a)) return "0";
  std::string s;
  for (int i = 0; i <= deg(a); ++i) {
    if (k.is_zero(a.c[i])) continue;
    if (!s.empty()) s += " + ";
    std::string cs = k.to_string(a.c[i]);
    if (i == 0) {
      s += cs;
    } else {
      if (cs == "1")
        s += var;
      else
        s += cs + "*" + var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace dyngal::poly

#endif
