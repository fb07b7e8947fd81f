#include "dyngal/funcfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyngal::ff {

namespace P = dyngal::poly;

RatFunc make_ratfunc(const gf::Field& k, Poly num, Poly den) {
  if (P::is_zero(den)) throw std::domain_error("funcfield: zero denominator");
  if (P::is_zero(num)) return RatFunc{Poly{}, P::one(k)};
  Poly g = P::gcd(k, num, den);
  if (P::deg(g) > 0) {
    num = P::div_exact(k, num, g);
    den = P::div_exact(k, den, g);
  }
  auto lead_inv = k.inv(den.c.back());
  num = P::scale(k, num, lead_inv);
  den = P::scale(k, den, lead_inv);
  return RatFunc{std::move(num), std::move(den)};
}

RatFunc from_poly(const gf::Field& k, Poly p) {
  return RatFunc{std::move(p), P::one(k)};
}

RatFunc rf_zero(const gf::Field& k) { return RatFunc{Poly{}, P::one(k)}; }
RatFunc rf_one(const gf::Field& k) { return RatFunc{P::one(k), P::one(k)}; }

RatFunc rf_constant(const gf::Field& k, gf::Fq c) {
  return RatFunc{P::constant(k, c), P::one(k)};
}

RatFunc rf_t(const gf::Field& k) {
  return RatFunc{P::monomial(k, k.one(), 1), P::one(k)};
}

RatFunc add(const gf::Field& k, const RatFunc& a, const RatFunc& b) {
  Poly num = P::add(k, P::mul(k, a.num, b.den), P::mul(k, b.num, a.den));
  return make_ratfunc(k, std::move(num), P::mul(k, a.den, b.den));
}

RatFunc sub(const gf::Field& k, const RatFunc& a, const RatFunc& b) {
  Poly num = P::sub(k, P::mul(k, a.num, b.den), P::mul(k, b.num, a.den));
  return make_ratfunc(k, std::move(num), P::mul(k, a.den, b.den));
}

RatFunc neg(const gf::Field& k, const RatFunc& a) {
  return RatFunc{P::neg(k, a.num), a.den};
}

RatFunc mul(const gf::Field& k, const RatFunc& a, const RatFunc& b) {
  return make_ratfunc(k, P::mul(k, a.num, b.num), P::mul(k, a.den, b.den));
}

RatFunc inv(const gf::Field& k, const RatFunc& a) {
  if (a.is_zero()) throw std::domain_error("funcfield: inverse of zero");
  return make_ratfunc(k, a.den, a.num);
}

RatFunc div(const gf::Field& k, const RatFunc& a, const RatFunc& b) {
  return mul(k, a, inv(k, b));
}

RatFunc pow(const gf::Field& k, const RatFunc& a, long long e) {
  if (e < 0) return pow(k, inv(k, a), -e);
  RatFunc acc = rf_one(k);
  RatFunc base = a;
  auto u = std::uint64_t(e);
  while (u) {
    if (u & 1) acc = mul(k, acc, base);
    base = mul(k, base, base);
    u >>= 1;
  }
  return acc;
}

std::string to_string(const gf::Field& k, const RatFunc& a) {
  if (P::deg(a.den) == 0) return P::to_string(k, a.num, "t");
  return "(" + P::to_string(k, a.num, "t") + ")/(" + P::to_string(k, a.den, "t") + ")";
}

std::string to_string(const gf::Field& k, const Place& v) {
  if (v.is_infinity()) return "infinity";
  return P::to_string(k, *v.finite, "t");
}

bool place_less(const gf::Field& k, const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
  return P::less(k, *a.finite, *b.finite);
}

namespace {

int multiplicity(const gf::Field& k, Poly a, const Poly& p) {
  int m = 0;
  while (P::deg(a) >= P::deg(p)) {
    auto [q, r] = P::divmod(k, a, p);
    if (!P::is_zero(r)) break;
    ++m;
    a = std::move(q);
  }
  return m;
}

}  // namespace

int valuation(const gf::Field& k, const RatFunc& u, const Place& v) {
  if (u.is_zero()) throw std::domain_error("funcfield: valuation of zero");
  if (v.is_infinity()) return P::deg(u.den) - P::deg(u.num);
  return multiplicity(k, u.num, *v.finite) - multiplicity(k, u.den, *v.finite);
}

PartialFractions partial_fractions(const gf::Field& k, const RatFunc& u) {
  PartialFractions out;
  auto [q, r] = P::divmod(k, u.num, u.den);
  out.poly_part = std::move(q);
  if (P::is_zero(r)) return out;

  auto factors = P::factor(k, u.den);  // den is monic
  for (auto& [p, e] : factors) {
    Poly pe = P::one(k);
    for (int i = 0; i < e; ++i) pe = P::mul(k, pe, p);
    Poly rest = P::div_exact(k, u.den, pe);
    // local numerator A = r * rest^{-1} mod p^e; then expand A in base p.
    Poly a = P::mul_mod(k, P::mod(k, r, pe), P::inv_mod(k, rest, pe), pe);
    std::vector<Poly> numerators(e);  // numerators[m-1] multiplies p^{-m}
    for (int j = 0; j < e && !P::is_zero(a); ++j) {
      auto [aq, ar] = P::divmod(k, a, p);
      numerators[e - 1 - j] = std::move(ar);
      a = std::move(aq);
    }
    out.pole_parts.emplace_back(p, std::move(numerators));
  }
  std::sort(out.pole_parts.begin(), out.pole_parts.end(),
            [&](const auto& a, const auto& b) { return P::less(k, a.first, b.first); });
  return out;
}

RatFunc recombine(const gf::Field& k, const PartialFractions& pf) {
  RatFunc acc = from_poly(k, pf.poly_part);
  for (const auto& [p, numerators] : pf.pole_parts) {
    Poly pm = P::one(k);
    for (std::size_t m = 1; m <= numerators.size(); ++m) {
      pm = P::mul(k, pm, p);
      if (P::is_zero(numerators[m - 1])) continue;
      acc = add(k, acc, make_ratfunc(k, numerators[m - 1], pm));
    }
  }
  return acc;
}

std::vector<std::pair<Place, int>> divisor(const gf::Field& k, const RatFunc& u) {
  if (u.is_zero()) throw std::domain_error("funcfield: divisor of zero");
  std::vector<std::pair<Place, int>> out;
  for (auto& [p, e] : P::factor(k, u.num))
    if (P::deg(p) >= 1) out.emplace_back(Place::at(p), e);
  for (auto& [p, e] : P::factor(k, u.den))
    if (P::deg(p) >= 1) out.emplace_back(Place::at(p), -e);
  int vinf = P::deg(u.den) - P::deg(u.num);
  if (vinf != 0) out.emplace_back(Place::infinity(), vinf);
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return place_less(k, a.first, b.first); });
  return out;
}

gf::ExtField::Elem eval_at(const gf::Field& k, const gf::ExtField& ext,
                           const RatFunc& u, const gf::ExtField::Elem& a) {
  auto horner = [&](const Poly& p) {
    auto acc = ext.zero();
    for (int i = P::deg(p); i >= 0; --i)
      acc = ext.add(ext.mul(acc, a), ext.embed(p.c[i]));
    return acc;
  };
  (void)k;
  auto d = horner(u.den);
  if (ext.is_zero(d)) throw std::domain_error("funcfield: denominator vanishes at point");
  return ext.mul(horner(u.num), ext.inv(d));
}

// ---------------------------------------------------------------------------
// Bivariate polynomials

bool is_monic_in_x(const gf::Field& k, const BivarPoly& f) {
  return !f.xc.empty() && f.xc.back() == P::one(k);
}

int tdeg(const BivarPoly& f) {
  int d = 0;
  for (const auto& c : f.xc) d = std::max(d, P::deg(c));
  return d;
}

BivarPoly bivar_mul(const gf::Field& k, const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  if (a.xc.empty() || b.xc.empty()) return r;
  r.xc.assign(a.xc.size() + b.xc.size() - 1, Poly{});
  for (std::size_t i = 0; i < a.xc.size(); ++i)
    for (std::size_t j = 0; j < b.xc.size(); ++j)
      r.xc[i + j] = P::add(k, r.xc[i + j], P::mul(k, a.xc[i], b.xc[j]));
  while (!r.xc.empty() && P::is_zero(r.xc.back())) r.xc.pop_back();
  return r;
}

BivarPoly bivar_div_exact(const gf::Field& k, const BivarPoly& a, const BivarPoly& b) {
  if (!is_monic_in_x(k, b)) throw std::domain_error("funcfield: divisor must be monic in x");
  BivarPoly rem = a;
  int db = b.xdeg();
  std::vector<Poly> q(std::max(0, a.xdeg() - db + 1));
  for (int i = rem.xdeg(); i >= db; --i) {
    Poly c = rem.xc[i];
    if (P::is_zero(c)) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j)
      rem.xc[i - db + j] = P::sub(k, rem.xc[i - db + j], P::mul(k, c, b.xc[j]));
  }
  for (const auto& c : rem.xc)
    if (!P::is_zero(c)) throw std::domain_error("funcfield: bivariate division not exact");
  BivarPoly out;
  out.xc = std::move(q);
  while (!out.xc.empty() && P::is_zero(out.xc.back())) out.xc.pop_back();
  return out;
}

std::string to_string(const gf::Field& k, const BivarPoly& f) {
  if (f.xc.empty()) return "0";
  std::string s;
  for (int i = f.xdeg(); i >= 0; --i) {
    if (P::is_zero(f.xc[i])) continue;
    if (!s.empty()) s += " + ";
    std::string cs = P::to_string(k, f.xc[i], "t");
    if (i == 0) {
      s += cs;
    } else {
      if (cs == "1")
        s += "x";
      else if (cs.find(' ') != std::string::npos)
        s += "(" + cs + ")*x";
      else
        s += cs + "*x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

ExtPoly specialize(const gf::Field& k, const gf::ExtField& ext, const BivarPoly& f,
                   const gf::ExtField::Elem& a) {
  ExtPoly r;
  r.c.reserve(f.xc.size());
  for (const auto& c : f.xc) {
    auto acc = ext.zero();
    for (int i = P::deg(c); i >= 0; --i)
      acc = ext.add(ext.mul(acc, a), ext.embed(c.c[i]));
    r.c.push_back(std::move(acc));
  }
  (void)k;
  P::normalize(ext, r);
  return r;
}

namespace {

// --- gcd of x-polynomials over F_q(t), used for the squarefree precheck ---

using XR = std::vector<RatFunc>;  // x-poly with rational-function coefficients

void xr_normalize(XR& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

XR xr_mod(const gf::Field& k, XR a, const XR& b) {
  RatFunc lead_inv = inv(k, b.back());
  while (a.size() >= b.size()) {
    RatFunc f = mul(k, a.back(), lead_inv);
    std::size_t off = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[off + j] = sub(k, a[off + j], mul(k, f, b[j]));
    a.pop_back();
    xr_normalize(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

int xr_gcd_degree(const gf::Field& k, XR a, XR b) {
  xr_normalize(a);
  xr_normalize(b);
  while (!b.empty()) {
    XR r = xr_mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return int(a.size()) - 1;
}

// --- truncated power series over an extension field, for Hensel lifting ---

using E = gf::ExtField;
using EElem = E::Elem;
using Series = std::vector<EElem>;  // fixed length = precision, low-to-high in T
using SPoly = std::vector<Series>;  // x-poly with series coefficients

struct SeriesCtx {
  const E* ext;
  int prec;

  Series zero() const { return Series(prec, ext->zero()); }
  Series from_elem(const EElem& e) const {
    Series s = zero();
    s[0] = e;
    return s;
  }
  bool is_zero(const Series& a) const {
    for (const auto& c : a)
      if (!ext->is_zero(c)) return false;
    return true;
  }
  Series add(const Series& a, const Series& b) const {
    Series c(prec);
    for (int i = 0; i < prec; ++i) c[i] = ext->add(a[i], b[i]);
    return c;
  }
  Series sub(const Series& a, const Series& b) const {
    Series c(prec);
    for (int i = 0; i < prec; ++i) c[i] = ext->sub(a[i], b[i]);
    return c;
  }
  Series mul(const Series& a, const Series& b) const {
    Series c = zero();
    for (int i = 0; i < prec; ++i) {
      if (ext->is_zero(a[i])) continue;
      for (int j = 0; i + j < prec; ++j)
        if (!ext->is_zero(b[j]))
          c[i + j] = ext->add(c[i + j], ext->mul(a[i], b[j]));
    }
    return c;
  }
  /// Inverse of a series with unit constant term.
  Series inv(const Series& a) const {
    Series r = zero();
    r[0] = ext->inv(a[0]);
    for (int i = 1; i < prec; ++i) {
      auto acc = ext->zero();
      for (int j = 0; j < i; ++j) acc = ext->add(acc, ext->mul(r[j], a[i - j]));
      r[i] = ext->neg(ext->mul(acc, r[0]));
    }
    return r;
  }
};

void sp_normalize(const SeriesCtx& S, SPoly& a) {
  while (!a.empty() && S.is_zero(a.back())) a.pop_back();
}

SPoly sp_add(const SeriesCtx& S, const SPoly& a, const SPoly& b) {
  SPoly c(std::max(a.size(), b.size()), S.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] = S.add(c[i], a[i]);
    if (i < b.size()) c[i] = S.add(c[i], b[i]);
  }
  sp_normalize(S, c);
  return c;
}

SPoly sp_sub(const SeriesCtx& S, const SPoly& a, const SPoly& b) {
  SPoly c(std::max(a.size(), b.size()), S.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] = S.add(c[i], a[i]);
    if (i < b.size()) c[i] = S.sub(c[i], b[i]);
  }
  sp_normalize(S, c);
  return c;
}

SPoly sp_mul(const SeriesCtx& S, const SPoly& a, const SPoly& b) {
  if (a.empty() || b.empty()) return {};
  SPoly c(a.size() + b.size() - 1, S.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = S.add(c[i + j], S.mul(a[i], b[j]));
  sp_normalize(S, c);
  return c;
}

/// Division by a divisor whose leading series coefficient is a unit.
std::pair<SPoly, SPoly> sp_divmod(const SeriesCtx& S, SPoly a, const SPoly& b) {
  Series lead_inv = S.inv(b.back());
  SPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, S.zero());
  while (a.size() >= b.size()) {
    Series f = S.mul(a.back(), lead_inv);
    std::size_t off = a.size() - b.size();
    q[off] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = S.sub(a[off + j], S.mul(f, b[j]));
    a.pop_back();
    sp_normalize(S, a);
    if (a.size() < b.size()) break;
  }
  sp_normalize(S, q);
  return {q, a};
}

SPoly sp_from_extpoly(const SeriesCtx& S, const ExtPoly& p) {
  SPoly out;
  out.reserve(p.c.size());
  for (const auto& e : p.c) out.push_back(S.from_elem(e));
  return out;
}

/// f with t = T + a, as an x-poly with series-in-T coefficients.
SPoly sp_shift(const SeriesCtx& S, const BivarPoly& f, const EElem& a) {
  const E& ext = *S.ext;
  Series t_plus_a = S.zero();
  t_plus_a[0] = a;
  if (S.prec > 1) t_plus_a[1] = ext.one();
  SPoly out;
  out.reserve(f.xc.size());
  for (const auto& c : f.xc) {
    Series s = S.zero();
    for (int i = P::deg(c); i >= 0; --i)
      s = S.add(S.mul(s, t_plus_a), S.from_elem(ext.embed(c.c[i])));
    out.push_back(std::move(s));
  }
  sp_normalize(S, out);
  return out;
}

/// Quadratic Hensel lifting of the factor tree of F (monic in x) from its
/// specialization at T = 0 to full precision.
void hensel_tree(const SeriesCtx& S, const gf::ExtField& ext, const SPoly& F,
                 const std::vector<ExtPoly>& factors, std::size_t lo, std::size_t hi,
                 std::vector<SPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(F);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  ExtPoly g0 = P::one(ext), h0 = P::one(ext);
  for (std::size_t i = lo; i < mid; ++i) g0 = P::mul(ext, g0, factors[i]);
  for (std::size_t i = mid; i < hi; ++i) h0 = P::mul(ext, h0, factors[i]);
  ExtPoly gg, s0, u0;
  P::ext_gcd(ext, g0, h0, gg, s0, u0);
  if (P::deg(gg) != 0) throw std::logic_error("funcfield: lift factors not coprime");

  SPoly g = sp_from_extpoly(S, g0), h = sp_from_extpoly(S, h0);
  SPoly s = sp_from_extpoly(S, s0), u = sp_from_extpoly(S, u0);
  SPoly one{S.from_elem(S.ext->one())};

  for (int m = 1; m < S.prec; m *= 2) {
    // f == g*h (mod T^m), s*g + u*h == 1 (mod T^m); improve both to T^{2m}.
    SPoly e = sp_sub(S, F, sp_mul(S, g, h));
    auto [qd, r] = sp_divmod(S, sp_mul(S, s, e), h);
    h = sp_add(S, h, r);
    g = sp_add(S, g, sp_add(S, sp_mul(S, u, e), sp_mul(S, qd, g)));
    SPoly b = sp_sub(S, sp_add(S, sp_mul(S, s, g), sp_mul(S, u, h)), one);
    auto [q2, r2] = sp_divmod(S, sp_mul(S, s, b), h);
    s = sp_sub(S, s, r2);
    u = sp_sub(S, u, sp_add(S, sp_mul(S, u, b), sp_mul(S, q2, g)));
  }
  hensel_tree(S, ext, g, factors, lo, mid, out);
  hensel_tree(S, ext, h, factors, mid, hi, out);
}

/// Series coefficients back to polynomials in t over E (substitute T = t - a),
/// then down to F_q[t]; nullopt when some coefficient leaves the base field.
std::optional<BivarPoly> sp_to_base(const SeriesCtx& S, const gf::Field& k,
                                    const EElem& a, const SPoly& f) {
  const E& ext = *S.ext;
  ExtPoly t_minus_a;
  t_minus_a.c = {ext.neg(a), ext.one()};
  BivarPoly out;
  out.xc.reserve(f.size());
  for (const auto& series : f) {
    ExtPoly tp;  // polynomial in t over E
    for (int j = S.prec - 1; j >= 0; --j) {
      tp = P::add(ext, P::mul(ext, tp, t_minus_a), P::constant(ext, series[j]));
    }
    Poly c;
    c.c.reserve(tp.c.size());
    for (const auto& e : tp.c) {
      if (!ext.in_base(e)) return std::nullopt;
      c.c.push_back(ext.base_part(e));
    }
    P::normalize(k, c);
    out.xc.push_back(std::move(c));
  }
  while (!out.xc.empty() && P::is_zero(out.xc.back())) out.xc.pop_back();
  return out;
}

bool bivar_less(const gf::Field& k, const BivarPoly& a, const BivarPoly& b) {
  if (a.xdeg() != b.xdeg()) return a.xdeg() < b.xdeg();
  if (tdeg(a) != tdeg(b)) return tdeg(a) < tdeg(b);
  for (std::size_t i = 0; i < a.xc.size(); ++i) {
    if (a.xc[i] == b.xc[i]) continue;
    return P::less(k, a.xc[i], b.xc[i]);
  }
  return false;
}

}  // namespace

std::vector<BivarPoly> factor_bivariate(const gf::Field& k, const BivarPoly& f) {
  if (!is_monic_in_x(k, f)) throw std::invalid_argument("funcfield: f must be monic in x");
  int n = f.xdeg();
  if (n < 1) throw std::invalid_argument("funcfield: f must have positive x-degree");
  if (n == 1) return {f};

  // Squarefree over F_q(t): gcd with the x-derivative must be constant.
  {
    XR a, d;
    for (const auto& c : f.xc) a.push_back(from_poly(k, c));
    for (std::size_t i = 1; i < f.xc.size(); ++i) {
      Poly ci = P::scale(k, f.xc[i], P::int_in(k, i));
      d.push_back(from_poly(k, ci));
    }
    if (xr_gcd_degree(k, a, d) != 0)
      throw std::invalid_argument("funcfield: f is not squarefree over F_q(t)");
  }

  int prec = 2 * tdeg(f) + 1;

  for (int d = 1; d <= 6; ++d) {
    std::vector<gf::Fq> ext_mod;
    if (d == 1) {
      ext_mod = {0, 1};  // F_q itself, as the trivial extension F_q[u]/(u)
    } else {
      Poly m = P::first_irreducible(k, d);
      ext_mod.assign(m.c.begin(), m.c.end());
    }
    gf::ExtField ext(k, ext_mod);
    for (std::uint64_t ai = 0; ai < ext.size(); ++ai) {
      auto a = ext.element(ai);
      ExtPoly fa = specialize(k, ext, f, a);
      if (P::deg(fa) != n) continue;  // cannot happen for monic f; kept for safety
      ExtPoly fad = P::derivative(ext, fa);
      if (P::is_zero(fad) || P::deg(P::gcd(ext, fa, fad)) != 0) continue;

      auto factorization = P::factor(ext, fa);
      std::vector<ExtPoly> local;
      for (auto& [g, e] : factorization) {
        if (e != 1) throw std::logic_error("funcfield: squarefree specialization has multiplicity");
        local.push_back(std::move(g));
      }
      if (local.size() == 1) return {f};

      SeriesCtx S{&ext, prec};
      SPoly F = sp_shift(S, f, a);
      std::vector<SPoly> lifted;
      hensel_tree(S, ext, F, local, 0, local.size(), lifted);

      // Zassenhaus recombination over subsets of lifted factors.
      std::vector<BivarPoly> result;
      std::vector<std::size_t> active(lifted.size());
      for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
      BivarPoly cur = f;

      std::size_t s = 1;
      while (2 * s <= active.size()) {
        // Combinations of `active` of size s in lexicographic order.
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        bool removed = false;
        while (true) {
          SPoly prod{S.from_elem(ext.one())};
          for (std::size_t i : idx) prod = sp_mul(S, prod, lifted[active[i]]);
          auto cand = sp_to_base(S, k, a, prod);
          if (cand && is_monic_in_x(k, *cand)) {
            bool ok = true;
            BivarPoly quot;
            try {
              quot = bivar_div_exact(k, cur, *cand);
            } catch (const std::domain_error&) {
              ok = false;
            }
            if (ok) {
              result.push_back(*cand);
              cur = quot;
              std::vector<std::size_t> next_active;
              for (std::size_t i = 0, j = 0; i < active.size(); ++i) {
                if (j < s && idx[j] == i)
                  ++j;
                else
                  next_active.push_back(active[i]);
              }
              active = std::move(next_active);
              removed = true;
              break;
            }
          }
          // next combination
          int pos = int(s) - 1;
          while (pos >= 0 && idx[pos] == active.size() - s + pos) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (std::size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!removed) ++s;
      }
      if (!active.empty() || cur.xdeg() > 0) result.push_back(cur);

      // Exactness guard: the factors must multiply back to f.
      BivarPoly check;
      check.xc = {P::one(k)};
      for (const auto& g : result) check = bivar_mul(k, check, g);
      if (!(check == f)) throw std::logic_error("funcfield: recombination check failed");

      std::sort(result.begin(), result.end(),
                [&](const BivarPoly& x, const BivarPoly& y) { return bivar_less(k, x, y); });
      return result;
    }
  }
  throw std::runtime_error(
      "funcfield: no squarefree specialization of degree <= 6 (pathological input)");
}

std::vector<Poly> places_up_to(const gf::Field& k, int max_deg) {
  std::vector<Poly> out;
  for (int d = 1; d <= max_deg; ++d)
    for (auto& p : P::monic_irreducibles_of_degree(k, d)) out.push_back(std::move(p));
  return out;
}

}  // namespace dyngal::ff
