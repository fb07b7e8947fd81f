#include "dyngal/carlitz.hpp"

#include <stdexcept>

namespace dyngal::carlitz {

namespace P = dyngal::poly;

TwistedPoly tw_zero(const gf::Field&) { return {}; }

TwistedPoly tw_one(const gf::Field& k) { return TwistedPoly{{ff::rf_one(k)}}; }

TwistedPoly tw_constant(const gf::Field& k, const RatFunc& c) {
  TwistedPoly a{{c}};
  tw_normalize(a);
  (void)k;
  return a;
}

void tw_normalize(TwistedPoly& a) {
  while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
}

TwistedPoly skew_add(const gf::Field& k, const TwistedPoly& a, const TwistedPoly& b) {
  TwistedPoly c;
  c.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), ff::rf_zero(k));
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (i < a.coeffs.size()) c.coeffs[i] = ff::add(k, c.coeffs[i], a.coeffs[i]);
    if (i < b.coeffs.size()) c.coeffs[i] = ff::add(k, c.coeffs[i], b.coeffs[i]);
  }
  tw_normalize(c);
  return c;
}

TwistedPoly skew_mul(const gf::Field& k, const TwistedPoly& a, const TwistedPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  TwistedPoly c;
  c.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1, ff::rf_zero(k));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    // tau^i b_j = b_j^{q^i} tau^i
    long long qi = 1;
    for (std::size_t e = 0; e < i; ++e) qi *= k.q();
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      RatFunc term = ff::mul(k, a.coeffs[i], ff::pow(k, b.coeffs[j], qi));
      c.coeffs[i + j] = ff::add(k, c.coeffs[i + j], term);
    }
  }
  tw_normalize(c);
  return c;
}

RatFunc additive_eval(const gf::Field& k, const TwistedPoly& a, const RatFunc& x) {
  RatFunc acc = ff::rf_zero(k);
  RatFunc xq = x;  // x^{q^i}
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i > 0) xq = ff::pow(k, xq, k.q());
    if (!a.coeffs[i].is_zero()) acc = ff::add(k, acc, ff::mul(k, a.coeffs[i], xq));
  }
  return acc;
}

TwistedPoly carlitz_phi(const gf::Field& k, const Poly& M) {
  TwistedPoly t_plus_tau;
  t_plus_tau.coeffs = {ff::rf_t(k), ff::rf_one(k)};
  TwistedPoly acc = tw_zero(k);
  for (int i = P::deg(M); i >= 0; --i) {
    acc = skew_mul(k, acc, t_plus_tau);
    acc = skew_add(k, acc, tw_constant(k, ff::rf_constant(k, M.c[i])));
  }
  return acc;
}

RatFunc affine_eval(const gf::Field& k, const AffinePoly& a, const RatFunc& x) {
  return ff::add(k, additive_eval(k, a.linear, x), a.constant);
}

AffinePoly iterate_f(const gf::Field& k, const RatFunc& t0, const RatFunc& s0, int n) {
  if (t0.is_zero()) throw std::domain_error("carlitz: t0 must be nonzero");
  if (n < 1) throw std::domain_error("carlitz: n must be positive");
  long long size = n;
  for (int i = 0; i < n; ++i) {
    size *= k.q();
    if (size > kIterateSizeBound) throw std::domain_error("carlitz: n q^n exceeds size bound");
  }
  TwistedPoly L;
  L.coeffs = {t0, ff::rf_one(k)};
  AffinePoly f{L, s0};
  AffinePoly fn = f;
  for (int i = 2; i <= n; ++i) {
    // f^i = L(f^{i-1}) + s0 in both components.
    fn.linear = skew_mul(k, L, fn.linear);
    fn.constant = affine_eval(k, AffinePoly{L, s0}, fn.constant);
  }
  return fn;
}

std::vector<RatFunc> to_dense(const gf::Field& k, const AffinePoly& a) {
  long long deg = 1;
  for (int i = 0; i < a.linear.tau_deg(); ++i) deg *= k.q();
  std::vector<RatFunc> dense(std::size_t(deg) + 1, ff::rf_zero(k));
  long long qi = 1;
  for (int i = 0; i <= a.linear.tau_deg(); ++i) {
    dense[std::size_t(qi)] = ff::add(k, dense[std::size_t(qi)], a.linear.coeffs[i]);
    qi *= k.q();
  }
  dense[0] = ff::add(k, dense[0], a.constant);
  return dense;
}

namespace {

int poly_degree(const std::vector<RatFunc>& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (!f[i].is_zero()) return i;
  return -1;
}

}  // namespace

RatFunc resultant(const gf::Field& k, const std::vector<RatFunc>& f,
                  const std::vector<RatFunc>& g) {
  int n = poly_degree(f), m = poly_degree(g);
  if (n < 0 || m < 0) throw std::domain_error("carlitz: resultant of zero polynomial");
  int size = n + m;
  if (size == 0) return ff::rf_one(k);
  // Sylvester matrix: m shifted rows of f, then n shifted rows of g.
  std::vector<std::vector<RatFunc>> a(size, std::vector<RatFunc>(size, ff::rf_zero(k)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[i][i + j] = f[n - j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[m + i][i + j] = g[m - j];
  // Gaussian elimination over F_q(t).
  RatFunc det = ff::rf_one(k);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int row = col; row < size; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return ff::rf_zero(k);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = ff::neg(k, det);
    }
    det = ff::mul(k, det, a[col][col]);
    RatFunc inv = ff::inv(k, a[col][col]);
    for (int row = col + 1; row < size; ++row) {
      if (a[row][col].is_zero()) continue;
      RatFunc factor = ff::mul(k, a[row][col], inv);
      for (int j = col; j < size; ++j)
        a[row][j] = ff::sub(k, a[row][j], ff::mul(k, factor, a[col][j]));
    }
  }
  return det;
}

DiscResult disc_check(const gf::Field& k, const RatFunc& t0, const RatFunc& s0, int n) {
  AffinePoly fn = iterate_f(k, t0, s0, n);
  std::vector<RatFunc> dense = to_dense(k, fn);
  long long N = poly_degree(dense);

  // Formal derivative; for these iterates it collapses to the constant t0^n.
  std::vector<RatFunc> deriv(std::size_t(N), ff::rf_zero(k));
  for (long long i = 1; i <= N; ++i) {
    int c = int(i % k.p());
    RatFunc term = ff::rf_zero(k);
    for (int rep = 0; rep < c; ++rep) term = ff::add(k, term, dense[std::size_t(i)]);
    deriv[std::size_t(i - 1)] = term;
  }

  RatFunc res = resultant(k, dense, deriv);
  bool flip = ((N * (N - 1) / 2) % 2) != 0;
  RatFunc disc = flip ? ff::neg(k, res) : res;

  RatFunc expected = ff::pow(k, t0, n * N);
  DiscResult out{disc, expected, false, 0};
  if (disc == expected) {
    out.matches = true;
    out.sign = 1;
  } else if (disc == ff::neg(k, expected)) {
    out.matches = true;
    out.sign = -1;
  }
  return out;
}

bool monomial_support_check(const gf::Field& k, const RatFunc& t0, const RatFunc& s0,
                            int n) {
  std::vector<RatFunc> dense = to_dense(k, iterate_f(k, t0, s0, n));
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].is_zero()) continue;
    if (i == 0) continue;
    std::size_t v = i;
    while (v % std::size_t(k.p()) == 0) v /= std::size_t(k.p());
    if (v != 1) return false;
  }
  return true;
}

std::string to_string(const gf::Field& k, const TwistedPoly& a) {
  if (a.coeffs.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string cs = ff::to_string(k, a.coeffs[i]);
    if (i == 0) {
      s += cs;
    } else {
      if (cs == "1")
        s += "tau";
      else if (cs.find(' ') != std::string::npos && cs.front() != '(')
        s += "(" + cs + ")*tau";
      else
        s += cs + "*tau";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::string to_string(const gf::Field& k, const AffinePoly& a) {
  std::vector<RatFunc> dense = to_dense(k, a);
  std::string s;
  for (int i = int(dense.size()) - 1; i >= 0; --i) {
    if (dense[std::size_t(i)].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string cs = ff::to_string(k, dense[std::size_t(i)]);
    if (i == 0) {
      s += cs;
    } else {
      if (cs == "1")
        s += "x";
      else if (cs.find(' ') != std::string::npos && cs.front() != '(')
        s += "(" + cs + ")*x";
      else
        s += cs + "*x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace dyngal::carlitz
