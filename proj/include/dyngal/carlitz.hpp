#ifndef DYNGAL_CARLITZ_HPP
#define DYNGAL_CARLITZ_HPP

#include <string>
#include <vector>

#include "dyngal/funcfield.hpp"

// Twisted polynomials F_q(t){tau} with tau a = a^q tau, the Carlitz module
// t -> t + tau, iteration of the affine polynomial f = x^q + t0 x + s0, and
// the discriminant of the iterates.

namespace dyngal::carlitz {

using ff::Poly;
using ff::RatFunc;

/// Additive polynomial sum c_i x^{q^i}, stored as the coefficient vector of
/// tau^i, low-to-high, normalized.
struct TwistedPoly {
  std::vector<RatFunc> coeffs;

  bool operator==(const TwistedPoly& o) const { return coeffs == o.coeffs; }
  int tau_deg() const { return int(coeffs.size()) - 1; }
};

TwistedPoly tw_zero(const gf::Field& k);
TwistedPoly tw_one(const gf::Field& k);
TwistedPoly tw_constant(const gf::Field& k, const RatFunc& c);
void tw_normalize(TwistedPoly& a);

TwistedPoly skew_add(const gf::Field& k, const TwistedPoly& a, const TwistedPoly& b);

/// Composition of additive maps: (sum a_i tau^i)(sum b_j tau^j) with the
/// relation tau b = b^q tau.
TwistedPoly skew_mul(const gf::Field& k, const TwistedPoly& a, const TwistedPoly& b);

/// The additive polynomial evaluated at x.
RatFunc additive_eval(const gf::Field& k, const TwistedPoly& a, const RatFunc& x);

/// Image of M under the Carlitz module t -> t + tau.
TwistedPoly carlitz_phi(const gf::Field& k, const Poly& M);

/// A(x) = linear(x) + constant.
struct AffinePoly {
  TwistedPoly linear;
  RatFunc constant;
};

RatFunc affine_eval(const gf::Field& k, const AffinePoly& a, const RatFunc& x);

/// f^n for f = x^q + t0 x + s0, via f^n = L^n + f^{n-1}(s0). Rejects t0 = 0,
/// n < 1 and n q^n beyond the size bound.
AffinePoly iterate_f(const gf::Field& k, const RatFunc& t0, const RatFunc& s0, int n);

inline constexpr long long kIterateSizeBound = 4096;  // bound on n * q^n

/// Dense x-coefficients of an affine polynomial (degree q^deg).
std::vector<RatFunc> to_dense(const gf::Field& k, const AffinePoly& a);

/// Resultant of two dense polynomials over F_q(t) (Sylvester determinant).
RatFunc resultant(const gf::Field& k, const std::vector<RatFunc>& f,
                  const std::vector<RatFunc>& g);

struct DiscResult {
  RatFunc disc;      // (-1)^{N(N-1)/2} Res(f^n, (f^n)')
  RatFunc expected;  // t0^{n q^n}
  bool matches;      // disc == +-expected
  int sign;          // +1 or -1 such that disc == sign * expected; 0 if no match
};

DiscResult disc_check(const gf::Field& k, const RatFunc& t0, const RatFunc& s0, int n);

/// Every monomial of f^n has degree 0 or a power of p.
bool monomial_support_check(const gf::Field& k, const RatFunc& t0, const RatFunc& s0,
                            int n);

std::string to_string(const gf::Field& k, const TwistedPoly& a);
std::string to_string(const gf::Field& k, const AffinePoly& a);

}  // namespace dyngal::carlitz

#endif
