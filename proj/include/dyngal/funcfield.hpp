#ifndef DYNGAL_FUNCFIELD_HPP
#define DYNGAL_FUNCFIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyngal/gf.hpp"
#include "dyngal/poly.hpp"

// Rational functions over F_q in the variable t, places and valuations,
// partial fractions, and monic-in-x bivariate factorization over F_q[t].

namespace dyngal::ff {

using Poly = poly::Pol<gf::Field>;
using ExtPoly = poly::Pol<gf::ExtField>;

/// Normalized fraction: den monic and nonzero, gcd(num, den) = 1,
/// zero represented as 0/1.
struct RatFunc {
  Poly num;
  Poly den;

  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool is_zero() const { return num.c.empty(); }
};

RatFunc make_ratfunc(const gf::Field& k, Poly num, Poly den);
RatFunc from_poly(const gf::Field& k, Poly p);
RatFunc rf_zero(const gf::Field& k);
RatFunc rf_one(const gf::Field& k);
RatFunc rf_constant(const gf::Field& k, gf::Fq c);
RatFunc rf_t(const gf::Field& k);

RatFunc add(const gf::Field& k, const RatFunc& a, const RatFunc& b);
RatFunc sub(const gf::Field& k, const RatFunc& a, const RatFunc& b);
RatFunc neg(const gf::Field& k, const RatFunc& a);
RatFunc mul(const gf::Field& k, const RatFunc& a, const RatFunc& b);
RatFunc div(const gf::Field& k, const RatFunc& a, const RatFunc& b);
RatFunc inv(const gf::Field& k, const RatFunc& a);
RatFunc pow(const gf::Field& k, const RatFunc& a, long long e);  // e may be negative
std::string to_string(const gf::Field& k, const RatFunc& a);

/// Either a monic irreducible polynomial of F_q[t] or the place at infinity.
struct Place {
  std::optional<Poly> finite;  // nullopt = infinity

  static Place infinity() { return Place{std::nullopt}; }
  static Place at(Poly p) { return Place{std::move(p)}; }
  bool is_infinity() const { return !finite.has_value(); }
  int degree() const { return is_infinity() ? 1 : int(finite->c.size()) - 1; }
  bool operator==(const Place& o) const { return finite == o.finite; }
};

std::string to_string(const gf::Field& k, const Place& v);

/// Canonical order on places: infinity last, finite places by degree then
/// coefficient index order.
bool place_less(const gf::Field& k, const Place& a, const Place& b);

/// v_P(u) for u != 0; rejects u = 0.
int valuation(const gf::Field& k, const RatFunc& u, const Place& v);

/// deg t of a place polynomial times its multiplicity, summed over the
/// denominator: the pole divisor degree (used for size heuristics).
struct PartialFractions {
  Poly poly_part;
  // For each monic irreducible P dividing the denominator: numerators[i] is
  // the numerator of P^{-(i+1)}, of degree < deg P (may be zero).
  std::vector<std::pair<Poly, std::vector<Poly>>> pole_parts;
};

/// u = poly_part + sum_P sum_i numerators[i] / P^{i+1}, exactly.
PartialFractions partial_fractions(const gf::Field& k, const RatFunc& u);

/// Recombine a decomposition back into a single fraction (test helper and
/// report round-trip).
RatFunc recombine(const gf::Field& k, const PartialFractions& pf);

/// All places of u's zeros and poles plus infinity, each with its valuation.
std::vector<std::pair<Place, int>> divisor(const gf::Field& k, const RatFunc& u);

/// Evaluate u at a point of an extension field; rejects points where the
/// denominator vanishes.
gf::ExtField::Elem eval_at(const gf::Field& k, const gf::ExtField& ext,
                           const RatFunc& u, const gf::ExtField::Elem& a);

// ---------------------------------------------------------------------------
// Bivariate polynomials, monic in x, coefficients in F_q[t].

struct BivarPoly {
  std::vector<Poly> xc;  // xc[i] multiplies x^i; normalized (no zero lead)

  bool operator==(const BivarPoly& o) const { return xc == o.xc; }
  int xdeg() const { return int(xc.size()) - 1; }
};

bool is_monic_in_x(const gf::Field& k, const BivarPoly& f);
int tdeg(const BivarPoly& f);
BivarPoly bivar_mul(const gf::Field& k, const BivarPoly& a, const BivarPoly& b);
/// Exact division of monic-in-x polynomials; rejects inexact division.
BivarPoly bivar_div_exact(const gf::Field& k, const BivarPoly& a, const BivarPoly& b);
std::string to_string(const gf::Field& k, const BivarPoly& f);

/// Specialize t -> a in an extension field, yielding a polynomial in x.
ExtPoly specialize(const gf::Field& k, const gf::ExtField& ext, const BivarPoly& f,
                   const gf::ExtField::Elem& a);

/// Factor a monic-in-x squarefree f into monic-in-x irreducibles over
/// F_q(t), sorted canonically. Squarefreeness (gcd with the x-derivative
/// over F_q(t)) is checked. Specializes at points of F_{q^d} for d = 1..6,
/// Hensel-lifts (t-a)-adically to precision 2*tdeg+1 and recombines factor
/// subsets with exact-division verification; reports failure if no good
/// specialization exists.
std::vector<BivarPoly> factor_bivariate(const gf::Field& k, const BivarPoly& f);

/// Monic irreducibles of degree 1..max_deg in canonical order.
std::vector<Poly> places_up_to(const gf::Field& k, int max_deg);

}  // namespace dyngal::ff

#endif
