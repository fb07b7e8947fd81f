#include <doctest.h>

#include <random>

#include "dyngal/funcfield.hpp"

using namespace dyngal;
using gf::Field;
namespace P = dyngal::poly;
using ff::BivarPoly;
using ff::Place;
using ff::Poly;
using ff::RatFunc;

namespace {

Poly make(const Field& k, std::initializer_list<int> coeffs) {
  Poly a;
  for (int c : coeffs) a.c.push_back(k.from_int(c));
  P::normalize(k, a);
  return a;
}

RatFunc rf(const Field& k, std::initializer_list<int> num, std::initializer_list<int> den) {
  return ff::make_ratfunc(k, make(k, num), make(k, den));
}

Poly random_poly(const Field& k, int max_deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> dd(0, max_deg), dc(0, k.q() - 1);
  Poly a;
  int d = dd(rng);
  for (int i = 0; i <= d; ++i) a.c.push_back(gf::Fq(dc(rng)));
  P::normalize(k, a);
  return a;
}

// All polynomials (not only monic) of degree <= d, in index order.
std::vector<Poly> polys_up_to(const Field& k, int d) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (int i = 0; i <= d; ++i) count *= k.q();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly g;
    std::uint64_t v = idx;
    for (int i = 0; i <= d; ++i) {
      g.c.push_back(gf::Fq(v % k.q()));
      v /= k.q();
    }
    P::normalize(k, g);
    out.push_back(std::move(g));
  }
  return out;
}

// Bivariate evaluation at a polynomial x-value, for the linear-factor oracle.
Poly eval_bivar_at_poly(const Field& k, const BivarPoly& f, const Poly& x) {
  Poly acc;
  for (int i = f.xdeg(); i >= 0; --i) acc = P::add(k, P::mul(k, acc, x), f.xc[i]);
  return acc;
}

}  // namespace

TEST_CASE("normalization keeps denominators monic and fractions reduced") {
  Field k = Field::prime(3);
  RatFunc u = rf(k, {0, 2}, {0, 0, 2});  // 2t / 2t^2 = 1/t
  CHECK(u.num == make(k, {1}));
  CHECK(u.den == make(k, {0, 1}));
  CHECK(ff::add(k, u, ff::neg(k, u)).is_zero());
  CHECK(ff::mul(k, u, ff::inv(k, u)) == ff::rf_one(k));
}

TEST_CASE("valuations read off numerator, denominator and degrees") {
  Field k = Field::prime(2);
  RatFunc u = rf(k, {0, 0, 0, 1}, {1, 1});  // t^3/(t+1)
  CHECK(ff::valuation(k, u, Place::at(make(k, {0, 1}))) == 3);
  CHECK(ff::valuation(k, ff::from_poly(k, make(k, {0, 0, 0, 1})), Place::infinity()) == -3);
  RatFunc w = rf(k, {1}, {1, 0, 1});  // 1/(t+1)^2
  CHECK(ff::valuation(k, w, Place::at(make(k, {1, 1}))) == -2);
  CHECK_THROWS(ff::valuation(k, ff::rf_zero(k), Place::infinity()));
}

TEST_CASE("partial fractions: worked examples") {
  Field k = Field::prime(2);

  auto pf1 = ff::partial_fractions(k, rf(k, {1, 0, 1}, {0, 1}));  // (t^2+1)/t
  CHECK(pf1.poly_part == make(k, {0, 1}));
  REQUIRE(pf1.pole_parts.size() == 1);
  CHECK(pf1.pole_parts[0].first == make(k, {0, 1}));
  REQUIRE(pf1.pole_parts[0].second.size() == 1);
  CHECK(pf1.pole_parts[0].second[0] == make(k, {1}));

  auto pf2 = ff::partial_fractions(k, rf(k, {1}, {0, 1, 1}));  // 1/(t(t+1))
  CHECK(P::is_zero(pf2.poly_part));
  REQUIRE(pf2.pole_parts.size() == 2);
  CHECK(pf2.pole_parts[0].first == make(k, {0, 1}));
  CHECK(pf2.pole_parts[0].second[0] == make(k, {1}));
  CHECK(pf2.pole_parts[1].first == make(k, {1, 1}));
  CHECK(pf2.pole_parts[1].second[0] == make(k, {1}));

  auto pf3 = ff::partial_fractions(k, ff::from_poly(k, make(k, {1, 1, 0, 1})));
  CHECK(pf3.poly_part == make(k, {1, 1, 0, 1}));
  CHECK(pf3.pole_parts.empty());
}

TEST_CASE("partial fractions recombine to the input on random fractions") {
  std::mt19937 rng(71);
  for (auto [p, r] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    Field k = Field::make(p, r);
    int done = 0;
    while (done < 170) {
      Poly num = random_poly(k, 8, rng), den = random_poly(k, 8, rng);
      if (P::is_zero(den)) continue;
      RatFunc u = ff::make_ratfunc(k, num, den);
      auto pf = ff::partial_fractions(k, u);
      for (auto& [place, numerators] : pf.pole_parts)
        for (auto& g : numerators) CHECK(P::deg(g) < P::deg(place));
      CHECK(ff::recombine(k, pf) == u);
      ++done;
    }
  }
}

TEST_CASE("divisor degrees sum to zero") {
  std::mt19937 rng(29);
  for (auto [p, r] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    Field k = Field::make(p, r);
    int done = 0;
    while (done < 60) {
      Poly num = random_poly(k, 6, rng), den = random_poly(k, 6, rng);
      if (P::is_zero(num) || P::is_zero(den)) continue;
      RatFunc u = ff::make_ratfunc(k, num, den);
      if (u.is_zero()) continue;
      int total = 0;
      for (auto& [place, v] : ff::divisor(k, u)) total += v * place.degree();
      CHECK(total == 0);
      for (auto& [place, v] : ff::divisor(k, u)) CHECK(ff::valuation(k, u, place) == v);
      ++done;
    }
  }
}

TEST_CASE("bivariate factorization: worked examples") {
  Field k = Field::prime(2);

  // x^2 + t x + t^3: no linear factor x + e with deg e <= 3 (checked
  // exhaustively), hence irreducible.
  BivarPoly f;
  f.xc = {make(k, {0, 0, 0, 1}), make(k, {0, 1}), make(k, {1})};
  for (const Poly& e : polys_up_to(k, 3))
    CHECK_FALSE(P::is_zero(eval_bivar_at_poly(k, f, e)));
  auto fs = ff::factor_bivariate(k, f);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0] == f);

  // x^2 + (t+1) x + t = (x+1)(x+t)
  BivarPoly g;
  g.xc = {make(k, {0, 1}), make(k, {1, 1}), make(k, {1})};
  auto gs = ff::factor_bivariate(k, g);
  REQUIRE(gs.size() == 2);
  BivarPoly xp1, xpt;
  xp1.xc = {make(k, {1}), make(k, {1})};
  xpt.xc = {make(k, {0, 1}), make(k, {1})};
  CHECK(gs[0] == xp1);
  CHECK(gs[1] == xpt);

  // x^3 - t x + t over F_3 (Eisenstein at t)
  Field k3 = Field::prime(3);
  BivarPoly h;
  h.xc = {make(k3, {0, 1}), make(k3, {0, -1}), Poly{}, make(k3, {1})};
  auto hs = ff::factor_bivariate(k3, h);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0] == h);
}

TEST_CASE("bivariate factorization agrees with exhaustive search (F_2, small)") {
  Field k = Field::prime(2);
  auto small = polys_up_to(k, 2);

  // Every monic-in-x squarefree f with x-degree 2 or 3 and t-degree <= 2.
  auto run = [&](const BivarPoly& f) {
    std::vector<BivarPoly> fs;
    try {
      fs = ff::factor_bivariate(k, f);
    } catch (const std::invalid_argument&) {
      return;  // not squarefree; outside the contract
    }
    BivarPoly prod;
    prod.xc = {P::one(k)};
    for (auto& g : fs) prod = ff::bivar_mul(k, prod, g);
    CHECK(prod == f);
    // A reducible monic-in-x polynomial of x-degree <= 3 has a linear factor
    // x + e with deg e <= tdeg f; compare against the root sweep.
    bool has_root = false;
    for (const Poly& e : polys_up_to(k, 2))
      if (P::is_zero(eval_bivar_at_poly(k, f, e))) has_root = true;
    CHECK((fs.size() > 1) == has_root);
  };

  for (const Poly& b : small)
    for (const Poly& c : small) {
      BivarPoly f2;
      f2.xc = {c, b, P::one(k)};
      run(f2);
    }
  for (const Poly& a : small)
    for (const Poly& b : small)
      for (const Poly& c : small) {
        BivarPoly f3;
        f3.xc = {c, b, a, P::one(k)};
        run(f3);
      }
}

TEST_CASE("bivariate factorization rejects non-squarefree and non-monic input") {
  Field k = Field::prime(2);
  BivarPoly sq;  // (x + t)^2 = x^2 + t^2
  sq.xc = {make(k, {0, 0, 1}), Poly{}, make(k, {1})};
  CHECK_THROWS_AS(ff::factor_bivariate(k, sq), std::invalid_argument);
  BivarPoly nm;
  nm.xc = {make(k, {1}), make(k, {0, 1})};
  CHECK_THROWS_AS(ff::factor_bivariate(k, nm), std::invalid_argument);
}

TEST_CASE("evaluation at extension points") {
  Field k = Field::prime(2);
  gf::ExtField f8(k, {1, 1, 0, 1});
  auto a = f8.gen();
  RatFunc u = rf(k, {1, 1}, {0, 1});  // (t+1)/t
  auto v = ff::eval_at(k, f8, u, a);
  CHECK(v == f8.mul(f8.add(a, f8.one()), f8.inv(a)));
  CHECK_THROWS(ff::eval_at(k, f8, rf(k, {1}, {0, 1}), f8.zero()));
}

TEST_CASE("place enumeration is by degree then index") {
  Field k = Field::prime(2);
  auto ps = ff::places_up_to(k, 3);
  REQUIRE(ps.size() == 5);  // 2 + 1 + 2
  CHECK(ps[0] == make(k, {0, 1}));
  CHECK(ps[1] == make(k, {1, 1}));
  CHECK(ps[2] == make(k, {1, 1, 1}));
  CHECK(ps[3] == make(k, {1, 1, 0, 1}));
  CHECK(ps[4] == make(k, {1, 0, 1, 1}));
}
