#include <doctest.h>

#include <random>
#include <set>

#include "dyngal/gf.hpp"

using namespace dyngal;
using gf::Field;
using gf::Fq;

TEST_CASE("construction validates p, modulus and size") {
  CHECK_THROWS(Field(4, {1, 1}));            // composite p
  CHECK_THROWS(Field(2, {1, 0, 1}));         // z^2 + 1 = (z+1)^2 over F_2
  CHECK_THROWS(Field(2, {1, 1, 0, 0, 0, 0, 0, 1}));  // q = 128 > 64
  CHECK_NOTHROW(Field(2, {1, 1, 1}));
  CHECK(Field::prime(7).q() == 7);
  CHECK(Field::make(2, 2).q() == 4);
}

TEST_CASE("built-in modulus table covers the shipped fields") {
  for (auto [p, r] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}}) {
    Field f = Field::make(p, r);
    CHECK(f.q() == [&] {
      int q = 1;
      for (int i = 0; i < r; ++i) q *= p;
      return q;
    }());
  }
  CHECK_THROWS(Field::make(7, 2));  // q = 49 has no shipped modulus
}

TEST_CASE("trace to prime field") {
  Field f4 = Field::make(2, 2);  // F_4 = F_2[z]/(z^2+z+1)
  Fq z = f4.gen();
  CHECK(f4.trace_to_prime(z) == 1);        // z + z^2
  CHECK(f4.trace_to_prime(f4.one()) == 0);  // 1 + 1
  CHECK(f4.trace_to_prime(f4.zero()) == 0);
}

TEST_CASE("p-th roots") {
  Field f4 = Field::make(2, 2);
  Fq z = f4.gen();
  Fq zp1 = f4.add(z, f4.one());
  CHECK(f4.pth_root(z) == zp1);  // (z+1)^2 = z^2+1 = z
  CHECK(f4.pth_root(f4.zero()) == f4.zero());
  CHECK(f4.pth_root(f4.one()) == f4.one());
}

TEST_CASE("ell-th power test") {
  Field f3 = Field::prime(3);
  CHECK_FALSE(f3.is_ell_th_power(f3.from_int(-1), 2));  // 2^1 = 2 != 1
  CHECK(f3.is_ell_th_power(f3.one(), 2));

  Field f9 = Field::make(3, 2);
  CHECK(f9.is_ell_th_power(f9.from_int(-1), 2));  // (-1)^4 = 1

  CHECK_THROWS(f3.is_ell_th_power(f3.zero(), 2));
  CHECK_THROWS(f3.is_ell_th_power(f3.one(), 5));  // 5 does not divide q-1
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  for (auto [p, r] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {13, 1}}) {
    Field f = Field::make(p, r);
    std::uniform_int_distribution<int> d(0, f.q() - 1);
    for (int i = 0; i < 200; ++i) {
      Fq a = Fq(d(rng)), b = Fq(d(rng)), c = Fq(d(rng));
      CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
      CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("p-th root inverts Frobenius exhaustively (q <= 16)") {
  for (auto [p, r] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {13, 1}}) {
    Field f = Field::make(p, r);
    for (int a = 0; a < f.q(); ++a) {
      Fq b = f.pth_root(Fq(a));
      Fq bp = f.one();
      for (int i = 0; i < p; ++i) bp = f.mul(bp, b);
      CHECK(bp == Fq(a));
    }
  }
}

TEST_CASE("trace is linear with kernel exactly the Artin-Schreier image") {
  for (auto [p, r] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    Field f = Field::make(p, r);
    std::set<Fq> image;  // {z^p - z}
    for (int z = 0; z < f.q(); ++z) {
      Fq zp = f.one();
      for (int i = 0; i < p; ++i) zp = f.mul(zp, Fq(z));
      image.insert(f.sub(zp, Fq(z)));
    }
    std::set<Fq> kernel;
    for (int a = 0; a < f.q(); ++a) {
      for (int b = 0; b < f.q(); ++b)
        CHECK(f.trace_to_prime(f.add(Fq(a), Fq(b))) ==
              (f.trace_to_prime(Fq(a)) + f.trace_to_prime(Fq(b))) % p);
      if (f.trace_to_prime(Fq(a)) == 0) kernel.insert(Fq(a));
    }
    int expected = 1;
    for (int i = 0; i < r - 1; ++i) expected *= p;
    CHECK(int(kernel.size()) == expected);
    CHECK(kernel == image);
  }
}

TEST_CASE("ell-th power test agrees with exhaustive search (q <= 16)") {
  for (auto [p, r] : {std::pair{2, 2}, {2, 4}, {3, 2}, {5, 1}, {13, 1}}) {
    Field f = Field::make(p, r);
    for (int ell = 2; ell <= f.q() - 1; ++ell) {
      if ((f.q() - 1) % ell != 0 || !gf::is_prime(ell)) continue;
      for (int a = 1; a < f.q(); ++a) {
        bool found = false;
        for (int b = 1; b < f.q() && !found; ++b)
          found = f.pow(Fq(b), ell) == Fq(a);
        CHECK(f.is_ell_th_power(Fq(a), ell) == found);
      }
    }
  }
}

TEST_CASE("trace-one element is first in index order") {
  for (auto [p, r] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    Field f = Field::make(p, r);
    Fq g = f.trace_one_element();
    CHECK(f.trace_to_prime(g) == 1);
    for (Fq a = 0; a < g; ++a) CHECK(f.trace_to_prime(a) != 1);
  }
}

TEST_CASE("coords round-trip and formatting") {
  Field f4 = Field::make(2, 2);
  Fq z = f4.gen();
  CHECK(f4.coords(z) == std::vector<int>{0, 1});
  CHECK(f4.from_coords({0, 1}) == z);
  CHECK(f4.to_string(f4.add(z, f4.one())) == "(1,1)");
  CHECK(Field::prime(3).to_string(2) == "2");
  CHECK(f4.describe() == "p=2 r=2 modulus=1,1,1");
}

TEST_CASE("extension field arithmetic and base embedding") {
  Field f2 = Field::prime(2);
  gf::ExtField f8(f2, {1, 1, 0, 1});  // F_2[u]/(u^3+u+1)
  auto u = f8.gen();
  auto u3 = f8.mul(f8.mul(u, u), u);
  CHECK(u3 == f8.add(u, f8.one()));  // u^3 = u + 1
  CHECK(f8.size() == 8);

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(0, 7);
  for (int i = 0; i < 100; ++i) {
    auto a = f8.element(d(rng)), b = f8.element(d(rng)), c = f8.element(d(rng));
    CHECK(f8.mul(a, f8.add(b, c)) == f8.add(f8.mul(a, b), f8.mul(a, c)));
    if (!f8.is_zero(a)) CHECK(f8.mul(a, f8.inv(a)) == f8.one());
    auto pr = f8.pth_root(a);
    CHECK(f8.mul(pr, pr) == a);
  }
  CHECK(f8.in_base(f8.embed(f2.one())));
  CHECK_FALSE(f8.in_base(u));

  // Degree-1 extension by a linear modulus: u is the root of u + 1, i.e. 1.
  gf::ExtField triv(f2, {1, 1});
  CHECK(triv.gen() == triv.one());
}

TEST_CASE("extension of F_4 satisfies field axioms on samples") {
  Field f4 = Field::make(2, 2);
  gf::ExtField big(f4, {f4.gen(), f4.one(), f4.one()});  // u^2 + u + z over F_4
  CHECK(big.size() == 16);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> d(0, big.size() - 1);
  for (int i = 0; i < 50; ++i) {
    auto a = big.element(d(rng)), b = big.element(d(rng));
    CHECK(big.mul(a, b) == big.mul(b, a));
    if (!big.is_zero(a)) CHECK(big.mul(a, big.inv(a)) == big.one());
    CHECK(big.pth_root(big.mul(a, a)) == a);
  }
  CHECK_THROWS(gf::ExtField(f4, {f4.one(), 0, f4.one()}));  // u^2 + 1 = (u+1)^2
}
