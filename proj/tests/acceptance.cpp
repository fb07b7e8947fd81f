// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dyngal/asv.hpp"
#include "dyngal/carlitz.hpp"
#include "dyngal/criterion.hpp"
#include "dyngal/expr.hpp"
#include "dyngal/frobscan.hpp"
#include "dyngal/phigroup.hpp"

using namespace dyngal;
using gf::Field;
namespace P = dyngal::poly;
using ff::RatFunc;

namespace {

RatFunc E(const Field& k, const std::string& s) { return expr::eval_string(k, s); }

ff::Poly random_poly(const Field& k, int max_deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> dd(0, max_deg), dc(0, k.q() - 1);
  ff::Poly a;
  int d = dd(rng);
  for (int i = 0; i <= d; ++i) a.c.push_back(gf::Fq(dc(rng)));
  P::normalize(k, a);
  return a;
}

RatFunc random_rf(const Field& k, int max_deg, std::mt19937& rng) {
  while (true) {
    ff::Poly den = random_poly(k, max_deg, rng);
    if (P::is_zero(den)) continue;
    return ff::make_ratfunc(k, random_poly(k, max_deg, rng), den);
  }
}

int tame_count(int p, int lo, int hi) {  // #{lo <= i <= hi : p does not divide i}
  int c = 0;
  for (int i = lo; i <= hi; ++i)
    if (i % p != 0) ++c;
  return c;
}

// --- criteria -------------------------------------------------------------

bool criterion1(std::string& detail) {
  Field k = Field::prime(2);
  auto rep = criterion::run_criterion(k, E(k, "t"), E(k, "t^3"));
  bool ok = rep.verdict == criterion::Verdict::SurjectivePhi1 &&
            rep.infinite_certificate.has_value() &&
            ff::to_string(k, rep.infinite_certificate->place) == "t" &&
            rep.infinite_certificate->m == 1;
  detail = "verdict=" + criterion::to_string(rep.verdict);
  if (rep.infinite_certificate)
    detail += ", certificate=(place t, m=" +
              std::to_string(rep.infinite_certificate->m) + ")";
  return ok;
}

bool criterion2(std::string& detail) {
  using clock = std::chrono::steady_clock;
  Field k2 = Field::prime(2);
  bool ok = true;
  std::ostringstream os;
  for (int n : {2, 3}) {
    auto start = clock::now();
    auto res = frobscan::certify(k2, E(k2, "t"), E(k2, "t^3"), n, 8);
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    bool this_ok = res.status == frobscan::Status::Certified &&
                   res.target_order == (n == 2 ? 8u : 32u) && secs < 60.0;
    os << "n=" << n << ":" << (this_ok ? "certified" : "FAILED") << " ("
       << res.samples.size() << " places, " << secs << "s) ";
    ok = ok && this_ok;
  }
  Field k3 = Field::prime(3);
  auto start = clock::now();
  auto res3 = frobscan::certify(k3, E(k3, "2*t"), E(k3, "t"), 1, 5);
  double secs3 = std::chrono::duration<double>(clock::now() - start).count();
  bool ok3 = res3.status == frobscan::Status::Certified && res3.target_order == 6 &&
             secs3 < 60.0;
  os << "q=3,n=1:" << (ok3 ? "certified" : "FAILED") << " (" << secs3 << "s)";
  detail = os.str();
  return ok && ok3;
}

bool criterion3(std::string& detail) {
  Field k = Field::prime(2);
  RatFunc t0 = E(k, "t^2"), s0 = E(k, "t^3");
  auto rep = criterion::run_criterion(k, t0, s0);
  bool verdict_ok = rep.verdict == criterion::Verdict::NotSurjective &&
                    rep.dependency.has_value();
  bool recombine_ok = false;
  if (verdict_ok) {
    RatFunc theta = *rep.theta;
    std::vector<RatFunc> family;
    family.push_back(ff::div(k, s0, ff::pow(k, theta, 2)));
    RatFunc inv_pow = ff::rf_one(k);
    for (int i = 1; i <= rep.truncation; ++i) {
      inv_pow = ff::div(k, inv_pow, t0);
      if (i % 2 == 0) continue;
      family.push_back(inv_pow);
    }
    RatFunc combo = ff::rf_zero(k);
    for (std::size_t i = 0; i < family.size(); ++i)
      if ((*rep.dependency)[i] % 2 == 1) combo = ff::add(k, combo, family[i]);
    recombine_ok = asv::is_in_U(k, combo);
  }
  auto scan = frobscan::certify(k, t0, s0, 2, 10);
  bool scan_ok = scan.samples.size() >= 200 &&
                 scan.status == frobscan::Status::Inconclusive;
  std::ostringstream os;
  os << "verdict=" << criterion::to_string(rep.verdict)
     << ", dependency in U: " << (recombine_ok ? "yes" : "NO") << ", "
     << scan.samples.size() << " samples, survivors=" << scan.survivors.size();
  detail = os.str();
  return verdict_ok && recombine_ok && scan_ok;
}

bool criterion4(std::string& detail) {
  std::mt19937 rng(20260810);
  int cases = 0, failures = 0;
  std::vector<std::pair<Field, int>> plan = {
      {Field::prime(2), 3}, {Field::prime(3), 3}, {Field::make(2, 2), 2}};
  while (cases < 50) {
    for (auto& [k, nmax] : plan) {
      for (int n = 1; n <= nmax && cases < 50; ++n) {
        RatFunc t0 = random_rf(k, 3, rng);
        if (t0.is_zero()) continue;
        RatFunc s0 = random_rf(k, 3, rng);
        ++cases;
        if (!carlitz::disc_check(k, t0, s0, n).matches) ++failures;
      }
    }
  }
  detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion5(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (int p : {2, 3}) {
    Field k = Field::prime(p);
    for (int n = 1; n <= 3; ++n) {
      phig::PhiGroup G(k, n);
      auto phi1 = phig::full_phi1(G);
      auto comm = phig::commutator_subgroup(G, phi1);
      std::vector<phig::PhiGroup::Elem> expected;
      for (phig::Rn g = 0; g < G.rn_size(); ++g)
        if (G.rn_digit(g, 0) == 0) expected.push_back({g, 1});
      std::sort(expected.begin(), expected.end());
      bool comm_ok = comm.elems == expected;

      auto ms = phig::maximal_subgroups_lattice(G, phi1);
      int d = k.r() * (1 + tame_count(p, 1, n - 1));
      long long want = 0;
      {
        long long pd = 1;
        for (int i = 0; i < d; ++i) pd *= p;
        want = (pd - 1) / (p - 1);
      }
      bool count_ok = static_cast<long long>(ms.size()) == want;
      bool normal_ok = true, index_ok = true;
      for (auto& m : ms) {
        if (!phig::is_normal_in(G, m, phi1)) normal_ok = false;
        if (m.order() * std::size_t(p) != phi1.order()) index_ok = false;
      }
      bool this_ok = comm_ok && count_ok && normal_ok && index_ok;
      ok = ok && this_ok;
      os << "q=" << p << ",n=" << n << ":" << (this_ok ? "ok" : "FAILED") << " ";
    }
  }
  detail = os.str();
  return ok;
}

bool criterion6(std::string& detail) {
  std::mt19937 rng(424242);
  std::ostringstream os;
  bool ok = true;
  std::vector<std::pair<int, int>> fields = {{2, 1}, {3, 1}, {2, 2}};
  for (auto [p, r] : fields) {
    Field k = Field::make(p, r);
    int agree = 0;
    for (int i = 0; i < 200; ++i) {
      RatFunc u = random_rf(k, 4, rng);
      bool canonical = asv::is_in_U(k, u);
      bool witness = asv::as_membership_oracle(k, u).has_value();
      if (canonical == witness) ++agree;
    }
    os << "q=" << k.q() << ":" << agree << "/200 ";
    ok = ok && agree == 200;
  }
  detail = os.str();
  return ok;
}

bool criterion7(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  std::vector<std::pair<int, int>> fields = {{2, 1}, {3, 1}, {2, 2}};
  for (auto [p, r] : fields) {
    Field k = Field::make(p, r);
    int want = k.r() * tame_count(p, 1, 20);
    std::vector<RatFunc> us;
    for (int i = 1; i <= 20; ++i) {
      if (i % p == 0) continue;
      for (int j = 0; j < k.r(); ++j) {
        std::vector<int> cs(k.r(), 0);
        cs[j] = 1;
        us.push_back(ff::div(k, ff::rf_constant(k, k.from_coords(cs)),
                             ff::pow(k, ff::rf_t(k), i)));
      }
    }
    bool this_ok = asv::as_independent(k, us).independent &&
                   static_cast<int>(us.size()) == want;
    os << "q=" << k.q() << ":rank " << us.size() << "/" << want << " ";
    ok = ok && this_ok;
  }
  detail = os.str();
  return ok;
}

bool criterion8(std::string& detail) {
  std::mt19937 rng(606060);
  std::ostringstream os;
  bool ok = true;
  std::vector<std::pair<int, int>> fields = {{2, 1}, {3, 1}, {2, 2}};
  for (auto [p, r] : fields) {
    Field k = Field::make(p, r);
    int good = 0;
    for (int i = 0; i < 50; ++i) {
      ff::Poly M = random_poly(k, 3, rng), N = random_poly(k, 3, rng);
      auto pm = carlitz::carlitz_phi(k, M);
      auto pn = carlitz::carlitz_phi(k, N);
      bool addi = carlitz::carlitz_phi(k, P::add(k, M, N)) == carlitz::skew_add(k, pm, pn);
      bool mult = carlitz::carlitz_phi(k, P::mul(k, M, N)) == carlitz::skew_mul(k, pm, pn);
      bool low = P::is_zero(M) || pm.coeffs[0] == ff::from_poly(k, M);
      if (addi && mult && low) ++good;
    }
    os << "q=" << k.q() << ":" << good << "/50 ";
    ok = ok && good == 50;
  }
  detail = os.str();
  return ok;
}

bool criterion9(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  struct Row {
    int p, r, nmax;
  };
  for (auto [p, r, nmax] : {Row{2, 1, 4}, Row{2, 2, 4}, Row{3, 1, 3}}) {
    Field k = Field::make(p, r);
    for (int n = 1; n <= nmax; ++n) {
      int got = criterion::character_level_dim(k, n);
      int want = k.r() * (1 + tame_count(p, 1, n - 1));
      bool this_ok = got == want;
      ok = ok && this_ok;
      os << "q=" << k.q() << ",n=" << n << ":" << got << (this_ok ? "" : "!=expected")
         << " ";
    }
  }
  detail = os.str();
  return ok;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Criterion {
    const char* description;
    bool (*fn)(std::string&);
  };
  const Criterion table[] = {
      {"paper example (q=2, t0=t, s0=t^3) is SurjectivePhi1 with certificate", criterion1},
      {"Frobenius certification of Phi_2, Phi_3 (q=2) and Phi_1 (q=3)", criterion2},
      {"negative control (q=2, t0=t^2, s0=t^3): NotSurjective, never certified", criterion3},
      {"discriminant identity disc(f^n) = +-t0^{n q^n} on 50 random cases", criterion4},
      {"commutator subgroup and maximal subgroups of Phi_{n,1} (q in {2,3}, n <= 3)",
       criterion5},
      {"canonical-form membership agrees with the linear-solver oracle (3 x 200)",
       criterion6},
      {"{gamma_j/t^i : i <= 20, p∤i} has full rank in V(K) for q in {2,3,4}", criterion7},
      {"Carlitz module identities on 50 random pairs per field", criterion8},
      {"character dimension of Phi_{n,1} matches r(1 + #{i<=n-1, p∤i})", criterion9},
  };

  int failures = 0;
  auto total_start = clock::now();
  for (std::size_t i = 0; i < sizeof(table) / sizeof(table[0]); ++i) {
    std::string detail;
    auto start = clock::now();
    bool ok = false;
    try {
      ok = table[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    std::printf("%s  criterion %zu: %s [%s] (%.2fs)\n", ok ? "PASS" : "FAIL", i + 1,
                table[i].description, detail.c_str(), secs);
    if (!ok) ++failures;
  }
  double total = std::chrono::duration<double>(clock::now() - total_start).count();
  std::printf("%d/9 criteria passed in %.1fs\n", 9 - failures, total);
  return failures == 0 ? 0 : 1;
}
