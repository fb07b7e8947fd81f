#include "dyngal/criterion.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyngal/phigroup.hpp"

namespace dyngal::criterion {

namespace P = dyngal::poly;
using ff::Poly;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SurjectivePhi: return "SurjectivePhi";
    case Verdict::SurjectivePhi1: return "SurjectivePhi1";
    case Verdict::NotSurjective: return "NotSurjective";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    out.push_back(l);
    while (n % l == 0) n /= l;
  }
  return out;
}

gf::Fq lead_unit(const gf::Field& k, const RatFunc& u) {
  return P::lead(k, u.num);  // denominators are monic
}

/// gamma_j as field elements: the power basis 1, z, ..., z^{r-1}.
std::vector<gf::Fq> gamma_basis(const gf::Field& k) {
  std::vector<gf::Fq> out;
  for (int j = 0; j < k.r(); ++j) {
    std::vector<int> cs(k.r(), 0);
    cs[j] = 1;
    out.push_back(k.from_coords(cs));
  }
  return out;
}

std::vector<RatFunc> condition2_family(const gf::Field& k, const RatFunc& t0, int N) {
  std::vector<RatFunc> us;
  auto gammas = gamma_basis(k);
  RatFunc t0_inv_i = ff::rf_one(k);
  for (int i = 1; i <= N; ++i) {
    t0_inv_i = ff::div(k, t0_inv_i, t0);
    if (i % k.p() == 0) continue;
    for (auto g : gammas) us.push_back(ff::mul(k, ff::rf_constant(k, g), t0_inv_i));
  }
  return us;
}

std::optional<InfiniteCertificate> find_certificate(const gf::Field& k, const RatFunc& t0) {
  for (auto& [place, v] : ff::divisor(k, t0))
    if (v > 0 && v % k.p() != 0) return InfiniteCertificate{place, v};
  return std::nullopt;
}

}  // namespace

ThetaWitness solve_theta(const gf::Field& k, const RatFunc& t0) {
  if (t0.is_zero()) throw std::domain_error("criterion: t0 must be nonzero");
  RatFunc minus_t0 = ff::neg(k, t0);
  if (k.q() == 2) return ThetaWitness{minus_t0};  // exponent q-1 = 1
  auto test = kummer_power_test(k, minus_t0, k.q() - 1);
  if (!test.is_power) return ThetaWitness{std::nullopt};
  // Exactness is re-checked here: the witness must power back to -t0.
  if (!(ff::pow(k, *test.root, k.q() - 1) == minus_t0))
    throw std::logic_error("criterion: theta witness failed verification");
  return ThetaWitness{test.root};
}

PowerTest kummer_power_test(const gf::Field& k, const RatFunc& u, int ell) {
  if (u.is_zero()) throw std::domain_error("criterion: power test needs u != 0");
  if (ell < 1) throw std::domain_error("criterion: ell must be positive");
  PowerTest out;
  RatFunc root = ff::rf_one(k);
  for (auto& [place, v] : ff::divisor(k, u)) {
    if (place.is_infinity()) continue;  // determined by the finite valuations
    if (v % ell != 0) {
      out.obstruction = "v_{" + ff::to_string(k, place) + "} = " + std::to_string(v) +
                        " is not divisible by " + std::to_string(ell);
      return out;
    }
    root = ff::mul(k, root, ff::pow(k, ff::from_poly(k, *place.finite), v / ell));
  }
  gf::Fq c = lead_unit(k, u);
  int g = std::__gcd(ell, k.q() - 1);
  if (k.pow(c, std::uint64_t((k.q() - 1) / g)) != k.one()) {
    out.obstruction = "leading constant " + k.to_string(c) + " is not an ell-th power";
    return out;
  }
  gf::Fq cr = 0;
  for (int b = 1; b < k.q(); ++b)
    if (k.pow(gf::Fq(b), std::uint64_t(ell)) == c) {
      cr = gf::Fq(b);
      break;
    }
  if (cr == 0) throw std::logic_error("criterion: constant root search failed");
  root = ff::mul(k, root, ff::rf_constant(k, cr));
  if (!(ff::pow(k, root, ell) == u)) throw std::logic_error("criterion: power root mismatch");
  out.is_power = true;
  out.root = root;
  return out;
}

Condition1Result check_condition1(const gf::Field& k, const RatFunc& t0) {
  if (k.q() <= 2) throw std::domain_error("criterion: condition 1 requires q > 2");
  if (t0.is_zero()) throw std::domain_error("criterion: t0 must be nonzero");
  Condition1Result out;
  auto primes_q = prime_factors(k.q() - 1);
  auto primes_p = prime_factors(k.p() - 1);
  if (primes_q != primes_p)
    out.warnings.push_back(
        "primes of q-1 and p-1 differ; condition 1 uses the primes of q-1");

  RatFunc minus_t0 = ff::neg(k, t0);
  std::string cert;
  for (int ell : primes_q) {
    auto test = kummer_power_test(k, minus_t0, ell);
    if (test.is_power) {
      out.holds = false;
      out.certificate = "-t0 = (" + ff::to_string(k, *test.root) + ")^" +
                        std::to_string(ell);
      return out;
    }
    if (!cert.empty()) cert += "; ";
    cert += "ell=" + std::to_string(ell) + ": " + test.obstruction;
  }
  if ((k.q() - 1) % 4 == 0) {
    // x^{q-1} + t0 also needs -t0 outside -4K^4, i.e. t0/4 outside K^4.
    RatFunc t0_over_4 = ff::div(k, t0, ff::rf_constant(k, k.from_int(4)));
    auto test4 = kummer_power_test(k, t0_over_4, 4);
    if (test4.is_power) {
      out.holds = false;
      out.certificate =
          "-t0 lies in -4K^4 with fourth root " + ff::to_string(k, *test4.root);
      out.warnings.push_back("the 4 | q-1 binomial caveat decided condition 1");
      return out;
    }
    cert += "; 4|q-1 caveat: " + test4.obstruction;
  }
  out.holds = true;
  out.certificate = cert;
  return out;
}

Condition2Result check_condition2(const gf::Field& k, const RatFunc& t0, int N) {
  if (t0.is_zero()) throw std::domain_error("criterion: t0 must be nonzero");
  Condition2Result out;
  out.truncation_used = N;
  auto indep = asv::as_independent(k, condition2_family(k, t0, N));
  out.holds_up_to_n = indep.independent;
  if (!indep.independent) out.dependency = indep.dependency;
  out.certificate = find_certificate(k, t0);
  if (out.certificate && !indep.independent)
    throw std::logic_error("criterion: certificate contradicts truncated dependence");
  return out;
}

Condition3Result check_condition3(const gf::Field& k, const RatFunc& t0,
                                  const RatFunc& s0, const ThetaWitness& theta) {
  Condition3Result out;
  if (theta.present()) {
    // f(theta0 y) = theta0^q (y^q - y + s0/theta0^q); irreducible over K iff
    // the translated classes {gamma_j s0 / theta0^q} are independent in V(K).
    RatFunc a = ff::div(k, s0, ff::pow(k, *theta.theta, k.q()));
    std::vector<RatFunc> us;
    for (auto g : gamma_basis(k)) us.push_back(ff::mul(k, ff::rf_constant(k, g), a));
    auto indep = asv::as_independent(k, us);
    out.holds = indep.independent;
    if (out.holds) {
      out.certificate = "classes gamma_j s0/theta0^q independent in V(K)";
    } else {
      std::string dep;
      for (int c : indep.dependency) dep += std::to_string(c) + ",";
      if (!dep.empty()) dep.pop_back();
      out.certificate = "dependent combination (" + dep + ") of gamma_j s0/theta0^q";
    }
    return out;
  }
  // Clear denominators via x -> x/D and factor over F_q[t].
  Poly den_t = t0.den, den_s = s0.den;
  Poly g = P::gcd(k, den_t, den_s);
  Poly D = P::mul(k, den_t, P::div_exact(k, den_s, g));
  RatFunc Dr = ff::from_poly(k, D);
  RatFunc c1 = ff::mul(k, t0, ff::pow(k, Dr, k.q() - 1));
  RatFunc c0 = ff::mul(k, s0, ff::pow(k, Dr, k.q()));
  if (P::deg(c1.den) != 0 || P::deg(c0.den) != 0)
    throw std::logic_error("criterion: denominator clearing failed");
  ff::BivarPoly f;
  f.xc.assign(k.q() + 1, Poly{});
  f.xc[0] = c0.num;
  f.xc[1] = c1.num;
  f.xc[k.q()] = P::one(k);
  try {
    auto factors = ff::factor_bivariate(k, f);
    out.holds = factors.size() == 1;
    if (out.holds)
      out.certificate = "bivariate factorization: irreducible";
    else
      out.certificate = "factor: " + ff::to_string(k, factors.front());
  } catch (const std::runtime_error& e) {
    out.inconclusive = true;
    out.certificate = e.what();
  }
  return out;
}

Phi1Result check_phi1(const gf::Field& k, const RatFunc& t0, const RatFunc& s0,
                      const RatFunc& theta0, int N) {
  Phi1Result out;
  RatFunc s_class = ff::div(k, s0, ff::pow(k, theta0, k.q()));
  out.certificate = find_certificate(k, t0);

  int n_eff = N;
  if (out.certificate && !s_class.is_zero()) {
    // Tail soundness: relations with top index I > N have pole order m*I at
    // the certificate place; they are impossible once m (N+1) exceeds the
    // pole order of the s-class there.
    int pole = 0;
    int v = ff::valuation(k, s_class, out.certificate->place);
    pole = std::max(0, -v);
    while (out.certificate->m * (n_eff + 1) <= pole) ++n_eff;
  }
  out.truncation_used = n_eff;

  std::vector<RatFunc> us;
  for (auto g : gamma_basis(k)) us.push_back(ff::mul(k, ff::rf_constant(k, g), s_class));
  auto family = condition2_family(k, t0, n_eff);
  us.insert(us.end(), family.begin(), family.end());
  auto indep = asv::as_independent(k, us);
  out.holds_up_to_n = indep.independent;
  if (!indep.independent) {
    out.dependency = indep.dependency;
    return out;
  }
  out.fully_certified = out.certificate.has_value();
  return out;
}

CriterionReport run_criterion(const gf::Field& k, const RatFunc& t0, const RatFunc& s0,
                              int N) {
  if (t0.is_zero()) throw std::domain_error("criterion: t0 must be nonzero");
  if (N < 1) throw std::domain_error("criterion: truncation must be positive");
  CriterionReport report;
  report.truncation = N;
  ThetaWitness theta = solve_theta(k, t0);

  if (theta.present()) {
    report.target = "Phi_infinity_1";
    report.theta = theta.theta;
    if (k.q() == 2)
      report.warnings.push_back("q = 2: Phi_infinity_1 equals Phi_infinity");

    auto phi1 = check_phi1(k, t0, s0, *theta.theta, N);
    report.truncation = phi1.truncation_used;
    report.infinite_certificate = phi1.certificate;
    ConditionRecord rec;
    rec.name = "phi1_independence";
    rec.holds = phi1.holds_up_to_n;
    if (phi1.certificate)
      rec.certificate = "zero of t0 at " + ff::to_string(k, phi1.certificate->place) +
                        " of order " + std::to_string(phi1.certificate->m);
    if (phi1.dependency) {
      std::string dep;
      for (int c : *phi1.dependency) dep += std::to_string(c) + ",";
      if (!dep.empty()) dep.pop_back();
      rec.certificate = "dependency (" + dep + ")";
      report.dependency = phi1.dependency;
    }
    if (phi1.holds_up_to_n && !phi1.fully_certified)
      rec.notes = "independent up to truncation only; no infinite certificate";
    report.conditions.push_back(rec);

    auto c3 = check_condition3(k, t0, s0, theta);
    report.conditions.push_back(
        ConditionRecord{"condition3_irreducible", c3.holds, c3.certificate, ""});

    if (!phi1.holds_up_to_n)
      report.verdict = Verdict::NotSurjective;
    else if (phi1.fully_certified)
      report.verdict = Verdict::SurjectivePhi1;
    else
      report.verdict = Verdict::Inconclusive;
    return report;
  }

  report.target = "Phi_infinity";
  auto c1 = check_condition1(k, t0);
  for (auto& w : c1.warnings) report.warnings.push_back(w);
  report.conditions.push_back(
      ConditionRecord{"condition1_kummer", c1.holds, c1.certificate, ""});

  auto c2 = check_condition2(k, t0, N);
  report.infinite_certificate = c2.certificate;
  {
    ConditionRecord rec;
    rec.name = "condition2_independence";
    rec.holds = c2.holds_up_to_n;
    if (c2.certificate)
      rec.certificate = "zero of t0 at " + ff::to_string(k, c2.certificate->place) +
                        " of order " + std::to_string(c2.certificate->m);
    if (c2.dependency) {
      std::string dep;
      for (int c : *c2.dependency) dep += std::to_string(c) + ",";
      if (!dep.empty()) dep.pop_back();
      rec.certificate = "dependency (" + dep + ")";
      report.dependency = c2.dependency;
    }
    if (c2.holds_up_to_n && !c2.certificate)
      rec.notes = "independent up to truncation only; no infinite certificate";
    report.conditions.push_back(rec);
  }

  auto c3 = check_condition3(k, t0, s0, theta);
  {
    ConditionRecord rec{"condition3_irreducible", c3.holds, c3.certificate, ""};
    if (c3.inconclusive) rec.notes = "factorization did not complete";
    report.conditions.push_back(rec);
  }

  bool any_decisive_failure = !c1.holds || (!c2.holds_up_to_n) || (!c3.holds && !c3.inconclusive);
  if (any_decisive_failure) {
    report.verdict = Verdict::NotSurjective;
  } else if (c1.holds && c2.holds_up_to_n && c2.certificate && c3.holds && !c3.inconclusive) {
    report.verdict = Verdict::SurjectivePhi;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

int character_level_dim(const gf::Field& k, int n) {
  if (n < 1) throw std::domain_error("criterion: level must be positive");
  long long order = 1;
  for (int i = 0; i < 2 * n - 1; ++i) {
    order *= k.q();
    if (order > (1 << 14)) throw std::domain_error("criterion: level group too large");
  }
  phig::PhiGroup G(k, n);
  return phig::character_dim(G, phig::full_phi1(G));
}

}  // namespace dyngal::criterion
