#ifndef DYNGAL_CRITERION_HPP
#define DYNGAL_CRITERION_HPP

#include <optional>
#include <string>
#include <vector>

#include "dyngal/asv.hpp"
#include "dyngal/funcfield.hpp"

// The surjectivity decision procedure for the dynamical Galois group of
// f = x^q + t0 x + s0 over F_q(t): a Kummer condition on -t0, linear
// independence of {gamma_j / t0^i} in V(K) with an infinite-family
// certificate, irreducibility of f, and the index-(q-1) variant via a
// (q-1)-th root theta0 of -t0.

namespace dyngal::criterion {

using ff::Place;
using ff::RatFunc;

enum class Verdict { SurjectivePhi, SurjectivePhi1, NotSurjective, Inconclusive };

std::string to_string(Verdict v);

struct ConditionRecord {
  std::string name;
  bool holds = false;
  std::string certificate;
  std::string notes;
};

/// A zero of t0 of order m with p∤m; any nontrivial combination of the
/// family then has pole order m * i_max at the place, which is prime to p,
/// so the full infinite family is independent.
struct InfiniteCertificate {
  Place place;
  int m = 0;
};

/// theta0 with theta0^{q-1} = -t0, when it exists in F_q(t).
struct ThetaWitness {
  std::optional<RatFunc> theta;
  bool present() const { return theta.has_value(); }
};

ThetaWitness solve_theta(const gf::Field& k, const RatFunc& t0);

/// u in K^ell together with an explicit root or obstruction.
struct PowerTest {
  bool is_power = false;
  std::optional<RatFunc> root;  // verified root^ell == u when is_power
  std::string obstruction;      // first failing valuation or constant
};

PowerTest kummer_power_test(const gf::Field& k, const RatFunc& u, int ell);

struct Condition1Result {
  bool holds = false;
  std::string certificate;
  std::vector<std::string> warnings;
};

/// [K(theta0):K] = q-1, i.e. x^{q-1} + t0 irreducible: -t0 must not be an
/// ell-th power for any prime ell | q-1, plus the classical 4 | q-1 caveat
/// (-t0 not in -4K^4). Requires q > 2.
Condition1Result check_condition1(const gf::Field& k, const RatFunc& t0);

struct Condition2Result {
  bool holds_up_to_n = false;
  std::optional<InfiniteCertificate> certificate;
  std::optional<std::vector<int>> dependency;
  int truncation_used = 0;
};

/// Independence of {gamma_j / t0^i : 1 <= i <= N, p∤i} in V(K), with the
/// infinite-family certificate when t0 has a zero of order prime to p.
Condition2Result check_condition2(const gf::Field& k, const RatFunc& t0, int N);

struct Condition3Result {
  bool holds = false;
  bool inconclusive = false;  // factorization failure only
  std::string certificate;
};

/// Irreducibility of f. With theta0 in K this reduces by x -> theta0 y to
/// y^q - y + s0/theta0^q, decided by independence of {gamma_j s0/theta0^q};
/// otherwise the denominators are cleared and the bivariate factorizer runs.
Condition3Result check_condition3(const gf::Field& k, const RatFunc& t0,
                                  const RatFunc& s0, const ThetaWitness& theta);

struct Phi1Result {
  bool holds_up_to_n = false;
  bool fully_certified = false;  // tail indices ruled out by the certificate
  std::optional<InfiniteCertificate> certificate;
  std::optional<std::vector<int>> dependency;  // s-terms first, then (i, j)
  int truncation_used = 0;
};

/// Independence of {gamma_j s0/theta0^q} together with {gamma_j / t0^i}.
/// The certificate covers tail indices once m (N+1) exceeds the pole order
/// of s0/theta0^q at the certificate place; N is raised internally when
/// needed.
Phi1Result check_phi1(const gf::Field& k, const RatFunc& t0, const RatFunc& s0,
                      const RatFunc& theta0, int N);

struct CriterionReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string target;  // "Phi_infinity" or "Phi_infinity_1"
  std::vector<ConditionRecord> conditions;
  int truncation = 0;
  std::vector<std::string> warnings;
  std::optional<RatFunc> theta;
  std::optional<InfiniteCertificate> infinite_certificate;
  std::optional<std::vector<int>> dependency;
};

inline constexpr int kDefaultTruncation = 20;

/// Full orchestration; rejects t0 = 0.
CriterionReport run_criterion(const gf::Field& k, const RatFunc& t0, const RatFunc& s0,
                              int N = kDefaultTruncation);

/// dim_{F_p} of the continuous characters of Phi_{n,1} at finite level, by
/// group enumeration; equals r (1 + #{1 <= i <= n-1 : p∤i}).
int character_level_dim(const gf::Field& k, int n);

}  // namespace dyngal::criterion

#endif
