#ifndef DYNGAL_ASV_HPP
#define DYNGAL_ASV_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dyngal/funcfield.hpp"

// The Artin-Schreier quotient V(K) = K / {z^p - z} for K = F_q(t): canonical
// forms, membership in the image of z -> z^p - z, linear independence, and
// the q-power to p-power reduction.

namespace dyngal::asv {

using ff::Poly;
using ff::RatFunc;

struct ASPolePart {
  Poly place;                 // monic irreducible P
  std::map<int, Poly> terms;  // i >= 1 with p∤i -> nonzero numerator, deg < deg P
};

/// Canonical representative of a class of V(F_q(t)). The class is zero iff
/// all three components are zero/empty. Every stored index i has p∤i; all
/// stored coefficients are nonzero.
struct ASForm {
  int constant_trace = 0;          // in F_p; lifts to constant_trace * gamma*
  std::map<int, gf::Fq> poly_part;  // i >= 1 with p∤i -> nonzero coeff of t^i
  std::vector<ASPolePart> pole_parts;  // sorted by place

  bool is_zero() const {
    return constant_trace == 0 && poly_part.empty() && pole_parts.empty();
  }
};

bool operator==(const ASPolePart& a, const ASPolePart& b);
bool operator==(const ASForm& a, const ASForm& b);

/// z^p - z.
RatFunc wp(const gf::Field& k, const RatFunc& z);

/// Canonical form of the class of u; u - lift(form) is in U(K).
ASForm as_reduce(const gf::Field& k, const RatFunc& u);

/// The canonical representative as a rational function.
RatFunc lift(const gf::Field& k, const ASForm& form);

/// u in U(K) = {z^p - z}.
bool is_in_U(const gf::Field& k, const RatFunc& u);

/// Independent witness search: solves z^p - z = u by F_p-linear algebra over
/// candidates with pole orders at most ceil(order/p) at each pole of u.
std::optional<RatFunc> as_membership_oracle(const gf::Field& k, const RatFunc& u);

struct Independence {
  bool independent = false;
  // On dependence: nonzero coefficients b with sum b_i u_i in U(K).
  std::vector<int> dependency;
};

Independence as_independent(const gf::Field& k, const std::vector<RatFunc>& us);

/// w with w^p - w = z^q - z, namely w = z + z^p + ... + z^{p^{r-1}}.
RatFunc q_power_reduce(const gf::Field& k, const RatFunc& z);

std::string to_string(const gf::Field& k, const ASForm& form);

}  // namespace dyngal::asv

#endif
