#ifndef DYNGAL_FROBSCAN_HPP
#define DYNGAL_FROBSCAN_HPP

#include <string>
#include <vector>

#include "dyngal/funcfield.hpp"
#include "dyngal/phigroup.hpp"

// Independent Galois certification: sample Frobenius cycle types of f^n at
// good places of F_q(t) and certify G_n against the target group by
// eliminating every maximal subgroup. Sampling can prove fullness but never
// properness.

namespace dyngal::frobscan {

using ff::Poly;
using ff::RatFunc;

/// A finite place where the specialized iterate stays separable: not a zero
/// or pole of t0 and not a pole of s0.
struct GoodPlace {
  Poly place;
  int degree = 0;
};

/// All good places of degree <= max_deg in canonical order; max_deg <= 10.
std::vector<GoodPlace> good_places(const gf::Field& k, const RatFunc& t0,
                                   const RatFunc& s0, int n, int max_deg);

/// Residue field F_q[t]/(P) of a place; the class of t is the residue point,
/// a root of P.
gf::ExtField residue_field(const gf::Field& k, const GoodPlace& place);
inline gf::ExtField::Elem residue_point(const gf::ExtField& ext) { return ext.gen(); }

/// Factorization degrees of the specialized f^n over the residue field
/// F_q[t]/(P), ascending; rejects places violating the good-place contract.
std::vector<int> frobenius_cycle_type(const gf::Field& k, const RatFunc& t0,
                                      const RatFunc& s0, int n, const GoodPlace& place);

struct Sample {
  Poly place;
  std::vector<int> cycle_type;
};

/// Cycle types at every listed place. The serial kernel is the reference;
/// the parallel kernel shards over places and must produce identical output.
std::vector<Sample> scan_serial(const gf::Field& k, const RatFunc& t0, const RatFunc& s0,
                                int n, const std::vector<GoodPlace>& places);
std::vector<Sample> scan_parallel(const gf::Field& k, const RatFunc& t0,
                                  const RatFunc& s0, int n,
                                  const std::vector<GoodPlace>& places);

enum class Status { Certified, Inconclusive };

struct ScanResult {
  std::string target;  // "Phi_n" or "Phi_n_1"
  int level = 0;
  bool theta_present = false;
  std::size_t target_order = 0;
  std::vector<Sample> samples;
  std::vector<std::vector<int>> observed;  // deduplicated, sorted
  Status status = Status::Inconclusive;
  std::vector<phig::Subgroup> survivors;   // maximal subgroups not eliminated
};

int default_max_deg(int q);

/// Maximal-subgroup elimination against Phi_n (or Phi_{n,1} when a (q-1)-th
/// root of -t0 exists in K). A maximal subgroup M is eliminated when some
/// observed cycle type occurs for no element of M; Certified means every
/// maximal subgroup was eliminated.
ScanResult certify(const gf::Field& k, const RatFunc& t0, const RatFunc& s0, int n,
                   int max_deg, bool parallel = true);

}  // namespace dyngal::frobscan

#endif
