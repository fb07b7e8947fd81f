#include "dyngal/frobscan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dyngal/carlitz.hpp"
#include "dyngal/criterion.hpp"

namespace dyngal::frobscan {

namespace P = dyngal::poly;

std::vector<GoodPlace> good_places(const gf::Field& k, const RatFunc& t0,
                                   const RatFunc& s0, int n, int max_deg) {
  if (t0.is_zero()) throw std::domain_error("frobscan: t0 must be nonzero");
  if (max_deg < 1 || max_deg > 10)
    throw std::domain_error("frobscan: max_deg must be in 1..10");
  (void)n;
  std::vector<GoodPlace> out;
  for (const Poly& place : ff::places_up_to(k, max_deg)) {
    ff::Place v = ff::Place::at(place);
    if (ff::valuation(k, t0, v) != 0) continue;
    if (!s0.is_zero() && ff::valuation(k, s0, v) < 0) continue;
    out.push_back(GoodPlace{place, P::deg(place)});
  }
  return out;
}

gf::ExtField residue_field(const gf::Field& k, const GoodPlace& place) {
  return gf::ExtField(k, std::vector<gf::Fq>(place.place.c.begin(), place.place.c.end()));
}

std::vector<int> frobenius_cycle_type(const gf::Field& k, const RatFunc& t0,
                                      const RatFunc& s0, int n, const GoodPlace& place) {
  ff::Place v = ff::Place::at(place.place);
  if (ff::valuation(k, t0, v) != 0 || (!s0.is_zero() && ff::valuation(k, s0, v) < 0))
    throw std::domain_error("frobscan: place is not good for this input");

  gf::ExtField ext = residue_field(k, place);
  auto tbar = residue_point(ext);

  auto dense = carlitz::to_dense(k, carlitz::iterate_f(k, t0, s0, n));
  ff::ExtPoly fbar;
  fbar.c.reserve(dense.size());
  for (const auto& c : dense)
    fbar.c.push_back(c.is_zero() ? ext.zero() : ff::eval_at(k, ext, c, tbar));
  P::normalize(ext, fbar);

  std::vector<int> type;
  for (auto& [g, m] : P::factor(ext, fbar)) {
    if (m != 1) throw std::logic_error("frobscan: specialized iterate not separable");
    type.push_back(P::deg(g));
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<Sample> scan_serial(const gf::Field& k, const RatFunc& t0, const RatFunc& s0,
                                int n, const std::vector<GoodPlace>& places) {
  std::vector<Sample> out(places.size());
  for (std::size_t i = 0; i < places.size(); ++i)
    out[i] = Sample{places[i].place, frobenius_cycle_type(k, t0, s0, n, places[i])};
  return out;
}

std::vector<Sample> scan_parallel(const gf::Field& k, const RatFunc& t0,
                                  const RatFunc& s0, int n,
                                  const std::vector<GoodPlace>& places) {
  std::vector<Sample> out(places.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < std::int64_t(places.size()); ++i)
    out[i] = Sample{places[i].place, frobenius_cycle_type(k, t0, s0, n, places[i])};
  return out;
}

int default_max_deg(int q) {
  if (q <= 2) return 8;
  if (q == 3) return 5;
  return 4;
}

ScanResult certify(const gf::Field& k, const RatFunc& t0, const RatFunc& s0, int n,
                   int max_deg, bool parallel) {
  ScanResult result;
  result.level = n;

  auto theta = criterion::solve_theta(k, t0);
  result.theta_present = theta.present();
  result.target = theta.present() ? "Phi_n_1" : "Phi_n";

  phig::PhiGroup G(k, n);
  phig::Subgroup target = theta.present() ? phig::full_phi1(G) : phig::full_phi(G);
  if (target.order() > (std::size_t(1) << 14))
    throw std::domain_error("frobscan: target group exceeds the size bound");
  result.target_order = target.order();

  auto places = good_places(k, t0, s0, n, max_deg);
  result.samples = parallel ? scan_parallel(k, t0, s0, n, places)
                            : scan_serial(k, t0, s0, n, places);

  std::set<std::vector<int>> observed;
  for (auto& s : result.samples) observed.insert(s.cycle_type);
  result.observed.assign(observed.begin(), observed.end());

  // Sanity: every observed type is realized in the target group.
  std::set<std::vector<int>> target_types;
  for (const auto& e : target.elems) target_types.insert(G.cycle_type(e));
  for (auto& ty : result.observed)
    if (!target_types.count(ty))
      throw std::logic_error("frobscan: observed cycle type not realized in target");

  auto maximals = phig::maximal_subgroups(G, target);
  for (auto& M : maximals) {
    std::set<std::vector<int>> m_types;
    for (const auto& e : M.elems) m_types.insert(G.cycle_type(e));
    bool eliminated = false;
    for (auto& ty : result.observed)
      if (!m_types.count(ty)) {
        eliminated = true;
        break;
      }
    if (!eliminated) result.survivors.push_back(M);
  }
  result.status = result.survivors.empty() ? Status::Certified : Status::Inconclusive;
  return result;
}

}  // namespace dyngal::frobscan
