#ifndef DYNGAL_PHIGROUP_HPP
#define DYNGAL_PHIGROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dyngal/gf.hpp"

// The finite groups R_n = F_q[y]/(y^n), Phi_n = R_n x| R_n^* and
// Phi_{n,1} = R_n x| (R_n)_1^*, their affine action on root labels, and
// subgroup machinery (closure, commutators, Frattini quotient, maximal
// subgroups).

namespace dyngal::phig {

/// Element of R_n encoded as n base-q digits (digit i = coefficient of y^i).
using Rn = std::uint32_t;

class PhiGroup {
 public:
  /// Builds the level-n context with R_n multiplication tables.
  /// Requires q^n <= 1024.
  PhiGroup(const gf::Field& k, int n);

  const gf::Field& field() const { return *k_; }
  int level() const { return n_; }
  std::uint32_t rn_size() const { return rn_size_; }  // q^n

  Rn rn_zero() const { return 0; }
  Rn rn_one() const { return 1; }
  Rn rn_y() const { return Rn(k_->q()); }
  gf::Fq rn_digit(Rn a, int i) const;
  Rn rn_from_digits(const std::vector<gf::Fq>& digits) const;
  Rn rn_add(Rn a, Rn b) const { return add_[at(a, b)]; }
  Rn rn_neg(Rn a) const { return neg_[a]; }
  Rn rn_mul(Rn a, Rn b) const { return mul_[at(a, b)]; }
  bool rn_is_unit(Rn a) const { return rn_digit(a, 0) != 0; }
  Rn rn_inv(Rn a) const;  // rejects non-units

  /// Group element (G, F) with F a unit; acts on labels as c -> F c + G.
  struct Elem {
    Rn g = 0, f = 1;
    bool operator==(const Elem& o) const { return g == o.g && f == o.f; }
    bool operator<(const Elem& o) const { return g != o.g ? g < o.g : f < o.f; }
  };

  Elem identity() const { return Elem{0, 1}; }
  Elem mul(const Elem& a, const Elem& b) const {
    return Elem{rn_add(a.g, rn_mul(a.f, b.g)), rn_mul(a.f, b.f)};
  }
  Elem inv(const Elem& a) const {
    Rn fi = rn_inv(a.f);
    return Elem{rn_neg(rn_mul(fi, a.g)), fi};
  }
  Elem pow(Elem a, std::uint64_t e) const;
  bool in_phi1(const Elem& a) const { return rn_digit(a.f, 0) == k_->one(); }

  /// Compact index of an element: g * q^n + f.
  std::uint64_t index_of(const Elem& a) const { return std::uint64_t(a.g) * rn_size_ + a.f; }
  Elem from_index(std::uint64_t idx) const {
    return Elem{Rn(idx / rn_size_), Rn(idx % rn_size_)};
  }
  std::uint64_t index_space() const { return std::uint64_t(rn_size_) * rn_size_; }

  Rn act(const Elem& a, Rn label) const { return rn_add(rn_mul(a.f, label), a.g); }

  /// Cycle lengths of the label action, ascending, summing to q^n.
  std::vector<int> cycle_type(const Elem& a) const;

  /// (G(0), F) for elements of Phi_{n,1}; rejects F(0) != 1.
  std::pair<gf::Fq, Rn> abelianization_coords(const Elem& a) const;

  std::vector<Elem> phi_elements() const;    // |.| = q^{2n-1}(q-1)
  std::vector<Elem> phi1_elements() const;   // |.| = q^{2n-1}

  std::string to_string(const Elem& a) const;

 private:
  const gf::Field* k_;
  int n_;
  std::uint32_t rn_size_;
  std::vector<Rn> add_, mul_, neg_, inv_;

  std::size_t at(Rn a, Rn b) const { return std::size_t(a) * rn_size_ + b; }
};

/// Subgroup as an explicit sorted element list plus a small generating set.
struct Subgroup {
  std::vector<PhiGroup::Elem> elems;  // sorted canonically
  std::vector<PhiGroup::Elem> gens;

  std::size_t order() const { return elems.size(); }
  bool contains(const PhiGroup::Elem& e) const;
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

Subgroup closure(const PhiGroup& G, const std::vector<PhiGroup::Elem>& generators);
Subgroup full_phi(const PhiGroup& G);
Subgroup full_phi1(const PhiGroup& G);

/// All commutators [a, b] = a^{-1} b^{-1} a b over H x H, deduplicated.
/// The serial kernel is the reference; the parallel kernel shards the pair
/// scan and merges per-thread bitmaps.
std::vector<PhiGroup::Elem> commutator_set_serial(const PhiGroup& G, const Subgroup& H);
std::vector<PhiGroup::Elem> commutator_set_parallel(const PhiGroup& G, const Subgroup& H);

/// Subgroup generated by all commutators of H.
Subgroup commutator_subgroup(const PhiGroup& G, const Subgroup& H, bool parallel = true);

/// For p-groups: the Frattini subgroup <[H,H], H^p>.
Subgroup frattini_subgroup(const PhiGroup& G, const Subgroup& H, bool parallel = true);

/// dim_{F_p} Hom(H, F_p) = log_p [H : Frattini(H)] for a p-group H.
int character_dim(const PhiGroup& G, const Subgroup& H);

bool is_p_group(const PhiGroup& G, const Subgroup& H);
bool is_normal_in(const PhiGroup& G, const Subgroup& M, const Subgroup& H);

/// Every subgroup of H, by closure of single-element extensions.
/// Feasible at desk scale only; guarded by |H| <= 600.
std::vector<Subgroup> all_subgroups(const PhiGroup& G, const Subgroup& H);

/// Maximal subgroups enumerated from the full lattice (independent route).
std::vector<Subgroup> maximal_subgroups_lattice(const PhiGroup& G, const Subgroup& H);

/// Maximal subgroups of a p-group as preimages of the hyperplanes of
/// H / Frattini(H) (structural route).
std::vector<Subgroup> maximal_subgroups_frattini(const PhiGroup& G, const Subgroup& H);

/// Dispatch: lattice route for |H| <= 600, Frattini route for larger
/// p-groups; rejects larger non-p-groups.
std::vector<Subgroup> maximal_subgroups(const PhiGroup& G, const Subgroup& H);

/// A small generating set found greedily (for reports).
std::vector<PhiGroup::Elem> small_generating_set(const PhiGroup& G, const Subgroup& H);

}  // namespace dyngal::phig

#endif
