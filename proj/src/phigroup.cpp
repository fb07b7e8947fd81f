#include "dyngal/phigroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dyngal::phig {

PhiGroup::PhiGroup(const gf::Field& k, int n) : k_(&k), n_(n) {
  if (n < 1) throw std::invalid_argument("phigroup: level must be >= 1");
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= std::uint64_t(k.q());
    if (size > 1024) throw std::invalid_argument("phigroup: q^n exceeds 1024");
  }
  rn_size_ = std::uint32_t(size);

  add_.resize(std::size_t(rn_size_) * rn_size_);
  mul_.resize(std::size_t(rn_size_) * rn_size_);
  neg_.resize(rn_size_);
  inv_.assign(rn_size_, 0);

  std::vector<std::vector<gf::Fq>> digits(rn_size_, std::vector<gf::Fq>(n));
  for (Rn a = 0; a < rn_size_; ++a) {
    Rn v = a;
    for (int i = 0; i < n; ++i) {
      digits[a][i] = gf::Fq(v % k.q());
      v /= std::uint32_t(k.q());
    }
  }
  auto encode = [&](const std::vector<gf::Fq>& d) {
    Rn v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * std::uint32_t(k.q()) + d[i];
    return v;
  };

  for (Rn a = 0; a < rn_size_; ++a) {
    std::vector<gf::Fq> na(n);
    for (int i = 0; i < n; ++i) na[i] = k.neg(digits[a][i]);
    neg_[a] = encode(na);
    for (Rn b = 0; b < rn_size_; ++b) {
      std::vector<gf::Fq> s(n), m(n, 0);
      for (int i = 0; i < n; ++i) s[i] = k.add(digits[a][i], digits[b][i]);
      for (int i = 0; i < n; ++i) {
        if (digits[a][i] == 0) continue;
        for (int j = 0; i + j < n; ++j)
          if (digits[b][j] != 0) m[i + j] = k.add(m[i + j], k.mul(digits[a][i], digits[b][j]));
      }
      add_[at(a, b)] = encode(s);
      mul_[at(a, b)] = encode(m);
    }
  }
  for (Rn a = 0; a < rn_size_; ++a) {
    if (digits[a][0] == 0 || inv_[a] != 0) continue;
    for (Rn b = 0; b < rn_size_; ++b)
      if (mul_[at(a, b)] == 1) {
        inv_[a] = b;
        inv_[b] = a;
        break;
      }
  }
}

gf::Fq PhiGroup::rn_digit(Rn a, int i) const {
  for (int j = 0; j < i; ++j) a /= std::uint32_t(k_->q());
  return gf::Fq(a % std::uint32_t(k_->q()));
}

Rn PhiGroup::rn_from_digits(const std::vector<gf::Fq>& d) const {
  Rn v = 0;
  for (int i = n_ - 1; i >= 0; --i)
    v = v * std::uint32_t(k_->q()) + (i < int(d.size()) ? d[i] : 0);
  return v;
}

Rn PhiGroup::rn_inv(Rn a) const {
  if (!rn_is_unit(a)) throw std::domain_error("phigroup: inverse of a non-unit");
  return inv_[a];
}

PhiGroup::Elem PhiGroup::pow(Elem a, std::uint64_t e) const {
  Elem acc = identity();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

std::vector<int> PhiGroup::cycle_type(const Elem& a) const {
  std::vector<bool> seen(rn_size_, false);
  std::vector<int> type;
  for (Rn c = 0; c < rn_size_; ++c) {
    if (seen[c]) continue;
    int len = 0;
    Rn cur = c;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = act(a, cur);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::pair<gf::Fq, Rn> PhiGroup::abelianization_coords(const Elem& a) const {
  if (!in_phi1(a))
    throw std::domain_error("phigroup: abelianization coordinates need F(0) = 1");
  return {rn_digit(a.g, 0), a.f};
}

std::vector<PhiGroup::Elem> PhiGroup::phi_elements() const {
  std::vector<Elem> out;
  for (Rn g = 0; g < rn_size_; ++g)
    for (Rn f = 0; f < rn_size_; ++f)
      if (rn_is_unit(f)) out.push_back(Elem{g, f});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PhiGroup::Elem> PhiGroup::phi1_elements() const {
  std::vector<Elem> out;
  for (Rn g = 0; g < rn_size_; ++g)
    for (Rn f = 0; f < rn_size_; ++f)
      if (rn_digit(f, 0) == k_->one()) out.push_back(Elem{g, f});
  std::sort(out.begin(), out.end());
  return out;
}

std::string PhiGroup::to_string(const Elem& a) const {
  auto rn_str = [&](Rn v) {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += k_->to_string(rn_digit(v, i));
    }
    return s + "]";
  };
  return "(" + rn_str(a.g) + ", " + rn_str(a.f) + ")";
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(const PhiGroup::Elem& e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

namespace {

/// Right-multiplication closure from a generating set; in a finite group this
/// yields the generated subgroup.
std::vector<PhiGroup::Elem> close_over(const PhiGroup& G,
                                       const std::vector<PhiGroup::Elem>& gens) {
  std::vector<bool> seen(G.index_space(), false);
  std::vector<PhiGroup::Elem> out{G.identity()};
  seen[G.index_of(G.identity())] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      auto x = G.mul(out[i], g);
      auto idx = G.index_of(x);
      if (!seen[idx]) {
        seen[idx] = true;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t subgroup_hash(const PhiGroup& G, const std::vector<PhiGroup::Elem>& elems) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& e : elems) {
    h ^= G.index_of(e) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Subgroup closure(const PhiGroup& G, const std::vector<PhiGroup::Elem>& generators) {
  // Greedy generator absorption keeps the generating set logarithmic.
  Subgroup out;
  out.elems = {G.identity()};
  for (const auto& g : generators) {
    if (out.contains(g)) continue;
    out.gens.push_back(g);
    out.elems = close_over(G, out.gens);
  }
  return out;
}

Subgroup full_phi(const PhiGroup& G) {
  Subgroup s;
  s.elems = G.phi_elements();
  s.gens = small_generating_set(G, s);
  return s;
}

Subgroup full_phi1(const PhiGroup& G) {
  Subgroup s;
  s.elems = G.phi1_elements();
  s.gens = small_generating_set(G, s);
  return s;
}

std::vector<PhiGroup::Elem> commutator_set_serial(const PhiGroup& G, const Subgroup& H) {
  std::vector<bool> seen(G.index_space(), false);
  const auto& e = H.elems;
  std::vector<PhiGroup::Elem> invs(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) invs[i] = G.inv(e[i]);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      auto c = G.mul(G.mul(invs[i], invs[j]), G.mul(e[i], e[j]));
      seen[G.index_of(c)] = true;
    }
  std::vector<PhiGroup::Elem> out;
  for (std::uint64_t idx = 0; idx < G.index_space(); ++idx)
    if (seen[idx]) out.push_back(G.from_index(idx));
  return out;
}

std::vector<PhiGroup::Elem> commutator_set_parallel(const PhiGroup& G, const Subgroup& H) {
  const auto& e = H.elems;
  std::vector<PhiGroup::Elem> invs(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) invs[i] = G.inv(e[i]);
  std::vector<char> seen(G.index_space(), 0);
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<char> local(G.index_space(), 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < std::int64_t(e.size()); ++i)
      for (std::size_t j = 0; j < e.size(); ++j) {
        auto c = G.mul(G.mul(invs[i], invs[j]), G.mul(e[i], e[j]));
        local[G.index_of(c)] = 1;
      }
#pragma omp critical
    for (std::uint64_t idx = 0; idx < G.index_space(); ++idx)
      if (local[idx]) seen[idx] = 1;
  }
#else
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      auto c = G.mul(G.mul(invs[i], invs[j]), G.mul(e[i], e[j]));
      seen[G.index_of(c)] = 1;
    }
#endif
  std::vector<PhiGroup::Elem> out;
  for (std::uint64_t idx = 0; idx < G.index_space(); ++idx)
    if (seen[idx]) out.push_back(G.from_index(idx));
  return out;
}

Subgroup commutator_subgroup(const PhiGroup& G, const Subgroup& H, bool parallel) {
  auto set = parallel ? commutator_set_parallel(G, H) : commutator_set_serial(G, H);
  return closure(G, set);
}

Subgroup frattini_subgroup(const PhiGroup& G, const Subgroup& H, bool parallel) {
  auto set = parallel ? commutator_set_parallel(G, H) : commutator_set_serial(G, H);
  set.reserve(set.size() + H.order());
  for (const auto& a : H.elems) set.push_back(G.pow(a, std::uint64_t(G.field().p())));
  return closure(G, set);
}

bool is_p_group(const PhiGroup& G, const Subgroup& H) {
  std::size_t n = H.order();
  if (n == 0) return false;
  while (n % std::size_t(G.field().p()) == 0) n /= std::size_t(G.field().p());
  return n == 1;
}

int character_dim(const PhiGroup& G, const Subgroup& H) {
  if (!is_p_group(G, H))
    throw std::domain_error("phigroup: character dimension requires a p-group");
  Subgroup fr = frattini_subgroup(G, H);
  std::size_t index = H.order() / fr.order();
  int d = 0;
  while (index > 1) {
    index /= std::size_t(G.field().p());
    ++d;
  }
  return d;
}

bool is_normal_in(const PhiGroup& G, const Subgroup& M, const Subgroup& H) {
  const auto& conj = H.gens.empty() ? H.elems : H.gens;
  for (const auto& h : conj) {
    auto hi = G.inv(h);
    for (const auto& m : M.elems)
      if (!M.contains(G.mul(G.mul(h, m), hi))) return false;
  }
  return true;
}

std::vector<PhiGroup::Elem> small_generating_set(const PhiGroup& G, const Subgroup& H) {
  std::vector<PhiGroup::Elem> gens;
  Subgroup cur;
  cur.elems = {G.identity()};
  for (const auto& e : H.elems) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur.elems = close_over(G, gens);
    if (cur.order() == H.order()) break;
  }
  return gens;
}

std::vector<Subgroup> all_subgroups(const PhiGroup& G, const Subgroup& H) {
  if (H.order() > 600) throw std::domain_error("phigroup: subgroup lattice bound exceeded");
  std::vector<Subgroup> subs;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;

  auto try_insert = [&](Subgroup s) -> bool {
    auto h = subgroup_hash(G, s.elems);
    auto& bucket = by_hash[h];
    for (auto idx : bucket)
      if (subs[idx].elems == s.elems) return false;
    bucket.push_back(subs.size());
    subs.push_back(std::move(s));
    return true;
  };

  Subgroup trivial;
  trivial.elems = {G.identity()};
  try_insert(trivial);

  for (std::size_t i = 0; i < subs.size(); ++i) {
    // Copy generators: subs may reallocate during the scan.
    auto base_gens = subs[i].gens;
    for (const auto& x : H.elems) {
      if (subs[i].contains(x)) continue;
      auto gens = base_gens;
      gens.push_back(x);
      Subgroup ext;
      ext.gens = gens;
      ext.elems = close_over(G, gens);
      try_insert(std::move(ext));
    }
  }
  return subs;
}

std::vector<Subgroup> maximal_subgroups_lattice(const PhiGroup& G, const Subgroup& H) {
  auto subs = all_subgroups(G, H);
  std::vector<Subgroup> proper;
  for (auto& s : subs)
    if (s.order() < H.order()) proper.push_back(std::move(s));
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size() && maximal; ++j) {
      if (i == j || proper[j].order() <= proper[i].order()) continue;
      bool subset = true;
      for (const auto& e : proper[i].elems)
        if (!proper[j].contains(e)) {
          subset = false;
          break;
        }
      if (subset) maximal = false;
    }
    if (maximal) out.push_back(proper[i]);
  }
  std::sort(out.begin(), out.end(), [&](const Subgroup& a, const Subgroup& b) {
    return a.elems < b.elems;
  });
  return out;
}

std::vector<Subgroup> maximal_subgroups_frattini(const PhiGroup& G, const Subgroup& H) {
  if (!is_p_group(G, H))
    throw std::domain_error("phigroup: Frattini route requires a p-group");
  const int p = G.field().p();
  Subgroup fr = frattini_subgroup(G, H);

  // Coordinates of H / Frattini(H) as an F_p-space: pick coset representatives
  // greedily and span exhaustively.
  std::vector<PhiGroup::Elem> basis;
  std::unordered_map<std::uint64_t, std::vector<int>> coset_coords;
  std::vector<PhiGroup::Elem> span_reps{G.identity()};
  std::vector<std::vector<int>> span_coords{{}};
  auto canonical = [&](const PhiGroup::Elem& e) {
    // Least element of the coset e * Frattini.
    PhiGroup::Elem best = G.mul(e, fr.elems[0]);
    for (const auto& f : fr.elems) best = std::min(best, G.mul(e, f));
    return G.index_of(best);
  };
  coset_coords[canonical(G.identity())] = {};

  for (const auto& e : H.elems) {
    if (coset_coords.count(canonical(e))) continue;
    basis.push_back(e);
    // Extend the span by the new basis vector.
    std::vector<PhiGroup::Elem> new_reps;
    std::vector<std::vector<int>> new_coords;
    for (std::size_t i = 0; i < span_reps.size(); ++i) {
      PhiGroup::Elem cur = span_reps[i];
      for (int c = 1; c < p; ++c) {
        cur = G.mul(cur, e);
        auto coords = span_coords[i];
        coords.resize(basis.size(), 0);
        coords.back() = c;
        auto key = canonical(cur);
        if (!coset_coords.count(key)) {
          coset_coords[key] = coords;
          new_reps.push_back(cur);
          new_coords.push_back(coords);
        }
      }
    }
    for (std::size_t i = 0; i < new_reps.size(); ++i) {
      span_reps.push_back(new_reps[i]);
      span_coords.push_back(new_coords[i]);
    }
  }
  int d = int(basis.size());
  std::size_t cosets = 1;
  for (int i = 0; i < d; ++i) cosets *= std::size_t(p);
  if (cosets * fr.order() != H.order())
    throw std::logic_error("phigroup: Frattini quotient span incomplete");

  std::vector<std::vector<int>> elem_coords(H.elems.size());
  for (std::size_t i = 0; i < H.elems.size(); ++i) {
    elem_coords[i] = coset_coords.at(canonical(H.elems[i]));
    elem_coords[i].resize(d, 0);
  }

  // One maximal subgroup per hyperplane, i.e. per nonzero functional up to
  // scalars: the kernel of w . coords.
  std::vector<Subgroup> out;
  std::vector<int> w(d, 0);
  auto next_w = [&]() {
    for (int i = 0; i < d; ++i) {
      if (++w[i] < p) return true;
      w[i] = 0;
    }
    return false;
  };
  while (next_w()) {
    int lead = d - 1;
    while (lead >= 0 && w[lead] == 0) --lead;
    if (lead < 0 || w[lead] != 1) continue;  // canonical scalar representative
    Subgroup M;
    for (std::size_t i = 0; i < H.elems.size(); ++i) {
      int dot = 0;
      for (int j = 0; j < d; ++j) dot += w[j] * elem_coords[i][j];
      if (dot % p == 0) M.elems.push_back(H.elems[i]);
    }
    std::sort(M.elems.begin(), M.elems.end());
    M.gens = small_generating_set(G, M);
    out.push_back(std::move(M));
  }
  std::sort(out.begin(), out.end(), [&](const Subgroup& a, const Subgroup& b) {
    return a.elems < b.elems;
  });
  return out;
}

std::vector<Subgroup> maximal_subgroups(const PhiGroup& G, const Subgroup& H) {
  if (H.order() <= 600) return maximal_subgroups_lattice(G, H);
  if (is_p_group(G, H)) return maximal_subgroups_frattini(G, H);
  throw std::domain_error("phigroup: maximal subgroup enumeration bound exceeded");
}

}  // namespace dyngal::phig
