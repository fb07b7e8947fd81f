#include "dyngal/asv.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyngal/fp_linalg.hpp"

namespace dyngal::asv {

namespace P = dyngal::poly;

bool operator==(const ASPolePart& a, const ASPolePart& b) {
  return a.place == b.place && a.terms == b.terms;
}

bool operator==(const ASForm& a, const ASForm& b) {
  return a.constant_trace == b.constant_trace && a.poly_part == b.poly_part &&
         a.pole_parts == b.pole_parts;
}

RatFunc wp(const gf::Field& k, const RatFunc& z) {
  return ff::sub(k, ff::pow(k, z, k.p()), z);
}

namespace {

/// h with h^p = g in the residue field F_q[t]/(P), i.e. the inverse Frobenius,
/// computed as r*deg(P) - 1 successive p-th powers.
Poly pth_root_mod(const gf::Field& k, const Poly& g, const Poly& place) {
  int steps = k.r() * P::deg(place) - 1;
  Poly h = P::mod(k, g, place);
  for (int i = 0; i < steps; ++i) h = P::pow_mod(k, h, std::uint64_t(k.p()), place);
  return h;
}

/// terms[index - j] += (base-P digit j of g), so every stored numerator has
/// degree < deg P. Zero entries are erased.
void add_layers(const gf::Field& k, std::map<int, Poly>& terms, int index, Poly g,
                const Poly& place) {
  int j = 0;
  while (!P::is_zero(g)) {
    auto [q, r] = P::divmod(k, g, place);
    if (!P::is_zero(r)) {
      int at = index - j;
      if (at < 1) throw std::logic_error("asv: pole layer underflow");
      auto it = terms.find(at);
      if (it == terms.end()) {
        terms[at] = r;
      } else {
        it->second = P::add(k, it->second, r);
        if (P::is_zero(it->second)) terms.erase(it);
      }
    }
    g = std::move(q);
    ++j;
  }
}

}  // namespace

ASForm as_reduce(const gf::Field& k, const RatFunc& u) {
  const int p = k.p();
  ASForm out;
  auto pf = ff::partial_fractions(k, u);

  // Polynomial part: kill c * t^{pm} by subtracting (c^{1/p} t^m)^p - c^{1/p} t^m,
  // which trades it for c^{1/p} t^m; a top-down scan never revisits killed slots.
  std::vector<gf::Fq> coeffs(pf.poly_part.c.begin(), pf.poly_part.c.end());
  for (int e = int(coeffs.size()) - 1; e >= 1; --e) {
    if (coeffs[e] == 0 || e % p != 0) continue;
    gf::Fq root = k.pth_root(coeffs[e]);
    coeffs[e] = 0;
    coeffs[e / p] = k.add(coeffs[e / p], root);
  }
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out.poly_part[int(i)] = coeffs[i];
  out.constant_trace = coeffs.empty() ? 0 : k.trace_to_prime(coeffs[0]);

  // Pole parts: kill the top layer g / P^{pm} by subtracting
  // (h/P^m)^p - h/P^m with h^p = g (mod P); layer pm picks up
  // g - h^p = -P*w, i.e. -w lands on layer pm-1, and h on layer m.
  for (auto& [place, numerators] : pf.pole_parts) {
    std::map<int, Poly> terms;
    for (std::size_t m = 1; m <= numerators.size(); ++m)
      if (!P::is_zero(numerators[m - 1])) terms[int(m)] = numerators[m - 1];
    while (true) {
      int top = 0;
      for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        if (it->first % p == 0) {
          top = it->first;
          break;
        }
      if (top == 0) break;
      Poly g = terms[top];
      terms.erase(top);
      Poly h = pth_root_mod(k, g, place);
      Poly hp = h;
      for (int i = 1; i < p; ++i) hp = P::mul(k, hp, h);
      Poly w = P::div_exact(k, P::sub(k, hp, g), place);
      if (!P::is_zero(w)) add_layers(k, terms, top - 1, P::neg(k, w), place);
      add_layers(k, terms, top / p, h, place);
    }
    if (!terms.empty()) out.pole_parts.push_back(ASPolePart{place, std::move(terms)});
  }
  std::sort(out.pole_parts.begin(), out.pole_parts.end(),
            [&](const ASPolePart& a, const ASPolePart& b) {
              return P::less(k, a.place, b.place);
            });
  return out;
}

RatFunc lift(const gf::Field& k, const ASForm& form) {
  Poly poly;
  for (auto& [i, c] : form.poly_part) {
    if (int(poly.c.size()) <= i) poly.c.resize(i + 1, 0);
    poly.c[i] = c;
  }
  if (form.constant_trace != 0) {
    gf::Fq c0 = k.mul(k.trace_one_element(), k.from_int(form.constant_trace));
    if (poly.c.empty()) poly.c.resize(1, 0);
    poly.c[0] = k.add(poly.c[0], c0);
  }
  P::normalize(k, poly);
  RatFunc acc = ff::from_poly(k, poly);
  for (const auto& pp : form.pole_parts) {
    int top = pp.terms.rbegin()->first;
    std::vector<Poly> powers(top + 1);
    powers[0] = P::one(k);
    for (int i = 1; i <= top; ++i) powers[i] = P::mul(k, powers[i - 1], pp.place);
    for (auto& [i, g] : pp.terms) acc = ff::add(k, acc, ff::make_ratfunc(k, g, powers[i]));
  }
  return acc;
}

bool is_in_U(const gf::Field& k, const RatFunc& u) { return as_reduce(k, u).is_zero(); }

namespace {

/// Fixed F_p-coordinate frame for rational functions with poles in a
/// prescribed set of bounded orders and bounded polynomial degree.
struct Frame {
  const gf::Field* k;
  int poly_deg;                                 // slots 0..poly_deg
  std::vector<std::pair<Poly, int>> pole_caps;  // (P, max index)
  std::size_t dim = 0;

  void init() {
    dim = std::size_t(poly_deg + 1) * k->r();
    for (auto& [place, cap] : pole_caps)
      dim += std::size_t(cap) * P::deg(place) * k->r();
  }

  std::vector<int> coords(const RatFunc& u) const {
    std::vector<int> v(dim, 0);
    auto pf = ff::partial_fractions(*k, u);
    if (P::deg(pf.poly_part) > poly_deg)
      throw std::logic_error("asv: frame polynomial overflow");
    for (int i = 0; i <= std::min(poly_deg, P::deg(pf.poly_part)); ++i) {
      auto cs = k->coords(P::coeff(*k, pf.poly_part, i));
      for (int l = 0; l < k->r(); ++l) v[std::size_t(i) * k->r() + l] = cs[l];
    }
    std::size_t off = std::size_t(poly_deg + 1) * k->r();
    for (auto& [place, cap] : pole_caps) {
      int dp = P::deg(place);
      for (auto& [pp, numerators] : pf.pole_parts) {
        if (!(pp == place)) continue;
        if (int(numerators.size()) > cap)
          throw std::logic_error("asv: frame pole order overflow");
        for (int i = 1; i <= int(numerators.size()); ++i)
          for (int j = 0; j < dp; ++j) {
            auto cs = k->coords(P::coeff(*k, numerators[i - 1], j));
            for (int l = 0; l < k->r(); ++l)
              v[off + (std::size_t(i - 1) * dp + j) * k->r() + l] = cs[l];
          }
      }
      off += std::size_t(cap) * dp * k->r();
    }
    for (auto& [pp, numerators] : pf.pole_parts) {
      (void)numerators;
      bool known = false;
      for (auto& [place, cap] : pole_caps) {
        (void)cap;
        if (pp == place) known = true;
      }
      if (!known) throw std::logic_error("asv: pole outside frame");
    }
    return v;
  }
};

}  // namespace

std::optional<RatFunc> as_membership_oracle(const gf::Field& k, const RatFunc& u) {
  if (u.is_zero()) return ff::rf_zero(k);
  const int p = k.p();

  // If z^p - z = u then at every pole P of u, v_P(z) = v_P(u)/p, and the
  // polynomial part of z has degree deg/p; candidates are padded to the
  // ceilings, which is still complete.
  auto pf = ff::partial_fractions(k, u);
  int du = std::max(0, P::deg(pf.poly_part));
  int dz = (du + p - 1) / p;
  std::vector<std::pair<Poly, int>> z_caps;
  for (auto& [place, numerators] : pf.pole_parts) {
    int e = 0;
    for (int i = int(numerators.size()); i >= 1; --i)
      if (!P::is_zero(numerators[i - 1])) {
        e = std::max(e, i);
        break;
      }
    if (e > 0) z_caps.emplace_back(place, (e + p - 1) / p);
  }

  Frame ambient{&k, std::max(du, p * dz), {}, 0};
  for (auto& [place, cap] : z_caps) ambient.pole_caps.emplace_back(place, p * cap);
  ambient.init();

  std::vector<RatFunc> basis;
  for (int m = 0; m <= dz; ++m)
    for (int l = 0; l < k.r(); ++l) {
      std::vector<int> cs(k.r(), 0);
      cs[l] = 1;
      basis.push_back(ff::from_poly(k, P::monomial(k, k.from_coords(cs), m)));
    }
  for (auto& [place, cap] : z_caps) {
    Poly pm = P::one(k);
    for (int i = 1; i <= cap; ++i) {
      pm = P::mul(k, pm, place);
      for (int j = 0; j < P::deg(place); ++j)
        for (int l = 0; l < k.r(); ++l) {
          std::vector<int> cs(k.r(), 0);
          cs[l] = 1;
          basis.push_back(ff::make_ratfunc(k, P::monomial(k, k.from_coords(cs), j), pm));
        }
    }
  }

  std::vector<std::vector<int>> cols;
  cols.reserve(basis.size());
  for (auto& b : basis) cols.push_back(ambient.coords(wp(k, b)));
  auto sol = fpla::solve(p, cols, ambient.coords(u));
  if (!sol) return std::nullopt;

  RatFunc z = ff::rf_zero(k);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int rep = 0; rep < (*sol)[i] % p; ++rep) z = ff::add(k, z, basis[i]);
  if (!(wp(k, z) == u)) throw std::logic_error("asv: oracle witness failed verification");
  return z;
}

Independence as_independent(const gf::Field& k, const std::vector<RatFunc>& us) {
  const int p = k.p();
  std::vector<ASForm> forms;
  forms.reserve(us.size());
  for (auto& u : us) forms.push_back(as_reduce(k, u));

  // Shared coordinates: constant-trace slot, polynomial slots, pole slots.
  int poly_deg = 0;
  std::vector<Poly> places;
  std::vector<int> caps;
  for (auto& f : forms) {
    if (!f.poly_part.empty()) poly_deg = std::max(poly_deg, f.poly_part.rbegin()->first);
    for (auto& pp : f.pole_parts) {
      std::size_t at = places.size();
      for (std::size_t i = 0; i < places.size(); ++i)
        if (places[i] == pp.place) at = i;
      int top = pp.terms.rbegin()->first;
      if (at == places.size()) {
        places.push_back(pp.place);
        caps.push_back(top);
      } else {
        caps[at] = std::max(caps[at], top);
      }
    }
  }
  std::size_t dim = 1 + std::size_t(poly_deg) * k.r();
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < places.size(); ++i) {
    offsets.push_back(dim);
    dim += std::size_t(caps[i]) * P::deg(places[i]) * k.r();
  }

  std::vector<std::vector<int>> rows;
  for (auto& f : forms) {
    std::vector<int> v(dim, 0);
    v[0] = f.constant_trace;
    for (auto& [i, c] : f.poly_part) {
      auto cs = k.coords(c);
      for (int l = 0; l < k.r(); ++l) v[1 + std::size_t(i - 1) * k.r() + l] = cs[l];
    }
    for (auto& pp : f.pole_parts) {
      std::size_t pi = 0;
      while (!(places[pi] == pp.place)) ++pi;
      int dp = P::deg(places[pi]);
      for (auto& [i, g] : pp.terms)
        for (int j = 0; j < dp; ++j) {
          auto cs = k.coords(P::coeff(k, g, j));
          for (int l = 0; l < k.r(); ++l)
            v[offsets[pi] + (std::size_t(i - 1) * dp + j) * k.r() + l] = cs[l];
        }
    }
    rows.push_back(std::move(v));
  }

  Independence out;
  auto dep = fpla::left_dependency(p, rows);
  if (!dep) {
    out.independent = true;
    return out;
  }
  out.independent = false;
  out.dependency = *dep;
  RatFunc combo = ff::rf_zero(k);
  for (std::size_t i = 0; i < us.size(); ++i)
    for (int rep = 0; rep < out.dependency[i] % p; ++rep) combo = ff::add(k, combo, us[i]);
  if (!is_in_U(k, combo)) throw std::logic_error("asv: dependency certificate failed");
  return out;
}

RatFunc q_power_reduce(const gf::Field& k, const RatFunc& z) {
  RatFunc w = z;
  RatFunc cur = z;
  for (int i = 1; i < k.r(); ++i) {
    cur = ff::pow(k, cur, k.p());
    w = ff::add(k, w, cur);
  }
  return w;
}

std::string to_string(const gf::Field& k, const ASForm& form) {
  if (form.is_zero()) return "0";
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (form.constant_trace != 0)
    append(k.to_string(k.mul(k.trace_one_element(), k.from_int(form.constant_trace))));
  for (auto& [i, c] : form.poly_part) {
    std::string cs = k.to_string(c);
    std::string term = (cs == "1") ? "t" : cs + "*t";
    if (i > 1) term += "^" + std::to_string(i);
    append(term);
  }
  for (auto& pp : form.pole_parts)
    for (auto& [i, g] : pp.terms) {
      std::string term = "(" + P::to_string(k, g, "t") + ")/(" +
                         P::to_string(k, pp.place, "t") + ")";
      if (i > 1) term += "^" + std::to_string(i);
      append(term);
    }
  return s;
}

}  // namespace dyngal::asv
