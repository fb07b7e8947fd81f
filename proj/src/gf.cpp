#include "dyngal/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dyngal::gf {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomial arithmetic over F_p on int vectors, used only at
// construction time for modulus checks and table building.
using IPoly = std::vector<int>;

int ideg(const IPoly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

IPoly imul(const IPoly& a, const IPoly& b, int p) {
  if (ideg(a) < 0 || ideg(b) < 0) return {};
  IPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

IPoly imod(IPoly a, const IPoly& m, int p) {
  int dm = ideg(m);
  // m is monic
  for (int i = ideg(a); i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      int k = i - dm + j;
      a[k] = ((a[k] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(dm);
  return a;
}

bool irreducible_over_fp(const IPoly& m, int p) {
  int r = ideg(m);
  if (r < 1) return false;
  if (r == 1) return true;
  // Trial division by every monic polynomial of degree 1..r/2.
  for (int d = 1; 2 * d <= r; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      IPoly g(d + 1, 0);
      long long v = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = int(v % p);
        v /= p;
      }
      g[d] = 1;
      if (ideg(imod(m, g, p)) < 0) return false;
    }
  }
  return true;
}

struct DefaultModulus {
  int p, r;
  std::vector<int> m;
};

// Power-basis moduli for the shipped small fields; re-verified at startup.
const DefaultModulus kDefaultModuli[] = {
    {2, 2, {1, 1, 1}},           // q = 4:  z^2 + z + 1
    {2, 3, {1, 1, 0, 1}},        // q = 8:  z^3 + z + 1
    {3, 2, {2, 2, 1}},           // q = 9:  z^2 + 2z + 2
    {2, 4, {1, 1, 0, 0, 1}},     // q = 16: z^4 + z + 1
    {5, 2, {1, 1, 1}},           // q = 25: z^2 + z + 1
    {3, 3, {1, 2, 0, 1}},        // q = 27: z^3 + 2z + 1
    {2, 5, {1, 0, 1, 0, 0, 1}},  // q = 32: z^5 + z^2 + 1
};

}  // namespace

Field::Field(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("gf: p is not prime");
  for (int& c : modulus_) c = ((c % p_) + p_) % p_;
  r_ = ideg(modulus_);
  if (r_ < 1) throw std::invalid_argument("gf: modulus must have degree >= 1");
  if (r_ > 8) throw std::invalid_argument("gf: extension degree r > 8 unsupported");
  modulus_.resize(r_ + 1);
  if (modulus_[r_] != 1) throw std::invalid_argument("gf: modulus must be monic");
  long long q = 1;
  for (int i = 0; i < r_; ++i) {
    q *= p_;
    if (q > 64) throw std::invalid_argument("gf: q = p^r exceeds 64");
  }
  q_ = int(q);
  if (!irreducible_over_fp(modulus_, p_))
    throw std::invalid_argument("gf: modulus is reducible over F_p");
  build_tables();
}

Field Field::prime(int p) { return Field(p, {0, 1}); }

Field Field::make(int p, int r) {
  if (r == 1) return prime(p);
  for (const auto& dm : kDefaultModuli)
    if (dm.p == p && dm.r == r) return Field(p, dm.m);
  throw std::invalid_argument("gf: no built-in modulus for this (p, r); pass one explicitly");
}

Field Field::make(int p, int r, const std::vector<int>& modulus) {
  if (modulus.empty()) return make(p, r);
  Field f(p, modulus);
  if (f.r() != r) throw std::invalid_argument("gf: modulus degree does not match r");
  return f;
}

void Field::build_tables() {
  auto decode = [&](Fq a) {
    IPoly c(r_, 0);
    int v = a;
    for (int i = 0; i < r_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  };
  auto encode = [&](const IPoly& c) {
    int v = 0;
    for (int i = r_ - 1; i >= 0; --i) v = v * p_ + (i < int(c.size()) ? c[i] : 0);
    return Fq(v);
  };

  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);
  proot_.resize(q_);
  trace_.resize(q_);

  for (int a = 0; a < q_; ++a) {
    IPoly ca = decode(Fq(a));
    IPoly na(r_);
    for (int i = 0; i < r_; ++i) na[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(na);
    for (int b = 0; b < q_; ++b) {
      IPoly cb = decode(Fq(b));
      IPoly s(r_);
      for (int i = 0; i < r_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[at(Fq(a), Fq(b))] = encode(s);
      mul_[at(Fq(a), Fq(b))] = encode(imod(imul(ca, cb, p_), modulus_, p_));
    }
  }
  for (int a = 1; a < q_; ++a) {
    if (inv_[a] != 0) continue;
    for (int b = 1; b < q_; ++b)
      if (mul_[at(Fq(a), Fq(b))] == 1) {
        inv_[a] = Fq(b);
        inv_[b] = Fq(a);
        break;
      }
  }
  for (int a = 0; a < q_; ++a) {
    Fq f = Fq(a);
    for (int i = 1; i < p_; ++i) f = mul_[at(f, Fq(a))];
    frob_[a] = f;
    proot_[std::size_t(f)] = Fq(a);  // Frobenius is a bijection
  }
  for (int a = 0; a < q_; ++a) {
    Fq acc = Fq(a), tr = Fq(a);
    for (int i = 1; i < r_; ++i) {
      acc = frob_[acc];
      tr = add_[at(tr, acc)];
    }
    // The trace lands in the prime subfield, whose elements encode as 0..p-1.
    trace_[a] = std::uint8_t(tr);
  }
  gamma_star_ = 0;
  for (int a = 0; a < q_; ++a)
    if (trace_[a] == 1) {
      gamma_star_ = Fq(a);
      break;
    }
}

Fq Field::gen() const {
  if (r_ == 1) throw std::logic_error("gf: prime field has no generator z");
  return Fq(p_);  // coords (0,1,0,...)
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw std::domain_error("gf: inverse of zero");
  return inv_[a];
}

Fq Field::pow(Fq a, std::uint64_t e) const {
  Fq acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool Field::is_ell_th_power(Fq a, int ell) const {
  if (a == 0) throw std::domain_error("gf: is_ell_th_power requires a != 0");
  if (ell <= 0 || (q_ - 1) % ell != 0)
    throw std::domain_error("gf: ell must divide q-1");
  return pow(a, std::uint64_t((q_ - 1) / ell)) == 1;
}

Fq Field::from_int(long long c) const {
  long long v = ((c % p_) + p_) % p_;
  return Fq(v);
}

Fq Field::from_coords(const std::vector<int>& coords) const {
  if (int(coords.size()) > r_) {
    for (std::size_t i = r_; i < coords.size(); ++i)
      if (coords[i] % p_ != 0)
        throw std::invalid_argument("gf: coordinate vector longer than r");
  }
  int v = 0;
  for (int i = r_ - 1; i >= 0; --i) {
    int c = i < int(coords.size()) ? ((coords[i] % p_) + p_) % p_ : 0;
    v = v * p_ + c;
  }
  return Fq(v);
}

std::vector<int> Field::coords(Fq a) const {
  std::vector<int> c(r_);
  int v = a;
  for (int i = 0; i < r_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Fq Field::element(std::uint64_t index) const {
  if (index >= std::uint64_t(q_)) throw std::out_of_range("gf: element index");
  return Fq(index);
}

std::string Field::to_string(Fq a) const {
  if (r_ == 1) return std::to_string(int(a));
  auto c = coords(a);
  std::string s = "(";
  for (int i = 0; i < r_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "p=" << p_ << " r=" << r_ << " modulus=";
  for (int i = 0; i <= r_; ++i) {
    if (i) os << ",";
    os << modulus_[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ExtField

namespace {

// Minimal polynomial arithmetic over F_q for the constructor-time
// irreducibility check (Rabin's test).
using QPoly = std::vector<Fq>;

int qdeg(const QPoly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

QPoly qtrim(QPoly a) {
  a.resize(qdeg(a) + 1);
  return a;
}

QPoly qmod(const Field& k, QPoly a, const QPoly& m) {
  int dm = qdeg(m);
  Fq lead_inv = k.inv(m[dm]);
  for (int i = qdeg(a); i >= dm; --i) {
    Fq c = k.mul(a[i], lead_inv);
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = k.sub(a[i - dm + j], k.mul(c, m[j]));
  }
  a.resize(dm);
  return a;
}

QPoly qmulmod(const Field& k, const QPoly& a, const QPoly& b, const QPoly& m) {
  QPoly c(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
  }
  return qmod(k, c, m);
}

QPoly qpowmod(const Field& k, QPoly a, std::uint64_t e, const QPoly& m) {
  QPoly acc{1};
  acc = qmod(k, acc, m);
  a = qmod(k, a, m);
  while (e) {
    if (e & 1) acc = qmulmod(k, acc, a, m);
    a = qmulmod(k, a, a, m);
    e >>= 1;
  }
  return acc;
}

QPoly qgcd(const Field& k, QPoly a, QPoly b) {
  a = qtrim(a);
  b = qtrim(b);
  while (qdeg(b) >= 0) {
    QPoly r = qtrim(qmod(k, a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

QPoly qsub(const Field& k, QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = k.sub(a[i], b[i]);
  return a;
}

bool qirreducible(const Field& k, const QPoly& m) {
  int d = qdeg(m);
  if (d < 1) return false;
  if (d == 1) return true;
  QPoly x{0, 1};
  QPoly h = qmod(k, x, m);
  for (int i = 0; i < d; ++i) h = qpowmod(k, h, std::uint64_t(k.q()), m);
  if (qtrim(qsub(k, h, qmod(k, x, m))) != QPoly{}) return false;
  int rem = d;
  for (int l = 2; l <= rem; ++l) {
    if (rem % l != 0) continue;
    while (rem % l == 0) rem /= l;
    QPoly g = qmod(k, x, m);
    for (int i = 0; i < d / l; ++i) g = qpowmod(k, g, std::uint64_t(k.q()), m);
    if (qdeg(qgcd(k, qsub(k, g, x), m)) != 0) return false;
  }
  return true;
}

}  // namespace

ExtField::ExtField(const Field& base, std::vector<Fq> modulus)
    : base_(&base), modulus_(std::move(modulus)) {
  while (!modulus_.empty() && modulus_.back() == 0) modulus_.pop_back();
  d_ = int(modulus_.size()) - 1;
  if (d_ < 1) throw std::invalid_argument("gf: extension modulus must have degree >= 1");
  if (modulus_.back() != 1)
    throw std::invalid_argument("gf: extension modulus must be monic");
  size_ = 1;
  for (int i = 0; i < d_; ++i) {
    size_ *= base.q();
    if (size_ > (std::uint64_t(1) << 40))
      throw std::invalid_argument("gf: extension field too large");
  }
  if (!qirreducible(base, modulus_))
    throw std::invalid_argument("gf: extension modulus is reducible over F_q");
}

ExtField::Elem ExtField::one() const {
  Elem e(d_, 0);
  e[0] = 1;
  return e;
}

ExtField::Elem ExtField::gen() const {
  Elem e(d_, 0);
  if (d_ == 1) {
    // u is the root of a linear modulus u + c, i.e. u = -c.
    e[0] = base_->neg(modulus_[0]);
  } else {
    e[1] = 1;
  }
  return e;
}

bool ExtField::is_zero(const Elem& a) const {
  for (Fq c : a)
    if (c != 0) return false;
  return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem c(d_);
  for (int i = 0; i < d_; ++i) c[i] = base_->add(a[i], b[i]);
  return c;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem c(d_);
  for (int i = 0; i < d_; ++i) c[i] = base_->sub(a[i], b[i]);
  return c;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem c(d_);
  for (int i = 0; i < d_; ++i) c[i] = base_->neg(a[i]);
  return c;
}

void ExtField::reduce(std::vector<Fq>& c) const {
  for (int i = int(c.size()) - 1; i >= d_; --i) {
    Fq top = c[i];
    if (top == 0) continue;
    c[i] = 0;
    for (int j = 0; j < d_; ++j)
      c[i - d_ + j] = base_->sub(c[i - d_ + j], base_->mul(top, modulus_[j]));
  }
  c.resize(d_, 0);
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  std::vector<Fq> c(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_; ++j)
      if (b[j] != 0) c[i + j] = base_->add(c[i + j], base_->mul(a[i], b[j]));
  }
  reduce(c);
  return c;
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const {
  Elem acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("gf: inverse of zero in extension field");
  return pow(a, size_ - 2);
}

ExtField::Elem ExtField::pth_root(const Elem& a) const {
  // Frobenius x -> x^p is bijective; its inverse is x -> x^{p^{rd-1}},
  // computed by chained p-powers to keep exponents small.
  int steps = base_->r() * d_ - 1;
  Elem b = a;
  for (int i = 0; i < steps; ++i) b = pow(b, std::uint64_t(base_->p()));
  return b;
}

ExtField::Elem ExtField::embed(Fq a) const {
  Elem e(d_, 0);
  e[0] = a;
  return e;
}

bool ExtField::in_base(const Elem& a) const {
  for (int i = 1; i < d_; ++i)
    if (a[i] != 0) return false;
  return true;
}

Fq ExtField::base_part(const Elem& a) const {
  if (!in_base(a)) throw std::domain_error("gf: element not in base field");
  return a[0];
}

ExtField::Elem ExtField::element(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("gf: extension element index");
  Elem e(d_);
  for (int i = 0; i < d_; ++i) {
    e[i] = Fq(index % base_->q());
    index /= base_->q();
  }
  return e;
}

std::uint64_t ExtField::index_of(const Elem& a) const {
  std::uint64_t v = 0;
  for (int i = d_ - 1; i >= 0; --i) v = v * base_->q() + a[i];
  return v;
}

std::string ExtField::to_string(const Elem& a) const {
  std::string s = "[";
  for (int i = 0; i < d_; ++i) {
    if (i) s += ",";
    s += base_->to_string(a[i]);
  }
  return s + "]";
}

}  // namespace dyngal::gf
