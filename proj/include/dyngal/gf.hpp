#ifndef DYNGAL_GF_HPP
#define DYNGAL_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dyngal::gf {

/// Element of F_q, encoded as the integer sum coords[i]*p^i of its
/// coordinates over the power basis (1, z, ..., z^{r-1}).
using Fq = std::uint16_t;

/// F_q = F_p[z]/(m(z)) with q = p^r <= 64. Arithmetic is table-driven;
/// all values are immutable after construction.
class Field {
public:
  using Elem = Fq;

  /// modulus: monic over F_p, coefficients low-to-high, degree r >= 1.
  /// Rejects composite p, reducible moduli and q > 64.
  Field(int p, std::vector<int> modulus);

  static Field prime(int p);                 // r = 1, modulus z
  static Field make(int p, int r);           // built-in modulus table
  static Field make(int p, int r, const std::vector<int>& modulus);

  int p() const { return p_; }
  int r() const { return r_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  Fq gen() const;                            // class of z
  bool is_zero(Fq a) const { return a == 0; }

  Fq add(Fq a, Fq b) const { return add_[at(a, b)]; }
  Fq sub(Fq a, Fq b) const { return add_[at(a, neg_[b])]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq mul(Fq a, Fq b) const { return mul_[at(a, b)]; }
  Fq inv(Fq a) const;                        // rejects a = 0
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;
  Fq frobenius(Fq a) const { return frob_[a]; }   // a^p
  Fq pth_root(Fq a) const { return proot_[a]; }   // unique b with b^p = a

  /// Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^{r-1}}, as an element of {0,...,p-1}.
  int trace_to_prime(Fq a) const { return trace_[a]; }

  /// First element (in index order) with trace 1; section of the trace map.
  Fq trace_one_element() const { return gamma_star_; }

  /// a^{(q-1)/ell} == 1, i.e. a is an ell-th power in F_q^x.
  /// Rejects a = 0 and ell not dividing q-1.
  bool is_ell_th_power(Fq a, int ell) const;

  Fq from_int(long long c) const;            // c mod p in the prime subfield
  Fq from_coords(const std::vector<int>& coords) const;
  std::vector<int> coords(Fq a) const;
  Fq element(std::uint64_t index) const;
  std::uint64_t index_of(Fq a) const { return a; }
  std::uint64_t size() const { return q_; }

  std::string to_string(Fq a) const;         // "(1,0)" style; bare digit if r == 1
  std::string describe() const;              // "p=2 r=2 modulus=1,1,1"

  bool same_field(const Field& o) const {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }

private:
  int p_, r_, q_;
  std::vector<int> modulus_;
  std::vector<Fq> add_, mul_, neg_, inv_, frob_, proot_;
  std::vector<std::uint8_t> trace_;
  Fq gamma_star_ = 0;

  std::size_t at(Fq a, Fq b) const { return std::size_t(a) * q_ + b; }
  void build_tables();
};

/// F_{q^d} = F_q[u]/(P(u)) for P monic irreducible of degree d over F_q.
/// Elements are coordinate vectors of length d, low-to-high in u. Residue
/// fields of degree-d places are built this way with P the place polynomial,
/// so the class of u is a root of P.
class ExtField {
public:
  using Elem = std::vector<Fq>;

  ExtField(const Field& base, std::vector<Fq> modulus);

  const Field& base() const { return *base_; }
  int degree() const { return d_; }
  int p() const { return base_->p(); }
  std::uint64_t size() const { return size_; }   // q^d

  Elem zero() const { return Elem(d_, 0); }
  Elem one() const;
  Elem gen() const;                          // class of u (= a root of the modulus)
  bool is_zero(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;             // rejects zero
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem pth_root(const Elem& a) const;

  Elem embed(Fq a) const;
  bool in_base(const Elem& a) const;
  Fq base_part(const Elem& a) const;         // requires in_base(a)

  Elem element(std::uint64_t index) const;   // base-q digits of index
  std::uint64_t index_of(const Elem& a) const;

  std::string to_string(const Elem& a) const;

private:
  const Field* base_;
  std::vector<Fq> modulus_;                  // monic, length d+1
  int d_;
  std::uint64_t size_;

  void reduce(std::vector<Fq>& c) const;     // mod modulus, then resize to d
};

bool is_prime(int n);

}  // namespace dyngal::gf

#endif
