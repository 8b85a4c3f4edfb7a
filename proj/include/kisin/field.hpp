#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace kisin {

// An element of F_{p^m}, encoded as sum c_i p^i over its coordinates in the
// power basis of the defining modulus.
struct Fq {
  std::uint32_t code = 0;
  friend bool operator==(Fq, Fq) = default;
  friend auto operator<=>(Fq, Fq) = default;
};

bool is_prime(int n);

// Irreducibility of a monic polynomial over F_p, coefficients little-endian
// (poly.back() is the leading 1).
bool is_irreducible(std::span<const int> poly, int p);

// Smallest monic irreducible polynomial of degree m, ordering candidates by
// their coefficient vector read from the x^{m-1} coefficient down.
std::vector<int> default_modulus(int p, int m);

class GaloisField {
 public:
  GaloisField(int p, int m, std::vector<int> modulus = {});

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq element(std::uint32_t code) const;
  Fq from_int(long long n) const;
  Fq from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Fq x) const;
  Fq generator() const { return Fq{exp_[1]}; }

  Fq add(Fq a, Fq b) const {
    if (small_) return Fq{add_[a.code * q_ + b.code]};
    return add_digits(a, b, false);
  }
  Fq sub(Fq a, Fq b) const {
    if (small_) return Fq{add_[a.code * q_ + neg_[b.code]]};
    return add_digits(a, b, true);
  }
  Fq neg(Fq a) const { return Fq{neg_[a.code]}; }
  Fq mul(Fq a, Fq b) const {
    if (a.code == 0 || b.code == 0) return Fq{0};
    return Fq{exp_[log_[a.code] + log_[b.code]]};
  }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, long long e) const;
  Fq frobenius(Fq a) const { return pow(a, p_); }

  std::vector<Fq> elements() const;
  std::vector<Fq> units() const;

 private:
  Fq add_digits(Fq a, Fq b, bool subtract) const;
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  int p_;
  int m_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  bool small_ = false;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> exp_;  // doubled, so exp_[i + j] needs no reduction
  std::vector<std::uint32_t> log_;
};

struct GlobalParams {
  int p = 3;
  int f = 1;
  int m = 1;
  int N = 4;
  std::vector<int> field_poly;  // empty selects default_modulus(p, m)

  // Throws InvalidInput unless p is an odd prime, f | m, N >= p + 1 and the
  // modulus (if given) is monic irreducible of degree m.
  void validate() const;
  GaloisField make_field() const;
};

}  // namespace kisin
