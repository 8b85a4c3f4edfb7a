#include "kisin/field.hpp"

#include <string>

#include "kisin/errors.hpp"

namespace kisin {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableOrder = 1024;

// Remainder of a modulo b over F_p; b monic.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int k = 0; k <= db; ++k) {
      a[i - db + k] = ((a[i - db + k] - c * b[k]) % p + p) % p;
    }
  }
  if (static_cast<int>(a.size()) > db) a.resize(db);
  return a;
}

bool all_zero(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const int> poly, int p) {
  const int m = static_cast<int>(poly.size()) - 1;
  if (m < 1 || poly.back() != 1) return false;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (int deg = 1; 2 * deg <= m; ++deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> g(deg + 1);
      long long x = idx;
      for (int i = 0; i < deg; ++i) {
        g[i] = static_cast<int>(x % p);
        x /= p;
      }
      g[deg] = 1;
      std::vector<int> a(poly.begin(), poly.end());
      for (int& c : a) c = ((c % p) + p) % p;
      if (all_zero(poly_mod(a, g, p))) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int m) {
  if (m == 1) return {0, 1};
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> poly(m + 1);
    long long x = idx;
    for (int i = 0; i < m; ++i) {
      poly[i] = static_cast<int>(x % p);
      x /= p;
    }
    poly[m] = 1;
    if (is_irreducible(poly, p)) return poly;
  }
  throw DomainError("no irreducible polynomial found");
}

GaloisField::GaloisField(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
  if (m < 1) throw InvalidInput("field degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxOrder) throw InvalidInput("field order too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (modulus_.empty()) {
    modulus_ = default_modulus(p, m);
  } else {
    if (static_cast<int>(modulus_.size()) != m + 1)
      throw InvalidInput("modulus degree does not match field degree");
    for (int& c : modulus_) c = ((c % p) + p) % p;
    if (!is_irreducible(modulus_, p))
      throw InvalidInput("modulus is not monic irreducible");
  }

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) neg_[a] = add_digits(Fq{0}, Fq{a}, true).code;
  small_ = q_ <= kTableOrder;
  if (small_) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) add_[a * q_ + b] = add_digits(Fq{a}, Fq{b}, false).code;
  }

  // Find a generator of the multiplicative group and build log/exp tables.
  const std::uint32_t n = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    bool ok = true;
    for (k = 0; k < n; ++k) {
      if (k > 0 && x == 1) {
        ok = false;
        break;
      }
      exp_[k] = x;
      x = slow_mul(x, g);
    }
    if (ok && x == 1) break;
  }
  for (std::uint32_t k = 0; k < n; ++k) log_[exp_[k]] = k;
  for (std::uint32_t k = n; k < exp_.size(); ++k) exp_[k] = exp_[k - n];
}

Fq GaloisField::add_digits(Fq a, Fq b, bool subtract) const {
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    int da = static_cast<int>(x % p_), db = static_cast<int>(y % p_);
    x /= p_;
    y /= p_;
    int s = subtract ? (da - db + p_) % p_ : (da + db) % p_;
    out += static_cast<std::uint32_t>(s) * place;
    place *= p_;
  }
  return Fq{out};
}

std::uint32_t GaloisField::slow_mul(std::uint32_t a, std::uint32_t b) const {
  std::vector<int> ca(m_), cb(m_);
  for (int i = 0; i < m_; ++i) {
    ca[i] = static_cast<int>(a % p_);
    cb[i] = static_cast<int>(b % p_);
    a /= p_;
    b /= p_;
  }
  std::vector<int> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  auto r = poly_mod(prod, modulus_, p_);
  r.resize(m_, 0);
  std::uint32_t out = 0;
  for (int i = m_ - 1; i >= 0; --i) out = out * p_ + static_cast<std::uint32_t>(r[i]);
  return out;
}

Fq GaloisField::element(std::uint32_t code) const {
  if (code >= q_) throw InvalidInput("field element code out of range");
  return Fq{code};
}

Fq GaloisField::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return Fq{static_cast<std::uint32_t>(r)};
}

Fq GaloisField::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > m_) throw InvalidInput("too many field coordinates");
  std::uint32_t out = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    int c = ((coeffs[i] % p_) + p_) % p_;
    out = out * p_ + static_cast<std::uint32_t>(c);
  }
  return Fq{out};
}

std::vector<int> GaloisField::coeffs(Fq x) const {
  std::vector<int> out(m_);
  std::uint32_t c = x.code;
  for (int i = 0; i < m_; ++i) {
    out[i] = static_cast<int>(c % p_);
    c /= p_;
  }
  return out;
}

Fq GaloisField::inv(Fq a) const {
  if (a.code == 0) throw DomainError("inverse of zero");
  const std::uint32_t n = q_ - 1;
  return Fq{exp_[(n - log_[a.code]) % n]};
}

Fq GaloisField::pow(Fq a, long long e) const {
  if (e == 0) return one();
  if (a.code == 0) {
    if (e < 0) throw DomainError("negative power of zero");
    return zero();
  }
  const long long n = q_ - 1;
  long long k = (static_cast<long long>(log_[a.code]) * (e % n)) % n;
  if (k < 0) k += n;
  return Fq{exp_[k]};
}

std::vector<Fq> GaloisField::elements() const {
  std::vector<Fq> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.push_back(Fq{c});
  return out;
}

std::vector<Fq> GaloisField::units() const {
  std::vector<Fq> out;
  out.reserve(q_ - 1);
  for (std::uint32_t c = 1; c < q_; ++c) out.push_back(Fq{c});
  return out;
}

void GlobalParams::validate() const {
  if (p < 3 || !is_prime(p)) throw InvalidInput("p must be an odd prime");
  if (f < 1) throw InvalidInput("f must be positive");
  if (m < 1 || m % f != 0) throw InvalidInput("f must divide m");
  if (N < p + 1) throw InvalidInput("precision N must be at least p + 1");
  if (!field_poly.empty()) {
    if (static_cast<int>(field_poly.size()) != m + 1 || !is_irreducible(field_poly, p))
      throw InvalidInput("field_poly must be monic irreducible of degree m");
  }
}

GaloisField GlobalParams::make_field() const {
  validate();
  return GaloisField(p, m, field_poly);
}

}  // namespace kisin
