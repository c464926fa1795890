#include "wilsonlab/modmath.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace wilsonlab {

namespace {

std::uint64_t reduce_signed(std::int64_t value, std::uint64_t modulus) {
  if (value >= 0) {
    return static_cast<std::uint64_t>(value) % modulus;
  }
  // -(value + 1) avoids overflow at INT64_MIN.
  const auto magnitude = static_cast<std::uint64_t>(-(value + 1)) + 1;
  const auto r = magnitude % modulus;
  return r == 0 ? 0 : modulus - r;
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t witness, std::uint64_t d, unsigned s) {
  std::uint64_t x = mod_pow(witness % n, d, n);
  if (x == 1 || x == n - 1) {
    return true;
  }
  for (unsigned r = 1; r < s; ++r) {
    x = mod_mul(x, x, n);
    if (x == n - 1) {
      return true;
    }
  }
  return false;
}

}  // namespace

Residue::Residue(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  if (modulus == 0) {
    throw DomainError("modulus must be at least 1");
  }
  value_ = value % modulus;
}

Residue Residue::from_signed(std::int64_t value, std::uint64_t modulus) {
  if (modulus == 0) {
    throw DomainError("modulus must be at least 1");
  }
  return Residue(reduce_signed(value, modulus), modulus);
}

void Residue::require_same_modulus(const Residue& rhs) const {
  if (rhs.modulus_ != modulus_) {
    throw DomainError("residues have different moduli");
  }
}

Residue Residue::operator+(const Residue& rhs) const {
  require_same_modulus(rhs);
  return Residue(mod_add(value_, rhs.value_, modulus_), modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
  require_same_modulus(rhs);
  return Residue(mod_sub(value_, rhs.value_, modulus_), modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
  require_same_modulus(rhs);
  return Residue(mod_mul(value_, rhs.value_, modulus_), modulus_);
}

Residue Residue::operator-() const { return Residue(mod_sub(0, value_, modulus_), modulus_); }

Residue Residue::pow(std::uint64_t exp) const { return Residue(mod_pow(value_, exp, modulus_), modulus_); }

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return a >= m - b ? a - (m - b) : a + b;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  if (m == 1) {
    return 0;
  }
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      result = mod_mul(result, base, m);
    }
    base = mod_mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t sign_residue(int sign, std::uint64_t m) noexcept {
  if (m == 1) {
    return 0;
  }
  return sign < 0 ? m - 1 : 1;
}

BezoutResult bezout(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) {
    throw DomainError("bezout: both inputs are zero");
  }
  detail::int128 old_r = a, r = b;
  detail::int128 old_x = 1, x = 0;
  detail::int128 old_y = 0, y = 1;
  while (r != 0) {
    const detail::int128 q = old_r / r;
    detail::int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {static_cast<std::int64_t>(old_r), static_cast<std::int64_t>(old_x),
          static_cast<std::int64_t>(old_y)};
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
  if (m < 2 || m > kMaxModulus) {
    throw DomainError("mod_inv: modulus out of range: " + std::to_string(m));
  }
  a %= m;
  const auto [g, x, y] = bezout(static_cast<std::int64_t>(a), static_cast<std::int64_t>(m));
  (void)y;
  if (g != 1) {
    throw NotInvertibleError("mod_inv: " + std::to_string(a) + " is not invertible modulo " +
                             std::to_string(m));
  }
  return reduce_signed(x, m);
}

Residue crt_combine(const Residue& x1, const Residue& x2) {
  const std::uint64_t m1 = x1.modulus();
  const std::uint64_t m2 = x2.modulus();
  if (m1 > kMaxModulus || m2 > kMaxModulus || std::gcd(m1, m2) != 1) {
    throw DomainError("crt_combine: moduli must be coprime and in range");
  }
  if (m1 > kMaxModulus / m2) {
    throw DomainError("crt_combine: product of moduli exceeds kMaxModulus");
  }
  const std::uint64_t m = m1 * m2;
  if (m1 == 1) {
    return Residue(x2.value(), m);
  }
  if (m2 == 1) {
    return Residue(x1.value(), m);
  }
  // r = x1 + m1 * t with t = (x2 - x1) * m1^{-1} mod m2.
  const std::uint64_t t = mod_mul(mod_sub(x2.value(), x1.value() % m2, m2), mod_inv(m1 % m2, m2), m2);
  return Residue(x1.value() + m1 * t, m);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) {
    return false;
  }
  static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const auto q : kWitnesses) {
    if (n % q == 0) {
      return n == q;
    }
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3e24, so on every 64-bit n.
  for (const auto w : kWitnesses) {
    if (!miller_rabin_round(n, w, d, s)) {
      return false;
    }
  }
  return true;
}

PrimeClassification classify(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("classify: n must be positive");
  }
  const auto mod4 = static_cast<unsigned>(n % 4);
  if (n == 2) {
    return {PrimeTag::two, mod4};
  }
  return {is_prime(n) ? PrimeTag::odd_prime : PrimeTag::composite, mod4};
}

EvenDecomposition decompose_even(std::uint64_t n) {
  if (n == 0 || (n & 1) != 0) {
    throw DomainError("decompose_even: n must be even and positive, got " + std::to_string(n));
  }
  unsigned i = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++i;
  }
  return {i, (n - 1) / 2};
}

std::uint64_t integer_root(std::uint64_t n, unsigned e) noexcept {
  if (e <= 1 || n < 2) {
    return n;
  }
  // Binary search on r with r^e <= n, checked without overflow.
  auto fits = [n, e](std::uint64_t r) {
    detail::uint128 acc = 1;
    for (unsigned j = 0; j < e; ++j) {
      acc *= r;
      if (acc > n) {
        return false;
      }
    }
    return true;
  };
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << ((64 + e - 1) / e);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) noexcept {
  if (n < 2) {
    return std::nullopt;
  }
  for (unsigned e = 1; e < 64; ++e) {
    const std::uint64_t r = integer_root(n, e);
    if (r < 2) {
      break;
    }
    detail::uint128 acc = 1;
    for (unsigned j = 0; j < e; ++j) {
      acc *= r;
    }
    if (acc == n && is_prime(r)) {
      return r;
    }
  }
  return std::nullopt;
}

namespace detail {

int euler_criterion(std::uint64_t a, std::uint64_t p) noexcept {
  a %= p;
  if (a == 0) {
    return 0;
  }
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

void require_odd_prime(std::uint64_t p, const char* what) {
  if (p == 2 || !is_prime(p)) {
    throw DomainError(std::string(what) + ": " + std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace detail

int legendre(std::int64_t a, std::uint64_t p) {
  detail::require_odd_prime(p, "legendre");
  return detail::euler_criterion(reduce_signed(a, p), p);
}

int second_supplement(std::uint64_t p) {
  detail::require_odd_prime(p, "second_supplement");
  // (p^2-1)/8 is even iff p = +-1 (mod 8).
  const auto r = p % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

std::uint64_t sqrt_minus_one(std::uint64_t p) {
  if (p % 4 != 1 || !is_prime(p)) {
    throw DomainError("sqrt_minus_one: " + std::to_string(p) + " is not a prime = 1 (mod 4)");
  }
  // ((p-1)/2)! squares to -1 when p = 1 (mod 4).
  std::uint64_t w = 1;
  for (std::uint64_t j = 2; j <= (p - 1) / 2; ++j) {
    w = mod_mul(w, j, p);
  }
  std::uint64_t root = std::min(w, p - w);
  if (mod_mul(root, root, p) != p - 1) {
    for (root = 1; root <= p / 2; ++root) {
      if (mod_mul(root, root, p) == p - 1) {
        break;
      }
    }
  }
  return root;
}

}  // namespace wilsonlab
