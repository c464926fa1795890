#pragma once

/**
 * @file modmath.hpp
 * @brief Word-size modular arithmetic used by every other module.
 *
 * All values are canonical residues in [0, m). Products go through a
 * 128-bit intermediate (or a plain 64-bit product when m fits in 32 bits),
 * so every operation is exact on the whole supported modulus range.
 */

#include <cstdint>
#include <optional>

#include "wilsonlab/errors.hpp"

namespace wilsonlab {

/// Largest modulus accepted by the library. Keeps m1*m2 in crt_combine and
/// the signed Bezout coefficients inside 64 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

namespace detail {
__extension__ typedef unsigned __int128 uint128;
__extension__ typedef __int128 int128;
}  // namespace detail

/// A value together with its modulus; always canonical.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);

  static Residue from_signed(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  Residue operator-() const;
  Residue pow(std::uint64_t exp) const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  void require_same_modulus(const Residue& rhs) const;

  std::uint64_t value_;
  std::uint64_t modulus_;
};

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;

/// (a*b) mod m for 0 <= a,b < m.
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  if (m <= (std::uint64_t{1} << 32)) {
    return (a * b) % m;
  }
  return static_cast<std::uint64_t>(static_cast<detail::uint128>(a) * b % m);
}

/// base^exp mod m by square-and-multiply. base need not be reduced.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Maps a sign (+1 / -1) to its canonical residue mod m (-1 -> m-1).
std::uint64_t sign_residue(int sign, std::uint64_t m) noexcept;

struct BezoutResult {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

/// g = gcd(a, b) > 0 with a*x + b*y = g. Throws DomainError if a = b = 0.
BezoutResult bezout(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m (m >= 2). Throws NotInvertibleError if gcd(a,m) != 1.
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m);

/// The unique r mod m1*m2 with r = x1 (mod m1) and r = x2 (mod m2).
/// Throws DomainError for non-coprime moduli or a product above kMaxModulus.
Residue crt_combine(const Residue& x1, const Residue& x2);

enum class PrimeTag { composite, two, odd_prime };

/// Primality class of n. `composite` covers every non-prime, including 1.
/// mod4 is n mod 4 for every n.
struct PrimeClassification {
  PrimeTag tag;
  unsigned mod4;

  bool is_prime() const noexcept { return tag != PrimeTag::composite; }
};

/// Deterministic Miller-Rabin; exact on all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// Throws DomainError for n = 0.
PrimeClassification classify(std::uint64_t n);

/// n = 2^i * (2k+1) with i >= 1.
struct EvenDecomposition {
  unsigned i;
  std::uint64_t k;

  std::uint64_t odd_part() const noexcept { return 2 * k + 1; }
  std::uint64_t reconstruct() const noexcept { return odd_part() << i; }
};

/// Throws DomainError for odd n (and n = 0).
EvenDecomposition decompose_even(std::uint64_t n);

/// Floor of the e-th root of n (e >= 1).
std::uint64_t integer_root(std::uint64_t n, unsigned e) noexcept;

/// If n = q^a for a prime q and a >= 1, returns q.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n) noexcept;

/// Legendre symbol (a/p) via Euler's criterion. a is reduced into [0, p)
/// first. Throws DomainError unless p is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// (-1)^((p^2-1)/8). Throws DomainError unless p is an odd prime.
int second_supplement(std::uint64_t p);

/// The root i_p < p/2 of i^2 = -1 (mod p). Requires p prime, p = 1 (mod 4).
std::uint64_t sqrt_minus_one(std::uint64_t p);

namespace detail {

// Euler's criterion without the primality check; p must be an odd prime.
int euler_criterion(std::uint64_t a, std::uint64_t p) noexcept;

void require_odd_prime(std::uint64_t p, const char* what);

}  // namespace detail

}  // namespace wilsonlab
