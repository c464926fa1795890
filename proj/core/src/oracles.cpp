#include "wilsonlab/oracles.hpp"

#include <string>
#include <vector>

#include "wilsonlab/errors.hpp"
#include "wilsonlab/modmath.hpp"

namespace wilsonlab {

namespace {

void require_modulus(std::uint64_t m) {
  if (m == 0 || m > kMaxModulus) {
    throw DomainError("modulus out of range: " + std::to_string(m));
  }
}

// Distinct prime factors by trial division.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t q = 2; q <= n / q; ++q) {
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) {
        n /= q;
      }
    }
  }
  if (n > 1) {
    factors.push_back(n);
  }
  return factors;
}

std::uint64_t coprime_product(std::uint64_t n, std::uint64_t base, std::uint64_t m) {
  const auto factors = distinct_prime_factors(base);
  std::uint64_t acc = 1 % m;
  for (std::uint64_t i = 2; i <= n; ++i) {
    bool coprime = true;
    for (const auto q : factors) {
      if (i % q == 0) {
        coprime = false;
        break;
      }
    }
    if (coprime) {
      acc = mod_mul(acc, i % m, m);
    }
  }
  return acc;
}

}  // namespace

FactorialKind FactorialKind::gauss(std::uint64_t base) { return {FactorialTag::gauss, base}; }

std::string FactorialKind::name() const {
  switch (tag) {
    case FactorialTag::factorial:
      return "factorial";
    case FactorialTag::double_factorial:
      return "double";
    case FactorialTag::hyper:
      return "hyper";
    case FactorialTag::sub:
      return "sub";
    case FactorialTag::super:
      return "super";
    case FactorialTag::gauss:
      return "gauss(" + std::to_string(gauss_base) + ")";
    case FactorialTag::unit_product:
      return "unit-product";
  }
  return "?";
}

std::uint64_t factorial_mod(std::uint64_t n, std::uint64_t m) {
  require_modulus(m);
  std::uint64_t acc = 1 % m;
  for (std::uint64_t k = 2; k <= n && acc != 0; ++k) {
    acc = mod_mul(acc, k % m, m);
  }
  return acc;
}

std::uint64_t double_factorial_mod(std::uint64_t n, std::uint64_t m) {
  require_modulus(m);
  std::uint64_t acc = 1 % m;
  for (std::uint64_t k = n; k >= 2 && acc != 0; k -= 2) {
    acc = mod_mul(acc, k % m, m);
  }
  return acc;
}

std::uint64_t hyperfactorial_mod(std::uint64_t n, std::uint64_t m) {
  require_modulus(m);
  std::uint64_t acc = 1 % m;
  for (std::uint64_t k = 2; k <= n && acc != 0; ++k) {
    acc = mod_mul(acc, mod_pow(k, k, m), m);
  }
  return acc;
}

std::uint64_t superfactorial_mod(std::uint64_t n, std::uint64_t m) {
  require_modulus(m);
  std::uint64_t fact = 1 % m;
  std::uint64_t acc = 1 % m;
  for (std::uint64_t k = 2; k <= n && acc != 0; ++k) {
    fact = mod_mul(fact, k % m, m);
    acc = mod_mul(acc, fact, m);
  }
  return acc;
}

std::uint64_t subfactorial_mod(std::uint64_t n, std::uint64_t m) {
  require_modulus(m);
  // No early exit: the +-1 term revives a zero partial value.
  std::uint64_t acc = 1 % m;
  for (std::uint64_t k = 1; k <= n; ++k) {
    acc = mod_mul(acc, k % m, m);
    acc = (k & 1) ? mod_sub(acc, 1 % m, m) : mod_add(acc, 1 % m, m);
  }
  return acc;
}

std::uint64_t gauss_factorial_mod(std::uint64_t n, std::uint64_t base, std::uint64_t m) {
  require_modulus(m);
  if (base == 0) {
    throw DomainError("gauss_factorial_mod: coprimality base must be at least 1");
  }
  return coprime_product(n, base, m);
}

std::uint64_t unit_product_mod(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("unit_product_mod: n must be at least 2");
  }
  require_modulus(n);
  return coprime_product(n - 1, n, n);
}

std::uint64_t evaluate_oracle(const FactorialKind& kind, std::uint64_t n, std::uint64_t m) {
  switch (kind.tag) {
    case FactorialTag::factorial:
      return factorial_mod(n, m);
    case FactorialTag::double_factorial:
      return double_factorial_mod(n, m);
    case FactorialTag::hyper:
      return hyperfactorial_mod(n, m);
    case FactorialTag::sub:
      return subfactorial_mod(n, m);
    case FactorialTag::super:
      return superfactorial_mod(n, m);
    case FactorialTag::gauss:
      return gauss_factorial_mod(n, kind.gauss_base, m);
    case FactorialTag::unit_product:
      return unit_product_mod(n);
  }
  throw DomainError("unknown factorial kind");
}

}  // namespace wilsonlab
