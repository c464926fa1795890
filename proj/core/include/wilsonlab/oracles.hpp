#pragma once

/**
 * @file oracles.hpp
 * @brief Direct O(n) modular evaluators for the factorial family.
 *
 * These are the ground truth against which every closed form is checked.
 * They only ever multiply out the defining product (or run the defining
 * recurrence) and never call into closedform.
 *
 * Empty products are 1, so 0! = 0!! = H(0) = sf(0) = !0 = 1 (reduced mod m).
 */

#include <cstdint>
#include <string>

namespace wilsonlab {

enum class FactorialTag { factorial, double_factorial, hyper, sub, super, gauss, unit_product };

struct FactorialKind {
  FactorialTag tag = FactorialTag::factorial;
  // Coprimality base of the Gauss factorial n_m!; ignored for other tags.
  std::uint64_t gauss_base = 1;

  static FactorialKind gauss(std::uint64_t base);

  std::string name() const;

  friend bool operator==(const FactorialKind&, const FactorialKind&) = default;
};

/// n! mod m.
std::uint64_t factorial_mod(std::uint64_t n, std::uint64_t m);

/// n!! mod m: n (n-2) (n-4) ... down to 2 or 1.
std::uint64_t double_factorial_mod(std::uint64_t n, std::uint64_t m);

/// H(n) = prod k^k, one mod_pow per factor.
std::uint64_t hyperfactorial_mod(std::uint64_t n, std::uint64_t m);

/// sf(n) = prod k!, maintaining the running k! in the same pass.
std::uint64_t superfactorial_mod(std::uint64_t n, std::uint64_t m);

/// Derangement count !n mod m via !k = k * !(k-1) + (-1)^k.
std::uint64_t subfactorial_mod(std::uint64_t n, std::uint64_t m);

/// Gauss factorial n_b!: product of i <= n with gcd(i, b) = 1, mod m.
std::uint64_t gauss_factorial_mod(std::uint64_t n, std::uint64_t base, std::uint64_t m);

/// Product of the units of Z/nZ, mod n. Throws DomainError for n < 2.
std::uint64_t unit_product_mod(std::uint64_t n);

/// Dispatches on kind. For unit_product the argument n is the modulus and m
/// is ignored.
std::uint64_t evaluate_oracle(const FactorialKind& kind, std::uint64_t n, std::uint64_t m);

}  // namespace wilsonlab
