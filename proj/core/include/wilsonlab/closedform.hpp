#pragma once

/**
 * @file closedform.hpp
 * @brief Wilson-type closed forms for the factorial family.
 *
 * Each function predicts a residue that the matching oracle computes by
 * brute force. Signs come back as canonical residues (-1 is m-1) unless the
 * function is documented to return an int sign.
 *
 * Cost: df_even, subfactorial_closed, wilson_residue and gauss_wilson are
 * O(log n) or close to it. Everything that needs quad_stats (df_prime and
 * its callers) costs O(p) by nature of the statistics.
 */

#include <cstdint>
#include <optional>

namespace wilsonlab {

/// Counting statistics of an odd prime p over 1 <= j < p/2.
struct QuadStats {
  std::uint64_t p = 0;
  // Nonresidues j with 2 < j < p/2. Equals N - [(2/p) = -1] for p >= 5;
  // at p = 3 both are 0.
  std::uint64_t nu = 0;
  // Nonresidues j < p/2.
  std::uint64_t big_n = 0;
  // j < p/2 whose inverse mod p is also < p/2. Always odd.
  std::uint64_t mu = 0;
  // Root of -1 below p/2; present iff p = 1 (mod 4).
  std::optional<std::uint64_t> i_p;
};

/// (n-1)! mod n: -1 for primes, 2 for n = 4, else 0. Requires n >= 2.
std::uint64_t wilson_residue(std::uint64_t n);

/// One pass over j < p/2. Throws DomainError unless p is an odd prime.
QuadStats quad_stats(std::uint64_t p);

/// (p-1)!! = (-1)^nu for primes p = 3 (mod 4), p >= 7. At p = 3 the nu
/// form is wrong (nu = 0 but 2!! = -1 mod 3) and (2/p) (-1)^N is used.
std::uint64_t df_prime_3mod4(std::uint64_t p);

/// (p-1)!! for any odd prime, from mu (and i_p when p = 1 mod 4).
std::uint64_t df_prime(std::uint64_t p);

/// Sign s with (((p-1)/2)!)^2 = s (mod p), namely (-1)^((p+1)/2).
int half_factorial_square_sign(std::uint64_t p);

/// (p-1)!! as (2/p) * ((p-1)/2)!.
std::uint64_t df_via_legendre(std::uint64_t p);

/// sf(p-1) mod p for any prime p; equals (p-1)!!.
std::uint64_t sf_prime(std::uint64_t p);

/// sf(p-1) as (-1)^((p^2-1)/8) * ((p-1)/2)!. Same arithmetic as
/// df_via_legendre, reached through the superfactorial cancellation.
std::uint64_t sf_prime_half_form(std::uint64_t p);

/// H(p-1) = (-1)^((p-1)/2) (p-1)!! mod p for odd primes.
std::uint64_t hyper_prime(std::uint64_t p);

/// (n-1)!! mod n for odd composite n: 6 at n = 9, otherwise 0.
std::uint64_t df_odd_composite(std::uint64_t n);

/// (n-1)!! mod n for even n = 2^i (2k+1):
///   i = 1  ->  2k+1
///   i = 2  ->  -(2k+1)^2
///   i >= 3 ->  (2k+1)^(2^(i-2))
/// The i = 2 branch is -(2k+1)^2, not -(2k+1); the two differ at n = 12.
std::uint64_t df_even(std::uint64_t n);

/// Product of the units mod n: -1 when n is 4, p^a or 2p^a (p odd prime),
/// 1 otherwise. Requires n >= 2.
std::uint64_t gauss_wilson(std::uint64_t n);

/// !n mod n = (-1)^n mod n. Requires n >= 1.
std::uint64_t subfactorial_closed(std::uint64_t n);

/// (n-1)!! mod n for every n >= 2, dispatching on parity and primality.
std::uint64_t df_closed(std::uint64_t n);

}  // namespace wilsonlab
