#include "wilsonlab/closedform.hpp"

#include <string>
#include <vector>

#include "wilsonlab/errors.hpp"
#include "wilsonlab/modmath.hpp"
#include "wilsonlab/oracles.hpp"

namespace wilsonlab {

namespace {

// Above this, quad_stats evaluates Euler's criterion and Bezout per element
// instead of building O(p) lookup tables.
constexpr std::uint64_t kQuadStatsTableLimit = std::uint64_t{1} << 24;

std::uint64_t parity_sign(std::uint64_t exponent, std::uint64_t m) {
  return sign_residue((exponent & 1) ? -1 : 1, m);
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw DomainError(std::string(what) + ": " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

std::uint64_t wilson_residue(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("wilson_residue: n must be at least 2");
  }
  if (is_prime(n)) {
    return n - 1;
  }
  return n == 4 ? 2 : 0;
}

QuadStats quad_stats(std::uint64_t p) {
  detail::require_odd_prime(p, "quad_stats");
  const std::uint64_t half = (p - 1) / 2;
  QuadStats stats;
  stats.p = p;

  if (p <= kQuadStatsTableLimit) {
    std::vector<char> is_square(p, 0);
    for (std::uint64_t j = 1; j <= half; ++j) {
      is_square[mod_mul(j, j, p)] = 1;
    }
    // inv[j] = -(p / j) * inv[p mod j]; p mod j < j so the table fills forward.
    std::vector<std::uint64_t> inv(half + 1, 0);
    if (half >= 1) {
      inv[1] = 1;
    }
    for (std::uint64_t j = 2; j <= half; ++j) {
      inv[j] = mod_sub(0, mod_mul(p / j, inv[p % j], p), p);
    }
    for (std::uint64_t j = 1; j <= half; ++j) {
      if (!is_square[j]) {
        ++stats.big_n;
        if (j > 2) {
          ++stats.nu;
        }
      }
      if (inv[j] <= half) {
        ++stats.mu;
      }
    }
  } else {
    for (std::uint64_t j = 1; j <= half; ++j) {
      if (detail::euler_criterion(j, p) < 0) {
        ++stats.big_n;
        if (j > 2) {
          ++stats.nu;
        }
      }
      if (mod_inv(j, p) <= half) {
        ++stats.mu;
      }
    }
  }

  if (p % 4 == 1) {
    stats.i_p = sqrt_minus_one(p);
  }
  return stats;
}

std::uint64_t df_prime_3mod4(std::uint64_t p) {
  if (p % 4 != 3 || !is_prime(p)) {
    throw DomainError("df_prime_3mod4: " + std::to_string(p) + " is not a prime = 3 (mod 4)");
  }
  const QuadStats stats = quad_stats(p);
  if (p == 3) {
    // 2 > p/2, so nu misses the nonresidue 2 that its parity argument relies
    // on; (2/3) (-1)^N is the value the counting argument actually gives.
    return mod_mul(sign_residue(detail::euler_criterion(2, p), p), parity_sign(stats.big_n, p), p);
  }
  return parity_sign(stats.nu, p);
}

std::uint64_t df_prime(std::uint64_t p) {
  const QuadStats stats = quad_stats(p);
  const std::uint64_t sign = parity_sign((stats.mu + 1) / 2, p);
  if (stats.i_p) {
    return mod_mul(sign, *stats.i_p, p);
  }
  return sign;
}

int half_factorial_square_sign(std::uint64_t p) {
  detail::require_odd_prime(p, "half_factorial_square_sign");
  return (((p + 1) / 2) & 1) ? -1 : 1;
}

std::uint64_t df_via_legendre(std::uint64_t p) {
  const int two_over_p = second_supplement(p);
  return mod_mul(sign_residue(two_over_p, p), factorial_mod((p - 1) / 2, p), p);
}

std::uint64_t sf_prime(std::uint64_t p) {
  require_prime(p, "sf_prime");
  if (p == 2) {
    return 1;
  }
  return df_prime(p);
}

std::uint64_t sf_prime_half_form(std::uint64_t p) {
  detail::require_odd_prime(p, "sf_prime_half_form");
  // Sum of i for i = 1..(p-1)/2 has the parity of (p^2-1)/8.
  const std::uint64_t half = (p - 1) / 2;
  const std::uint64_t exponent_parity = (half % 4 == 1 || half % 4 == 2) ? 1 : 0;
  return mod_mul(parity_sign(exponent_parity, p), factorial_mod(half, p), p);
}

std::uint64_t hyper_prime(std::uint64_t p) {
  detail::require_odd_prime(p, "hyper_prime");
  return mod_mul(parity_sign((p - 1) / 2, p), df_prime(p), p);
}

std::uint64_t df_odd_composite(std::uint64_t n) {
  if ((n & 1) == 0 || n < 9 || is_prime(n)) {
    throw DomainError("df_odd_composite: " + std::to_string(n) + " is not an odd composite");
  }
  return n == 9 ? 6 : 0;
}

std::uint64_t df_even(std::uint64_t n) {
  const EvenDecomposition d = decompose_even(n);
  const std::uint64_t odd = d.odd_part() % n;
  switch (d.i) {
    case 1:
      return odd;
    case 2:
      return mod_sub(0, mod_mul(odd, odd, n), n);
    default:
      // 2^(i-2) as an exponent: square i-2 times.
      {
        std::uint64_t acc = odd;
        for (unsigned step = 0; step + 2 < d.i; ++step) {
          acc = mod_mul(acc, acc, n);
        }
        return acc;
      }
  }
}

std::uint64_t gauss_wilson(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("gauss_wilson: n must be at least 2");
  }
  if (n > kMaxModulus) {
    throw DomainError("gauss_wilson: n exceeds kMaxModulus");
  }
  const std::uint64_t minus_one = n - 1;
  if (n == 2 || n == 4) {
    return minus_one;
  }
  std::uint64_t odd = n;
  if (odd % 2 == 0) {
    odd /= 2;
    if (odd % 2 == 0) {
      return 1;
    }
  }
  const auto base = prime_power_base(odd);
  return base && *base != 2 ? minus_one : 1;
}

std::uint64_t subfactorial_closed(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("subfactorial_closed: n must be at least 1");
  }
  return parity_sign(n, n);
}

std::uint64_t df_closed(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("df_closed: n must be at least 2");
  }
  if (n % 2 == 0) {
    return df_even(n);
  }
  if (is_prime(n)) {
    return df_prime(n);
  }
  return df_odd_composite(n);
}

}  // namespace wilsonlab
