#include <doctest.h>

#include <limits>

#include "support/brute.hpp"
#include "wilsonlab/modmath.hpp"

using namespace wilsonlab;
namespace t = wilsonlab::testing;

TEST_SUITE("modmath") {
  TEST_CASE("mod_mul examples") {
    CHECK(mod_mul(3, 5, 7) == 1);
    CHECK(mod_mul(0, 123, 1000) == 0);
    for (const std::uint64_t m : std::initializer_list<std::uint64_t>{2, 97, (1ULL << 32) + 15, kMaxModulus - 1, kMaxModulus}) {
      CHECK(mod_mul(m - 1, m - 1, m) == 1);
    }
  }

  TEST_CASE("mod_mul is exact above 32 bits") {
    auto& rng = t::rng();
    for (int trial = 0; trial < 2000; ++trial) {
      const std::uint64_t m = (rng() % kMaxModulus) + 1;
      const std::uint64_t a = rng() % m;
      const std::uint64_t b = rng() % m;
      const auto expected = static_cast<std::uint64_t>(static_cast<t::u128>(a) * b % m);
      REQUIRE(mod_mul(a, b, m) == expected);
    }
  }

  TEST_CASE("mod_pow examples") {
    CHECK(mod_pow(2, 3, 5) == 3);
    CHECK(mod_pow(3, 4, 48) == 33);
    CHECK(mod_pow(17, 0, 10) == 1);
    CHECK(mod_pow(17, 0, 1) == 0);
    for (std::uint64_t m = 1; m < 40; ++m) {
      for (std::uint64_t b = 0; b < 12; ++b) {
        for (std::uint64_t e = 0; e < 20; ++e) {
          REQUIRE(mod_pow(b, e, m) == t::brute_pow(b, e, m));
        }
      }
    }
  }

  TEST_CASE("bezout") {
    const auto r = bezout(3, 4);
    CHECK(r.g == 1);
    CHECK(3 * r.x + 4 * r.y == 1);
    CHECK(bezout(6, 4).g == 2);
    CHECK(bezout(-6, 4).g == 2);
    CHECK(bezout(0, 5).g == 5);
    CHECK_THROWS_AS(bezout(0, 0), DomainError);

    auto& rng = t::rng();
    for (int trial = 0; trial < 1000; ++trial) {
      const auto a = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
      const auto b = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
      if (a == 0 && b == 0) {
        continue;
      }
      const auto [g, x, y] = bezout(a, b);
      REQUIRE(g == std::gcd(a, b));
      REQUIRE(a * x + b * y == g);
    }
  }

  TEST_CASE("bezout realises the CRT inverse map for n = 2^i (2k+1)") {
    // phi^{-1}(x, y) = b y 2^i + a x (2k+1) with a(2k+1) + b 2^i = 1.
    for (std::uint64_t n = 6; n <= 400; n += 2) {
      const auto d = decompose_even(n);
      if (d.k == 0) {
        continue;
      }
      const auto odd = static_cast<std::int64_t>(d.odd_part());
      const auto pow2 = static_cast<std::int64_t>(std::int64_t{1} << d.i);
      const auto [g, a, b] = bezout(odd, pow2);
      REQUIRE(g == 1);
      for (std::uint64_t x = 0; x < (1ULL << d.i); ++x) {
        for (std::uint64_t y = 0; y < d.odd_part(); y += 3) {
          const auto mapped = Residue::from_signed(b * static_cast<std::int64_t>(y) * pow2 +
                                                       a * static_cast<std::int64_t>(x) * odd,
                                                   n);
          const auto combined = crt_combine(Residue(x, 1ULL << d.i), Residue(y, d.odd_part()));
          REQUIRE(mapped == combined);
        }
      }
    }
  }

  TEST_CASE("mod_inv") {
    CHECK(mod_inv(3, 7) == 5);
    CHECK(mod_inv(2, 13) == 7);
    CHECK(mod_mul(2, 7, 13) == 1);
    CHECK_THROWS_AS(mod_inv(6, 9), NotInvertibleError);
    CHECK_THROWS_AS(mod_inv(1, 1), DomainError);
  }

  TEST_CASE("mod_inv inverts every unit") {
    for (std::uint64_t m = 2; m <= 300; ++m) {
      for (std::uint64_t a = 0; a < m; ++a) {
        const auto expected = t::brute_inverse(a, m);
        if (expected) {
          REQUIRE(mod_inv(a, m) == *expected);
          REQUIRE(mod_mul(a, mod_inv(a, m), m) == 1);
        } else {
          REQUIRE_THROWS_AS(mod_inv(a, m), NotInvertibleError);
        }
      }
    }
    auto& rng = t::rng();
    for (int trial = 0; trial < 500; ++trial) {
      const std::uint64_t m = 2 + rng() % (kMaxModulus - 1);
      const std::uint64_t a = rng() % m;
      if (std::gcd(a, m) == 1) {
        REQUIRE(mod_mul(a, mod_inv(a, m), m) == 1 % m);
      }
    }
  }

  TEST_CASE("crt_combine examples") {
    CHECK(crt_combine(Residue(1, 16), Residue(0, 3)) == Residue(33, 48));
    CHECK(crt_combine(Residue(3, 4), Residue(0, 3)) == Residue(3, 12));
    CHECK(crt_combine(Residue(0, 1), Residue(5, 9)) == Residue(5, 9));
    CHECK_THROWS_AS(crt_combine(Residue(1, 4), Residue(1, 6)), DomainError);
    CHECK_THROWS_AS(crt_combine(Residue(1, 1ULL << 40), Residue(1, (1ULL << 30) + 1)), DomainError);
  }

  TEST_CASE("crt_combine round-trips random x") {
    auto& rng = t::rng();
    for (int trial = 0; trial < 2000; ++trial) {
      std::uint64_t m1 = 1 + rng() % 2'000'000;
      std::uint64_t m2 = 1 + rng() % 2'000'000;
      if (std::gcd(m1, m2) != 1) {
        continue;
      }
      const std::uint64_t x = rng() % (m1 * m2);
      const auto r = crt_combine(Residue(x, m1), Residue(x, m2));
      REQUIRE(r.value() == x);
      REQUIRE(r.modulus() == m1 * m2);
    }
    for (std::uint64_t m1 = 1; m1 < 20; ++m1) {
      for (std::uint64_t m2 = 1; m2 < 20; ++m2) {
        if (std::gcd(m1, m2) != 1) {
          continue;
        }
        for (std::uint64_t x1 = 0; x1 < m1; ++x1) {
          for (std::uint64_t x2 = 0; x2 < m2; ++x2) {
            REQUIRE(crt_combine(Residue(x1, m1), Residue(x2, m2)).value() == t::brute_crt(x1, m1, x2, m2));
          }
        }
      }
    }
  }

  TEST_CASE("classify") {
    CHECK(classify(13).tag == PrimeTag::odd_prime);
    CHECK(classify(13).mod4 == 1);
    CHECK(classify(9).tag == PrimeTag::composite);
    CHECK(classify(2).tag == PrimeTag::two);
    CHECK(classify(1).tag == PrimeTag::composite);
    CHECK(classify(7).mod4 == 3);
    CHECK_THROWS_AS(classify(0), DomainError);
  }

  TEST_CASE("is_prime agrees with trial division up to 10^6") {
    const auto s = t::sieve(1'000'000);
    for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
      REQUIRE(is_prime(n) == s[n]);
      const auto c = classify(n);
      REQUIRE(c.mod4 == n % 4);
      REQUIRE(c.is_prime() == s[n]);
    }
  }

  TEST_CASE("is_prime on large and adversarial inputs") {
    // Strong pseudoprimes to several small bases, and Carmichael numbers.
    for (const std::uint64_t n : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL, 2152302898747ULL,
                                  3474749660383ULL, 341550071728321ULL, 3825123056546413051ULL, 561ULL, 41041ULL,
                                  825265ULL}) {
      CHECK_FALSE(is_prime(n));
    }
    CHECK(is_prime(18446744073709551557ULL));  // 2^64 - 59
    CHECK(is_prime(4611686018427387847ULL));   // 2^62 - 57
    CHECK_FALSE(is_prime(4611686018427387845ULL));
    auto& rng = t::rng();
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint64_t n = 1 + rng() % 100'000'000'000ULL;
      REQUIRE(is_prime(n) == t::trial_division_prime(n));
    }
  }

  TEST_CASE("decompose_even") {
    CHECK(decompose_even(12).i == 2);
    CHECK(decompose_even(12).k == 1);
    CHECK(decompose_even(48).i == 4);
    CHECK(decompose_even(48).k == 1);
    CHECK(decompose_even(8).i == 3);
    CHECK(decompose_even(8).k == 0);
    CHECK_THROWS_AS(decompose_even(9), DomainError);
    CHECK_THROWS_AS(decompose_even(0), DomainError);
    for (std::uint64_t n = 2; n <= 1'000'000; n += 2) {
      const auto d = decompose_even(n);
      REQUIRE(d.i >= 1);
      REQUIRE(d.odd_part() % 2 == 1);
      REQUIRE(d.reconstruct() == n);
    }
  }

  TEST_CASE("prime_power_base") {
    CHECK(prime_power_base(9) == 3u);
    CHECK(prime_power_base(2) == 2u);
    CHECK(prime_power_base(1024) == 2u);
    CHECK(prime_power_base(3486784401ULL) == 3u);  // 3^20
    CHECK_FALSE(prime_power_base(1).has_value());
    CHECK_FALSE(prime_power_base(12).has_value());
    CHECK_FALSE(prime_power_base(36).has_value());
    for (std::uint64_t n = 2; n <= 5000; ++n) {
      std::uint64_t q = 2;
      while (n % q != 0) {
        ++q;
      }
      std::uint64_t rest = n;
      while (rest % q == 0) {
        rest /= q;
      }
      const bool power = rest == 1;
      REQUIRE(prime_power_base(n).has_value() == power);
      if (power) {
        REQUIRE(*prime_power_base(n) == q);
      }
    }
  }

  TEST_CASE("legendre examples") {
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(14, 7) == 0);
    CHECK(legendre(-1, 7) == -1);
    CHECK(legendre(-1, 13) == 1);
    CHECK_THROWS_AS(legendre(2, 9), DomainError);
    CHECK_THROWS_AS(legendre(2, 2), DomainError);
  }

  TEST_CASE("legendre is multiplicative and matches square enumeration") {
    for (const auto p : t::primes_up_to(10'000)) {
      if (p == 2) {
        continue;
      }
      const auto step = p > 500 ? p / 37 : 1;
      for (std::uint64_t a = 0; a < p; a += step) {
        REQUIRE(legendre(static_cast<std::int64_t>(a), p) == t::brute_legendre(static_cast<std::int64_t>(a), p));
        for (std::uint64_t b = 1; b < p; b += step * 7 + 1) {
          if (a % p == 0) {
            continue;
          }
          REQUIRE(legendre(static_cast<std::int64_t>(a * b), p) ==
                  legendre(static_cast<std::int64_t>(a), p) * legendre(static_cast<std::int64_t>(b), p));
        }
      }
    }
  }

  TEST_CASE("second_supplement") {
    CHECK(second_supplement(7) == 1);
    CHECK(second_supplement(5) == -1);
    CHECK(second_supplement(17) == 1);
    CHECK(mod_mul(6, 6, 17) == 2);
    CHECK_THROWS_AS(second_supplement(2), DomainError);
    CHECK_THROWS_AS(second_supplement(15), DomainError);
    for (const auto p : t::primes_up_to(10'000)) {
      if (p == 2) {
        continue;
      }
      const std::uint64_t e = (p * p - 1) / 8;
      REQUIRE(second_supplement(p) == ((e % 2 == 0) ? 1 : -1));
      REQUIRE(second_supplement(p) == legendre(2, p));
    }
  }

  TEST_CASE("sqrt_minus_one") {
    CHECK(sqrt_minus_one(5) == 2);
    CHECK(sqrt_minus_one(13) == 5);
    CHECK(sqrt_minus_one(17) == 4);
    CHECK_THROWS_AS(sqrt_minus_one(7), DomainError);
    CHECK_THROWS_AS(sqrt_minus_one(21), DomainError);
    for (const auto p : t::primes_up_to(5000)) {
      if (p % 4 != 1) {
        continue;
      }
      const auto root = sqrt_minus_one(p);
      REQUIRE(2 * root < p);
      REQUIRE(root * root % p == p - 1);
      std::uint64_t count = 0;
      for (std::uint64_t x = 1; 2 * x < p; ++x) {
        count += (x * x % p == p - 1);
      }
      REQUIRE(count == 1);
    }
  }

  TEST_CASE("Residue stays canonical") {
    const Residue a(10, 7);
    CHECK(a.value() == 3);
    CHECK(Residue::from_signed(-1, 7).value() == 6);
    CHECK(Residue::from_signed(std::numeric_limits<std::int64_t>::min(), 7).value() ==
          static_cast<std::uint64_t>((std::numeric_limits<std::int64_t>::min() % 7 + 7) % 7));
    CHECK((a + Residue(5, 7)).value() == 1);
    CHECK((a - Residue(5, 7)).value() == 5);
    CHECK((a * Residue(5, 7)).value() == 1);
    CHECK((-a).value() == 4);
    CHECK(a.pow(6).value() == 1);
    CHECK(Residue(5, 1).value() == 0);
    CHECK_THROWS_AS(Residue(1, 0), DomainError);
    CHECK_THROWS_AS(a + Residue(1, 5), DomainError);
  }
}
